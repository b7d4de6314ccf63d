#include "blink/pairing.hpp"

#include <algorithm>
#include <functional>

#include "blink/errors.hpp"
#include "blink/intmatrix.hpp"

namespace blink {

PhiMatrix::PhiMatrix(int components, std::vector<int> block_sizes, GroupRingMatrix entries)
    : n_(components), sizes_(std::move(block_sizes)), entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw ValidationError("phi must be square");
}

PhiMatrix build_phi(const SeifertMatrix& d) {
    const int n = d.components();
    const int m = d.size();
    GroupRingMatrix entries(m, m, GroupRingElement::zero(n));
    for (int r = 0; r < m; ++r) {
        const Word t = Word::generator(d.component_of(r));
        for (int c = 0; c < m; ++c) {
            GroupRingElement e = GroupRingElement::monomial(n, Word(), d.entries().at(r, c)) +
                                 GroupRingElement::monomial(n, t, -d.entries().at(c, r));
            entries.at(r, c) = std::move(e);
        }
    }
    return PhiMatrix(n, d.block_sizes(), std::move(entries));
}

PolyMatrix abelianized(const PhiMatrix& phi) {
    const int m = phi.size();
    PolyMatrix out(m, m, LaurentPoly::zero(phi.components()));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) out.at(r, c) = phi.at(r, c).abelianize();
    return out;
}

namespace {

void validate_bits(const std::vector<int>& bits, size_t expected, const std::string& name) {
    if (bits.size() != expected)
        throw ValidationError(name + " must have length " + std::to_string(expected));
    for (int b : bits)
        if (b != 0 && b != 1) throw ValidationError(name + " entries must be 0 or 1");
}

} // namespace

MilnorPairingData build_pairing(const SeifertMatrix& d,
                                std::optional<std::vector<int>> w2,
                                std::optional<std::vector<int>> ks) {
    const int n = d.components();
    const int m = d.size();

    std::vector<int> w2v(m, 0);
    if (w2) {
        validate_bits(*w2, static_cast<size_t>(m), "w2");
        // well-definedness on the cokernel: w2^T (D + D^T) = 0 (mod 2)
        IntMatrix sym = d.symmetrized();
        for (int c = 0; c < m; ++c) {
            Int acc = 0;
            for (int r = 0; r < m; ++r)
                if ((*w2)[r]) acc += sym.at(r, c);
            if (mpz_odd_p(acc.get_mpz_t()))
                throw ValidationError("w2 does not vanish on the image of phi mod 2");
        }
        w2v = *w2;
    }
    if (ks) validate_bits(*ks, static_cast<size_t>(n), "ks");

    MilnorPairingData data{n, build_phi(d), {}, {}, std::move(w2v), std::move(ks)};
    for (int i = 1; i <= n; ++i) {
        data.forms.push_back(intersection_form(d, i));
        const int off = d.block_offset(i);
        const int mi = d.block_sizes()[i - 1];
        IntMatrix col(m, mi);
        for (int r = 0; r < m; ++r)
            for (int k = 0; k < mi; ++k) col.at(r, k) = d.entries().at(r, off + k);
        data.iota.push_back(std::move(col));
    }
    return data;
}

FiniteFunctional::FiniteFunctional(int rank, int generators)
    : rank_(rank), generators_(generators) {
    if (rank < 1) throw ValidationError("functional rank must be >= 1");
    if (generators < 0) throw ValidationError("generator count must be nonnegative");
}

void FiniteFunctional::set(int k, const Word& w, const Rat& value) {
    if (k < 0 || k >= generators_) throw ValidationError("generator index out of range");
    certified_depth_ = -1;
    if (value == 0)
        values_.erase({k, w});
    else
        values_[{k, w}] = value;
}

Rat FiniteFunctional::value(int k, const Word& w) const {
    auto it = values_.find({k, w});
    return it == values_.end() ? Rat(0) : it->second;
}

int FiniteFunctional::support_radius() const {
    int radius = 0;
    for (const auto& [key, _] : values_) radius = std::max(radius, key.second.length());
    return radius;
}

FiniteFunctional FiniteFunctional::translated(const Word& g) const {
    FiniteFunctional out(rank_, generators_);
    for (const auto& [key, val] : values_) out.values_[{key.first, g * key.second}] = val;
    return out;
}

bool FiniteFunctional::operator==(const FiniteFunctional& rhs) const {
    return rank_ == rhs.rank_ && generators_ == rhs.generators_ && values_ == rhs.values_;
}

bool check_functional(const MilnorPairingData& data, FiniteFunctional& u, int depth) {
    if (depth < 0) throw ValidationError("depth must be nonnegative");
    const int m = data.phi.size();
    if (u.rank() != data.n || u.generators() != m)
        throw ValidationError("functional shape does not match the pairing data");
    for (const Word& g : words_up_to_length(data.n, depth)) {
        for (int c = 0; c < m; ++c) {
            Rat acc = 0;
            for (int r = 0; r < m; ++r)
                for (const auto& [w, coef] : data.phi.at(r, c).terms())
                    acc += Rat(coef) * u.value(r, g * w);
            if (acc != 0) return false;
        }
    }
    u.certified_depth_ = depth;
    return true;
}

namespace {

std::vector<Rat> pullback(const IntMatrix& iota, const FiniteFunctional& u) {
    std::vector<Rat> out(iota.cols(), Rat(0));
    const Word identity;
    for (int k = 0; k < iota.cols(); ++k) {
        Rat acc = 0;
        for (int r = 0; r < iota.rows(); ++r)
            if (iota.at(r, k) != 0) acc += Rat(iota.at(r, k)) * u.value(r, identity);
        out[k] = acc;
    }
    return out;
}

Rat form_value(const IntMatrix& form, const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat acc = 0;
    for (int r = 0; r < form.rows(); ++r) {
        if (a[r] == 0) continue;
        for (int c = 0; c < form.cols(); ++c)
            if (form.at(r, c) != 0 && b[c] != 0) acc += a[r] * Rat(form.at(r, c)) * b[c];
    }
    return acc;
}

} // namespace

std::vector<Rat> eval_pairing(const MilnorPairingData& data,
                              const FiniteFunctional& u, const FiniteFunctional& v) {
    const int m = data.phi.size();
    if (u.rank() != data.n || v.rank() != data.n || u.generators() != m || v.generators() != m)
        throw ValidationError("functional shape does not match the pairing data");
    std::vector<Rat> out;
    out.reserve(data.forms.size());
    for (size_t i = 0; i < data.forms.size(); ++i)
        out.push_back(form_value(data.forms[i], pullback(data.iota[i], u),
                                 pullback(data.iota[i], v)));
    return out;
}

SumRelation sum_relation(const MilnorPairingData& data,
                         const FiniteFunctional& u, const FiniteFunctional& v) {
    std::vector<Rat> direct = eval_pairing(data, u, v);
    Rat lhs = 0;
    for (const Rat& x : direct) lhs += x;
    Rat rhs = 0;
    for (int i = 1; i <= data.n; ++i) {
        const Word t = Word::generator(i);
        FiniteFunctional tu = u.translated(t);
        FiniteFunctional tv = v.translated(t);
        rhs += form_value(data.forms[i - 1], pullback(data.iota[i - 1], tu),
                          pullback(data.iota[i - 1], tv));
    }
    return {lhs, rhs, lhs == rhs};
}

int signature_component(const SeifertMatrix& d, int i) {
    return symmetric_signature(intersection_form(d, i));
}

LaurentPoly alexander_knot(const SeifertMatrix& d) {
    if (d.components() != 1)
        throw PreconditionError("alexander_knot needs a one-component matrix; "
                                "use alexander_ideal for links");
    const int m = d.size();
    PolyMatrix p(m, m, LaurentPoly::zero(1));
    const LaurentPoly t = LaurentPoly::variable(1, 1);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            p.at(r, c) = LaurentPoly::constant(1, d.entries().at(r, c)) -
                         t * LaurentPoly::constant(1, d.entries().at(c, r));
    return laurent_det(p).unit_normalized();
}

namespace {

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

void combinations(int total, int choose, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(choose);
    for (int i = 0; i < choose; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        int i = choose - 1;
        while (i >= 0 && idx[i] == total - choose + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < choose; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<LaurentPoly> alexander_ideal(const SeifertMatrix& d, int k) {
    const int m = d.size();
    if (k < 0 || k > m) throw ValidationError("ideal order must lie in 0..m");
    const int s = m - k;
    if (s == 0) return {LaurentPoly::one(d.components())};
    PolyMatrix phi = abelianized(build_phi(d));

    std::vector<LaurentPoly> gens;
    combinations(m, s, [&](const std::vector<int>& rows) {
        combinations(m, s, [&](const std::vector<int>& cols) {
            PolyMatrix minor(s, s, LaurentPoly::zero(d.components()));
            for (int r = 0; r < s; ++r)
                for (int c = 0; c < s; ++c) minor.at(r, c) = phi.at(rows[r], cols[c]);
            LaurentPoly value = laurent_det(minor).unit_normalized();
            if (!value.is_zero()) gens.push_back(std::move(value));
        });
    });
    std::sort(gens.begin(), gens.end(), poly_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

std::pair<Int, Int> leading_trailing(const LaurentPoly& p) {
    if (p.rank() != 1)
        throw PreconditionError("leading_trailing needs a one-variable polynomial");
    if (p.is_zero()) throw PreconditionError("leading_trailing of the zero polynomial");
    LaurentPoly q = p.unit_normalized();
    return {q.terms().rbegin()->second, q.terms().begin()->second};
}

namespace {

std::vector<Int> nontrivial_factors(const std::vector<Int>& diagonal) {
    std::vector<Int> out;
    for (const Int& v : diagonal)
        if (v != 1) out.push_back(v);
    return out;
}

bool all_diagonal_even(const IntMatrix& s) {
    for (int i = 0; i < s.rows(); ++i)
        if (mpz_odd_p(s.at(i, i).get_mpz_t())) return false;
    return true;
}

} // namespace

Fingerprint fingerprint(const SeifertMatrix& d) {
    Fingerprint f;
    f.n = d.components();
    for (int i = 1; i <= d.components(); ++i) {
        IntMatrix form = intersection_form(d, i);
        ComponentFingerprint c;
        c.block_parity = d.block_sizes()[i - 1] % 2;
        c.signature = symmetric_signature(form);
        c.snf_nontrivial = nontrivial_factors(snf_diagonal(form));
        c.even = all_diagonal_even(form);
        f.components.push_back(std::move(c));
    }

    IntMatrix sym = d.symmetrized();
    f.sym_det_abs = abs(det(sym));
    f.sym_signature = symmetric_signature(sym);
    f.sym_snf_nontrivial = nontrivial_factors(snf_diagonal(sym));

    PolyMatrix phi = abelianized(build_phi(d));
    // a 0x0 grid cannot carry the variable count, so pin the rank here
    f.e0 = d.size() == 0 ? LaurentPoly::one(d.components())
                         : laurent_det(phi).unit_normalized();

    // second route to the same abelian-group data: phi^ab at t = -1
    const std::vector<Rat> minus_one(d.components(), Rat(-1));
    IntMatrix at_minus_one(d.size(), d.size());
    for (int r = 0; r < d.size(); ++r)
        for (int c = 0; c < d.size(); ++c) {
            Rat value = phi.at(r, c).eval(minus_one);
            if (value.get_den() != 1)
                throw ValidationError("unexpected denominator in integer evaluation");
            at_minus_one.at(r, c) = value.get_num();
        }
    f.snf_phi_minus_one = nontrivial_factors(snf_diagonal(at_minus_one));
    return f;
}

namespace {

std::string int_list_str(const std::vector<Int>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].get_str();
    }
    return out + "]";
}

} // namespace

std::vector<std::pair<std::string, std::string>> fingerprint_fields(const Fingerprint& f) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("n", std::to_string(f.n));
    for (size_t i = 0; i < f.components.size(); ++i) {
        const std::string base = "component[" + std::to_string(i + 1) + "].";
        const ComponentFingerprint& c = f.components[i];
        out.emplace_back(base + "block_parity", std::to_string(c.block_parity));
        out.emplace_back(base + "signature", std::to_string(c.signature));
        out.emplace_back(base + "snf_nontrivial", int_list_str(c.snf_nontrivial));
        out.emplace_back(base + "even", c.even ? "true" : "false");
    }
    out.emplace_back("sym.det_abs", f.sym_det_abs.get_str());
    out.emplace_back("sym.signature", std::to_string(f.sym_signature));
    out.emplace_back("sym.snf_nontrivial", int_list_str(f.sym_snf_nontrivial));
    out.emplace_back("alexander.e0", f.e0.str());
    out.emplace_back("alexander.snf_phi_at_minus1", int_list_str(f.snf_phi_minus_one));
    return out;
}

FormZ::FormZ(IntMatrix matrix) : m(std::move(matrix)) {
    if (!m.is_symmetric()) throw ValidationError("form matrix must be symmetric");
}

bool form_is_even(const FormZ& f) {
    return all_diagonal_even(f.m);
}

int form_signature(const FormZ& f) {
    return symmetric_signature(f.m);
}

Int p1_evaluation(const FormZ& f) {
    Int value = det(f.m);
    if (abs(value) != 1)
        throw PreconditionError("p1 evaluation needs a unimodular form; det = " +
                                value.get_str());
    return 3 * form_signature(f);
}

} // namespace blink
