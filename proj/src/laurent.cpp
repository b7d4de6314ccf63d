#include "blink/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "blink/errors.hpp"

namespace blink {

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
    if (rank < 1) throw ValidationError("polynomial rank must be >= 1");
}

LaurentPoly LaurentPoly::constant(int rank, Int value) {
    LaurentPoly p(rank);
    p.add_term(Exponents(rank, 0), value);
    return p;
}

LaurentPoly LaurentPoly::variable(int rank, int index) {
    if (index < 1 || index > rank) throw ValidationError("variable index out of range");
    LaurentPoly p(rank);
    Exponents e(rank, 0);
    e[index - 1] = 1;
    p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(int rank, Exponents exps, Int coeff) {
    LaurentPoly p(rank);
    if (static_cast<int>(exps.size()) != rank)
        throw ValidationError("monomial exponent vector has wrong length");
    p.add_term(exps, coeff);
    return p;
}

Int LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (rank_ != rhs.rank_) throw ValidationError("polynomial rank mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    if (rank_ != rhs.rank_) throw ValidationError("polynomial rank mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (rank_ != rhs.rank_) throw ValidationError("polynomial rank mismatch");
    LaurentPoly out(rank_);
    Exponents e(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(rank_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const Int& scalar) const {
    LaurentPoly out(rank_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    if (static_cast<int>(shift.size()) != rank_)
        throw ValidationError("shift vector has wrong length");
    LaurentPoly out(rank_);
    Exponents e(rank_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < rank_; ++i) e[i] = ea[i] + shift[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly out(rank_);
    Exponents e(rank_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < rank_; ++i) e[i] = -ea[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (is_zero()) return *this;
    Exponents shift(rank_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < rank_; ++i)
            shift[i] = first ? -e[i] : std::max(shift[i], -e[i]);
        first = false;
    }
    LaurentPoly out = shifted(shift);
    // terms_ is lex-sorted, so the leading term is the last one
    if (out.terms_.rbegin()->second < 0) out = -out;
    return out;
}

Rat LaurentPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != rank_)
        throw ValidationError("evaluation point has wrong length");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (int i = 0; i < rank_; ++i) {
            long k = e[i];
            if (k == 0) continue;
            if (point[i] == 0) throw ValidationError("evaluation at 0 with a negative exponent");
            Rat base = point[i];
            if (k < 0) {
                base = 1 / base;
                k = -k;
            }
            for (long j = 0; j < k; ++j) term *= base;
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

namespace {

std::string variable_name(int rank, int index) {
    if (rank == 1) return "t";
    return "t" + std::to_string(index + 1);
}

std::string monomial_str(int rank, const LaurentPoly::Exponents& e) {
    std::string out;
    for (int i = 0; i < rank; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(rank, i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        Int mag = abs(c);
        std::string mono = monomial_str(rank_, e);
        std::string body;
        if (mono.empty()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = mono;
        } else {
            body = mag.get_str() + "*" + mono;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + body;
        } else {
            out += (neg ? "-" : "+") + body;
        }
    }
    return out;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ValidationError("division by the zero polynomial");
    if (num.rank() != den.rank()) throw ValidationError("polynomial rank mismatch");
    LaurentPoly quotient(num.rank());
    LaurentPoly rest = num;
    const auto& lead_den = *den.terms_.rbegin();   // lex-leading term

    // for an exact quotient the step count is the quotient's term count,
    // which the exponent spans of num bound; inexact input would otherwise
    // walk down a formal series forever
    long cap = 1;
    if (!num.is_zero()) {
        for (int i = 0; i < num.rank(); ++i) {
            long lo = num.terms_.begin()->first[i], hi = lo;
            for (const auto& [e0, c0] : num.terms_) {
                lo = std::min(lo, e0[i]);
                hi = std::max(hi, e0[i]);
            }
            cap = std::min<long>(1000000000L, cap * (hi - lo + 1));
        }
    }

    LaurentPoly::Exponents e(num.rank());
    for (long step = 0; !rest.is_zero(); ++step) {
        const auto& lead_rest = *rest.terms_.rbegin();
        if (step >= cap ||
            !mpz_divisible_p(lead_rest.second.get_mpz_t(), lead_den.second.get_mpz_t()))
            throw ValidationError("inexact polynomial division");
        Int q;
        mpz_divexact(q.get_mpz_t(), lead_rest.second.get_mpz_t(), lead_den.second.get_mpz_t());
        for (int i = 0; i < num.rank(); ++i) e[i] = lead_rest.first[i] - lead_den.first[i];
        LaurentPoly term = LaurentPoly::monomial(num.rank(), e, q);
        quotient = quotient + term;
        rest = rest - term * den;
    }
    return quotient;
}

LaurentPoly laurent_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant requires a square matrix");
    const int n = m.rows();
    int rank = 1;
    if (n > 0) rank = m.at(0, 0).rank();
    if (n == 0) return LaurentPoly::one(rank);

    PolyMatrix w = m;
    LaurentPoly prev = LaurentPoly::one(rank);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!w.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return LaurentPoly::zero(rank);
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = exact_div(t, prev);
            }
            w.at(i, k) = LaurentPoly::zero(rank);
        }
        prev = w.at(k, k);
    }
    LaurentPoly result = w.at(n - 1, n - 1);
    return sign < 0 ? -result : result;
}

} // namespace blink
