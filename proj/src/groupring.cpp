#include "blink/groupring.hpp"

#include <algorithm>
#include <cstdlib>

#include "blink/errors.hpp"

namespace blink {

namespace {

// letter order: t1 < t1^-1 < t2 < t2^-1 < ...
int letter_key(int letter) {
    return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

} // namespace

Word Word::reduce(std::span<const int> letters, int rank) {
    if (rank < 1) throw ValidationError("word rank must be >= 1");
    Word w;
    w.letters_.reserve(letters.size());
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw ValidationError("generator index out of range: " + std::to_string(l));
        if (!w.letters_.empty() && w.letters_.back() == -l)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

Word Word::generator(int index) {
    if (index < 1) throw ValidationError("generator index out of range");
    Word w;
    w.letters_.push_back(index);
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w;
    w.letters_ = letters_;
    for (int l : rhs.letters_) {
        if (!w.letters_.empty() && w.letters_.back() == -l)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
}

std::vector<long> Word::exponent_sums(int rank) const {
    std::vector<long> sums(rank, 0);
    for (int l : letters_) {
        int g = std::abs(l);
        if (g > rank) throw ValidationError("word uses a generator beyond the rank");
        sums[g - 1] += l > 0 ? 1 : -1;
    }
    return sums;
}

bool Word::operator<(const Word& rhs) const {
    if (letters_.size() != rhs.letters_.size()) return letters_.size() < rhs.letters_.size();
    for (size_t i = 0; i < letters_.size(); ++i) {
        int a = letter_key(letters_[i]), b = letter_key(rhs.letters_[i]);
        if (a != b) return a < b;
    }
    return false;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long run = static_cast<long>(j - i);
        long exp = letters_[i] > 0 ? run : -run;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(std::abs(letters_[i]));
        if (exp != 1) out += "^" + std::to_string(exp);
        i = j;
    }
    return out;
}

GroupRingElement::GroupRingElement(int rank) : rank_(rank) {
    if (rank < 1) throw ValidationError("group ring rank must be >= 1");
}

GroupRingElement GroupRingElement::one(int rank) {
    return monomial(rank, Word(), 1);
}

GroupRingElement GroupRingElement::monomial(int rank, const Word& w, Int coeff) {
    GroupRingElement e(rank);
    for (int l : w.letters())
        if (std::abs(l) > rank) throw ValidationError("word uses a generator beyond the rank");
    e.add_term(w, coeff);
    return e;
}

GroupRingElement GroupRingElement::generator(int rank, int index) {
    if (index < 1 || index > rank) throw ValidationError("generator index out of range");
    return monomial(rank, Word::generator(index), 1);
}

Int GroupRingElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GroupRingElement::require_same_rank(const GroupRingElement& rhs) const {
    if (rank_ != rhs.rank_) throw ValidationError("group ring rank mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    require_same_rank(rhs);
    GroupRingElement out = *this;
    for (const auto& [w, c] : rhs.terms_) out.add_term(w, c);
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    require_same_rank(rhs);
    GroupRingElement out = *this;
    for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    require_same_rank(rhs);
    GroupRingElement out(rank_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : rhs.terms_) out.add_term(wa * wb, ca * cb);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(rank_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const Int& scalar) const {
    GroupRingElement out(rank_);
    if (scalar == 0) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scalar);
    return out;
}

LaurentPoly GroupRingElement::abelianize() const {
    LaurentPoly out(rank_);
    for (const auto& [w, c] : terms_)
        out = out + LaurentPoly::monomial(rank_, w.exponent_sums(rank_), c);
    return out;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        const bool neg = c < 0;
        Int mag = abs(c);
        std::string body;
        if (w.is_identity()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = w.str();
        } else {
            body = mag.get_str() + "*" + w.str();
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + body;
        } else {
            out += (neg ? "-" : "+") + body;
        }
    }
    return out;
}

LaurentPoly laurent_det(const GroupRingMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0) return LaurentPoly::one(1);
    PolyMatrix p(n, n, LaurentPoly::zero(1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const GroupRingElement& g = m.at(r, c);
            if (g.rank() != 1)
                throw UnsupportedError(
                    "determinants over Z[F_n] with n >= 2 are not supported");
            p.at(r, c) = g.abelianize();
        }
    }
    return laurent_det(p);
}

std::vector<Word> words_up_to_length(int rank, int max_length) {
    if (rank < 1) throw ValidationError("rank must be >= 1");
    std::vector<Word> out{Word()};
    size_t level_begin = 0;
    for (int len = 1; len <= max_length; ++len) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            for (int g = 1; g <= rank; ++g) {
                for (int sign : {1, -1}) {
                    int letter = sign * g;
                    const auto& base = out[i].letters();
                    if (!base.empty() && base.back() == -letter) continue;
                    std::vector<int> next = base;
                    next.push_back(letter);
                    out.push_back(Word::reduce(next, rank));
                }
            }
        }
        level_begin = level_end;
    }
    return out;
}

} // namespace blink
