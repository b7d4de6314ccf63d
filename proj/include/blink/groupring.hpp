#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "blink/grid.hpp"
#include "blink/laurent.hpp"

namespace blink {

// Reduced word in the free group F_n. A letter is a nonzero signed generator
// index: +i is the i-th generator, -i its inverse (i in 1..n). The empty
// word is the identity.
class Word {
public:
    Word() = default;

    // Free reduction of a raw letter sequence; cancels adjacent inverse
    // pairs until none remain. Letters outside 1..rank are rejected.
    static Word reduce(std::span<const int> letters, int rank);
    static Word generator(int index);

    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }

    Word operator*(const Word& rhs) const;
    Word inverse() const;

    std::vector<long> exponent_sums(int rank) const;

    // Length-lexicographic order: by length first, then letterwise with
    // t1 < t1^-1 < t2 < t2^-1 < ...
    bool operator<(const Word& rhs) const;
    bool operator==(const Word& rhs) const = default;

    std::string str() const;   // "t1*t2^-1", identity prints "1"

private:
    std::vector<int> letters_;
};

// Element of the integral group ring Z[F_n]: a finite formal sum of reduced
// words with nonzero integer coefficients, kept in length-lex order.
class GroupRingElement {
public:
    explicit GroupRingElement(int rank);

    static GroupRingElement zero(int rank) { return GroupRingElement(rank); }
    static GroupRingElement one(int rank);
    static GroupRingElement monomial(int rank, const Word& w, Int coeff);
    static GroupRingElement generator(int rank, int index);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Int>& terms() const { return terms_; }
    Int coeff(const Word& w) const;

    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const Int& scalar) const;
    bool operator==(const GroupRingElement& rhs) const = default;

    // Ring homomorphism onto Z[t1^{\pm1},..,tn^{\pm1}]: each word maps to the
    // monomial of its exponent-sum vector.
    LaurentPoly abelianize() const;

    std::string str() const;   // "2-2*t1"

private:
    void add_term(const Word& w, const Int& c);
    void require_same_rank(const GroupRingElement& rhs) const;

    int rank_;
    std::map<Word, Int> terms_;
};

using GroupRingMatrix = Grid<GroupRingElement>;

// Determinant of a square matrix over Z[F_1] (a commutative ring). Entries
// of rank > 1 are rejected: no noncommutative determinant is provided.
LaurentPoly laurent_det(const GroupRingMatrix& m);

// All reduced words of length <= max_length, in length-lex order.
std::vector<Word> words_up_to_length(int rank, int max_length);

} // namespace blink
