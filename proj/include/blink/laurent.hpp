#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "blink/grid.hpp"

namespace blink {

using Int = mpz_class;
using Rat = mpq_class;

// Integer Laurent polynomial in `rank` commuting variables t1..tn.
// Terms are keyed by exponent vectors in lexicographic order; zero
// coefficients are never stored, so map equality is canonical equality.
class LaurentPoly {
public:
    using Exponents = std::vector<long>;

    explicit LaurentPoly(int rank);

    static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
    static LaurentPoly one(int rank) { return constant(rank, 1); }
    static LaurentPoly constant(int rank, Int value);
    static LaurentPoly variable(int rank, int index);         // t_index, 1-based
    static LaurentPoly monomial(int rank, Exponents exps, Int coeff);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    Int coeff(const Exponents& e) const;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const Int& scalar) const;
    bool operator==(const LaurentPoly& rhs) const = default;

    // Multiplication by the unit t^shift.
    LaurentPoly shifted(const Exponents& shift) const;
    // Substitution t_i -> 1/t_i in every variable.
    LaurentPoly reversed() const;

    // Canonical representative modulo units: shifts every variable so its
    // lowest exponent is 0, then fixes the sign so the lex-leading term has
    // a positive coefficient. Zero normalizes to zero.
    LaurentPoly unit_normalized() const;

    // Exact evaluation; point entries must be nonzero wherever a negative
    // exponent occurs.
    Rat eval(const std::vector<Rat>& point) const;

    // Ascending canonical term order, e.g. "2+5*t+2*t^2" (single variable
    // prints as "t", several as "t1".."tn").
    std::string str() const;

private:
    void add_term(const Exponents& e, const Int& c);

    int rank_;
    std::map<Exponents, Int> terms_;

    friend LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);
};

// Exact quotient num/den in the Laurent ring; den must be nonzero and must
// divide num exactly (checked: non-exact divisions throw).
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

using PolyMatrix = Grid<LaurentPoly>;

// Exact determinant of a square Laurent-polynomial matrix by fraction-free
// (Bareiss) elimination. The 0x0 determinant is 1.
LaurentPoly laurent_det(const PolyMatrix& m);

} // namespace blink
