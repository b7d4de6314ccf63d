#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "blink/errors.hpp"
#include "blink/laurent.hpp"

namespace blink {

// Dense matrix of arbitrary-precision integers. All operations are exact;
// nothing in the library ever rounds.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);   // row-major
    // Convenience for literals in tests and construction from JSON.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Int& at(int r, int c) { return entries_[index(r, c)]; }
    const Int& at(int r, int c) const { return entries_[index(r, c)]; }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Rows/cols are kept, in the order given; indices are 0-based.
    IntMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw ValidationError("matrix index out of range");
        return static_cast<size_t>(r) * cols_ + c;
    }

    int rows_;
    int cols_;
    std::vector<Int> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination; det of the
// empty matrix is 1.
Int det(const IntMatrix& m);

// Smith normal form U*M*V = S with U, V unimodular and S diagonal with
// nonnegative entries d1 | d2 | ... Pivoting is deterministic: smallest
// nonzero absolute value, ties broken by row then column index.
struct SnfResult {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};
SnfResult snf(const IntMatrix& m);

// Diagonal of snf(m).s, length min(rows, cols).
std::vector<Int> snf_diagonal(const IntMatrix& m);

// Signature of a symmetric matrix computed by exact rational symmetric
// reduction on the quotient by the radical; degenerate forms are fine.
int symmetric_signature(const IntMatrix& s);

// Basis of the nullspace of (m mod 2) over GF(2); vectors are 0/1 valued.
// For symmetric m this is also the space of x with x^T m = 0 (mod 2).
std::vector<std::vector<int>> nullspace_mod2(const IntMatrix& m);

} // namespace blink
