#include "blink/intmatrix.hpp"

#include <algorithm>
#include <utility>

namespace blink {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be nonnegative");
    entries_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be nonnegative");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw ValidationError("matrix entry count does not match its shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& row : rows) {
        if (cols_ == 0) cols_ = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols_)
            throw ValidationError("ragged matrix literal");
        for (long v : row) entries_.emplace_back(v);
    }
    if (rows_ == 0) cols_ = 0;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix shape mismatch in addition");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ValidationError("matrix shape mismatch in subtraction");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("matrix shape mismatch in multiplication");
    IntMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += a * rhs.at(k, c);
        }
    }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

IntMatrix IntMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
    IntMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    return out;
}

void IntMatrix::swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (w.at(r, k) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != k) {
            w.swap_rows(pivot, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                // exact by Sylvester's identity
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int result = w.at(n - 1, n - 1);
    return sign < 0 ? -result : result;
}

SnfResult snf(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    SnfResult r{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& s = r.s;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    const int steps = std::min(rows, cols);

    for (int k = 0; k < steps; ++k) {
        for (;;) {
            // deterministic pivot: smallest |entry| != 0, ties by row then column
            int pr = -1, pc = -1;
            Int best;
            for (int i = k; i < rows; ++i) {
                for (int j = k; j < cols; ++j) {
                    if (s.at(i, j) == 0) continue;
                    Int mag = abs(s.at(i, j));
                    if (pr < 0 || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0) {
                k = steps;   // remainder is zero
                break;
            }
            if (pr != k) {
                s.swap_rows(pr, k);
                u.swap_rows(pr, k);
            }
            if (pc != k) {
                s.swap_cols(pc, k);
                v.swap_cols(pc, k);
            }

            bool dirty = false;
            for (int i = k + 1; i < rows; ++i) {
                if (s.at(i, k) == 0) continue;
                Int q = s.at(i, k) / s.at(k, k);   // truncated: |remainder| < |pivot|
                if (q != 0) {
                    for (int j = 0; j < cols; ++j) s.at(i, j) -= q * s.at(k, j);
                    for (int j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(k, j);
                }
                if (s.at(i, k) != 0) dirty = true;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (s.at(k, j) == 0) continue;
                Int q = s.at(k, j) / s.at(k, k);
                if (q != 0) {
                    for (int i = 0; i < rows; ++i) s.at(i, j) -= q * s.at(i, k);
                    for (int i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, k);
                }
                if (s.at(k, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot is lone; enforce divisibility of the remaining block
            int br = -1;
            for (int i = k + 1; i < rows && br < 0; ++i)
                for (int j = k + 1; j < cols; ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        br = i;
                        break;
                    }
            if (br < 0) break;
            for (int j = 0; j < cols; ++j) s.at(k, j) += s.at(br, j);
            for (int j = 0; j < rows; ++j) u.at(k, j) += u.at(br, j);
        }
        if (k >= steps) break;
        if (s.at(k, k) < 0) {
            for (int j = 0; j < cols; ++j) s.at(k, j) = -s.at(k, j);
            for (int j = 0; j < rows; ++j) u.at(k, j) = -u.at(k, j);
        }
    }
    return r;
}

std::vector<Int> snf_diagonal(const IntMatrix& m) {
    SnfResult r = snf(m);
    std::vector<Int> d;
    const int k = std::min(m.rows(), m.cols());
    d.reserve(k);
    for (int i = 0; i < k; ++i) d.push_back(r.s.at(i, i));
    return d;
}

int symmetric_signature(const IntMatrix& s) {
    if (!s.is_symmetric()) throw PreconditionError("signature requires a symmetric matrix");
    const int n = s.rows();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rat(s.at(i, j));

    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    int sig = 0;
    while (!active.empty()) {
        int p = -1;
        for (int idx : active)
            if (w[idx][idx] != 0) {
                p = idx;
                break;
            }
        if (p < 0) {
            // all active diagonal entries vanish; look for an off-diagonal one
            int a = -1, b = -1;
            for (size_t x = 0; x < active.size() && a < 0; ++x)
                for (size_t y = x + 1; y < active.size(); ++y)
                    if (w[active[x]][active[y]] != 0) {
                        a = active[x];
                        b = active[y];
                        break;
                    }
            if (a < 0) break;   // the remainder is the radical
            for (int idx : active) w[a][idx] += w[b][idx];
            for (int idx : active) w[idx][a] += w[idx][b];
            continue;
        }
        sig += w[p][p] > 0 ? 1 : -1;
        std::vector<int> rest;
        rest.reserve(active.size() - 1);
        for (int idx : active)
            if (idx != p) rest.push_back(idx);
        for (int i : rest)
            for (int j : rest) w[i][j] -= w[i][p] * w[p][j] / w[p][p];
        active = std::move(rest);
    }
    return sig;
}

std::vector<std::vector<int>> nullspace_mod2(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a[i][j] = mpz_odd_p(m.at(i, j).get_mpz_t()) ? 1 : 0;

    std::vector<int> pivot_col_of_row(rows, -1);
    std::vector<int> row_of_pivot_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c]) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && a[r][c])
                for (int j = 0; j < cols; ++j) a[r][j] ^= a[rank][j];
        pivot_col_of_row[rank] = c;
        row_of_pivot_col[c] = rank;
        ++rank;
    }

    std::vector<std::vector<int>> basis;
    for (int c = 0; c < cols; ++c) {
        if (row_of_pivot_col[c] >= 0) continue;
        std::vector<int> x(cols, 0);
        x[c] = 1;
        for (int r = 0; r < rank; ++r)
            if (a[r][c]) x[pivot_col_of_row[r]] = 1;
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace blink
