// Shared test helpers: deterministic generators and independent oracles.
// Everything here is test-side only and stays independent of the library
// code paths it is used to check.
#pragma once

#include <optional>
#include <random>
#include <vector>

#include "blink/groupring.hpp"
#include "blink/intmatrix.hpp"
#include "blink/pairing.hpp"
#include "blink/seifert.hpp"

namespace testsupport {

using blink::GroupRingElement;
using blink::Int;
using blink::IntMatrix;
using blink::LaurentPoly;
using blink::PolyMatrix;
using blink::Rat;
using blink::SeifertMatrix;
using blink::Word;

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t pick(std::uint64_t k) { return eng_() % k; }
    long range(long lo, long hi) { return lo + static_cast<long>(pick(hi - lo + 1)); }

private:
    std::mt19937_64 eng_;
};

// --- independent determinant oracles (Laplace expansion) ---

inline Int cofactor_det(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    std::vector<int> cols;
    for (int c = 0; c < n; ++c) cols.push_back(c);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        std::vector<int> rest_rows, rest_cols;
        for (int r = 1; r < n; ++r) rest_rows.push_back(r);
        for (int cc = 0; cc < n; ++cc)
            if (cc != c) rest_cols.push_back(cc);
        Int minor = cofactor_det(m.select(rest_rows, rest_cols));
        acc += (c % 2 ? -1 : 1) * m.at(0, c) * minor;
    }
    return acc;
}

inline LaurentPoly cofactor_det(const PolyMatrix& m) {
    const int n = m.rows();
    const int rank = n > 0 ? m.at(0, 0).rank() : 1;
    if (n == 0) return LaurentPoly::one(rank);
    if (n == 1) return m.at(0, 0);
    LaurentPoly acc = LaurentPoly::zero(rank);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, LaurentPoly::zero(rank));
        for (int r = 1; r < n; ++r) {
            int out_c = 0;
            for (int cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor.at(r - 1, out_c++) = m.at(r, cc);
            }
        }
        LaurentPoly term = m.at(0, c) * cofactor_det(minor);
        acc = c % 2 ? acc - term : acc + term;
    }
    return acc;
}

// --- random inputs ---

inline IntMatrix random_int_matrix(TestRng& rng, int rows, int cols, long bound) {
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rng.range(-bound, bound);
    return m;
}

inline GroupRingElement random_ring_element(TestRng& rng, int rank, int max_terms,
                                            int max_len, long coeff_bound) {
    GroupRingElement out(rank);
    const int terms = static_cast<int>(rng.pick(max_terms + 1));
    for (int t = 0; t < terms; ++t) {
        const int len = static_cast<int>(rng.pick(max_len + 1));
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng.pick(rank));
            letters.push_back(rng.pick(2) ? g : -g);
        }
        long coeff = rng.range(-coeff_bound, coeff_bound);
        out = out + GroupRingElement::monomial(rank, Word::reduce(letters, rank), coeff);
    }
    return out;
}

inline LaurentPoly random_poly(TestRng& rng, int rank, int max_terms, long exp_bound,
                               long coeff_bound) {
    LaurentPoly out(rank);
    const int terms = static_cast<int>(rng.pick(max_terms + 1));
    for (int t = 0; t < terms; ++t) {
        LaurentPoly::Exponents e(rank);
        for (int i = 0; i < rank; ++i) e[i] = rng.range(-exp_bound, exp_bound);
        out = out + LaurentPoly::monomial(rank, e, rng.range(-coeff_bound, coeff_bound));
    }
    return out;
}

// 2x2 integer block A with A + A^T unimodular (det = -1 is the only
// possibility for an even 2x2 form): b + c = 2k + 1 and ad = k(k+1).
inline IntMatrix random_unimodular_block2(TestRng& rng) {
    const long k = static_cast<long>(rng.pick(2));   // 0 or 1
    long s = 2 * k + 1;
    if (rng.pick(2)) s = -s;
    long a, d;
    if (k == 0) {
        if (rng.pick(2)) {
            a = 0;
            d = rng.range(-2, 2);
        } else {
            a = rng.range(-2, 2);
            d = 0;
        }
    } else {
        static const long pairs[4][2] = {{1, 2}, {2, 1}, {-1, -2}, {-2, -1}};
        const auto& p = pairs[rng.pick(4)];
        a = p[0];
        d = p[1];
    }
    long b = rng.range(-2, 2);
    long c = s - b;
    IntMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

// Random blocked matrix satisfying the unimodularity conditions, built in
// two rejection stages: each diagonal block starts as a direct sum of 2x2
// unimodular families and gets random coupling between its pairs (rejected
// against det(A_ii + A_ii^T)), then random cross-component blocks are added
// (rejected against det(D + D^T)). Every stage falls back to zero coupling,
// which passes because the symmetrization is then block diagonal.
inline SeifertMatrix random_unimodular_seifert(TestRng& rng, int n,
                                               int max_block_pairs = 2) {
    std::vector<int> sizes(n);
    for (int i = 0; i < n; ++i)
        sizes[i] = 2 * static_cast<int>(1 + rng.pick(max_block_pairs));
    int m = 0;
    for (int s : sizes) m += s;

    IntMatrix d(m, m);
    int off = 0;
    for (int i = 0; i < n; ++i) {
        const int mi = sizes[i];
        IntMatrix base(mi, mi);
        for (int p = 0; p < mi / 2; ++p) {
            IntMatrix blk = random_unimodular_block2(rng);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) base.at(2 * p + r, 2 * p + c) = blk.at(r, c);
        }
        IntMatrix block = base;
        for (int attempt = 0; attempt < 30; ++attempt) {
            IntMatrix candidate = base;
            if (attempt < 29) {
                for (int r = 0; r < mi; ++r)
                    for (int c = 0; c < mi; ++c)
                        if (r / 2 != c / 2) candidate.at(r, c) = rng.range(-3, 3);
            }
            if (abs(det(candidate + candidate.transpose())) == 1) {
                block = std::move(candidate);
                break;
            }
        }
        for (int r = 0; r < mi; ++r)
            for (int c = 0; c < mi; ++c) d.at(off + r, off + c) = block.at(r, c);
        off += sizes[i];
    }

    for (int attempt = 0; attempt < 30; ++attempt) {
        IntMatrix candidate = d;
        if (attempt < 29 && n > 1) {
            int roff = 0;
            for (int i = 0; i < n; ++i) {
                int coff = 0;
                for (int j = 0; j < n; ++j) {
                    if (i != j)
                        for (int r = 0; r < sizes[i]; ++r)
                            for (int c = 0; c < sizes[j]; ++c)
                                candidate.at(roff + r, coff + c) = rng.range(-3, 3);
                    coff += sizes[j];
                }
                roff += sizes[i];
            }
        }
        SeifertMatrix result(n, sizes, candidate);
        if (blink::check_unimodularity(result).pass) return result;
    }
    return SeifertMatrix(n, sizes, d);   // zero cross coupling always passes
}

// Random block-diagonal unimodular matrix: a product of `factors` elementary
// transvections, swaps and sign flips with entries bounded by `bound`.
inline IntMatrix random_block_unimodular(TestRng& rng, const SeifertMatrix& shape,
                                         int factors, long bound) {
    const int m = shape.size();
    IntMatrix p = IntMatrix::identity(m);
    for (int f = 0; f < factors; ++f) {
        IntMatrix e = IntMatrix::identity(m);
        // choose a block with at least one index
        std::vector<int> nonempty;
        for (int i = 1; i <= shape.components(); ++i)
            if (shape.block_sizes()[i - 1] >= 1) nonempty.push_back(i);
        if (nonempty.empty()) break;
        const int i = nonempty[rng.pick(nonempty.size())];
        const int offb = shape.block_offset(i);
        const int mi = shape.block_sizes()[i - 1];
        const int kind = static_cast<int>(rng.pick(3));
        if (kind == 0 || mi < 2) {
            int a = offb + static_cast<int>(rng.pick(mi));
            e.at(a, a) = -1;
        } else if (kind == 1) {
            int a = static_cast<int>(rng.pick(mi));
            int b = static_cast<int>(rng.pick(mi - 1));
            if (b >= a) ++b;
            long c = rng.range(1, bound);
            if (rng.pick(2)) c = -c;
            e.at(offb + a, offb + b) = c;
        } else {
            int a = static_cast<int>(rng.pick(mi));
            int b = static_cast<int>(rng.pick(mi - 1));
            if (b >= a) ++b;
            e.at(offb + a, offb + a) = 0;
            e.at(offb + b, offb + b) = 0;
            e.at(offb + a, offb + b) = 1;
            e.at(offb + b, offb + a) = 1;
        }
        p = p * e;
    }
    return p;
}

// --- exact rational nullspace, used to construct valid functionals ---

// Basis of { x : a x = 0 } over Q; `a` is rows x cols, row-major.
inline std::vector<std::vector<Rat>> rational_nullspace(std::vector<std::vector<Rat>> a,
                                                        int cols) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[rank]);
        const Rat inv = a[rank][c];
        for (int j = 0; j < cols; ++j) a[rank][j] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rat f = a[r][c];
            for (int j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_col_of_row.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[c] = 1;
        for (int r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = -a[r][c];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Functionals supported on words of length <= radius that vanish on
// g * (columns of phi) for all words g of length <= depth. Needs
// radius >= depth + 1 to close the constraint system.
inline std::vector<blink::FiniteFunctional> valid_functionals(
    const blink::MilnorPairingData& data, int depth, int radius) {
    const int n = data.n;
    const int m = data.phi.size();
    const std::vector<Word> support = blink::words_up_to_length(n, radius);
    auto word_index = [&](const Word& w) -> int {
        for (size_t i = 0; i < support.size(); ++i)
            if (support[i] == w) return static_cast<int>(i);
        return -1;
    };
    const int cols = m * static_cast<int>(support.size());
    std::vector<std::vector<Rat>> rows;
    for (const Word& g : blink::words_up_to_length(n, depth)) {
        for (int c = 0; c < m; ++c) {
            std::vector<Rat> row(cols, Rat(0));
            for (int r = 0; r < m; ++r) {
                for (const auto& [w, coef] : data.phi.at(r, c).terms()) {
                    const int wi = word_index(g * w);
                    if (wi < 0) throw std::logic_error("support radius too small");
                    row[r * support.size() + wi] += Rat(coef);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    std::vector<blink::FiniteFunctional> out;
    for (const auto& x : rational_nullspace(std::move(rows), cols)) {
        blink::FiniteFunctional u(n, m);
        for (int k = 0; k < m; ++k)
            for (size_t wi = 0; wi < support.size(); ++wi) {
                const Rat& v = x[k * support.size() + wi];
                if (v != 0) u.set(k, support[wi], v);
            }
        out.push_back(std::move(u));
    }
    return out;
}

} // namespace testsupport
