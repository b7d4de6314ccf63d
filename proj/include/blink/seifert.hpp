#pragma once

#include <utility>
#include <vector>

#include "blink/intmatrix.hpp"

namespace blink {

// Blocked Seifert matrix D = (A_ij) of an n-component link: an m x m
// integer matrix partitioned by block sizes m_1..m_n with m = sum m_i.
// Construction validates the partition; no symmetry constraint is imposed
// on D itself.
class SeifertMatrix {
public:
    SeifertMatrix(int components, std::vector<int> block_sizes, IntMatrix entries);

    int components() const { return n_; }
    const std::vector<int>& block_sizes() const { return sizes_; }
    int size() const { return entries_.rows(); }
    const IntMatrix& entries() const { return entries_; }

    int block_offset(int i) const;        // i is 1-based
    int component_of(int index) const;    // 0-based row index -> 1-based component
    IntMatrix block(int i, int j) const;  // A_ij, 1-based

    IntMatrix symmetrized() const;        // D + D^T

    bool operator==(const SeifertMatrix& rhs) const = default;

private:
    int n_;
    std::vector<int> sizes_;
    IntMatrix entries_;
};

struct UnimodularityReport {
    // (component index 1..n, det(A_ii + A_ii^T))
    std::vector<std::pair<int, Int>> per_component;
    Int total;   // det(D + D^T)
    bool pass;   // every determinant above has absolute value 1
};

UnimodularityReport check_unimodularity(const SeifertMatrix& d);

// I_i = A_ii + A_ii^T, the intersection form of the i-th Seifert manifold.
IntMatrix intersection_form(const SeifertMatrix& d, int i);

} // namespace blink
