#include "blink/seifert.hpp"

#include <numeric>

namespace blink {

SeifertMatrix::SeifertMatrix(int components, std::vector<int> block_sizes, IntMatrix entries)
    : n_(components), sizes_(std::move(block_sizes)), entries_(std::move(entries)) {
    if (n_ < 1) throw ValidationError("component count must be >= 1");
    if (static_cast<int>(sizes_.size()) != n_)
        throw ValidationError("expected " + std::to_string(n_) + " block sizes, got " +
                              std::to_string(sizes_.size()));
    int total = 0;
    for (size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 0)
            throw ValidationError("block_sizes[" + std::to_string(i) + "] is negative");
        total += sizes_[i];
    }
    if (!entries_.is_square())
        throw ValidationError("matrix is not square: " + std::to_string(entries_.rows()) +
                              "x" + std::to_string(entries_.cols()));
    if (entries_.rows() != total)
        throw ValidationError("matrix size " + std::to_string(entries_.rows()) +
                              " does not match the block partition total " +
                              std::to_string(total));
}

int SeifertMatrix::block_offset(int i) const {
    if (i < 1 || i > n_) throw ValidationError("component index out of range");
    return std::accumulate(sizes_.begin(), sizes_.begin() + (i - 1), 0);
}

int SeifertMatrix::component_of(int index) const {
    if (index < 0 || index >= size()) throw ValidationError("row index out of range");
    int acc = 0;
    for (int i = 0; i < n_; ++i) {
        acc += sizes_[i];
        if (index < acc) return i + 1;
    }
    throw ValidationError("row index out of range");
}

IntMatrix SeifertMatrix::block(int i, int j) const {
    const int ri = block_offset(i), rj = block_offset(j);
    IntMatrix out(sizes_[i - 1], sizes_[j - 1]);
    for (int r = 0; r < sizes_[i - 1]; ++r)
        for (int c = 0; c < sizes_[j - 1]; ++c) out.at(r, c) = entries_.at(ri + r, rj + c);
    return out;
}

IntMatrix SeifertMatrix::symmetrized() const {
    return entries_ + entries_.transpose();
}

UnimodularityReport check_unimodularity(const SeifertMatrix& d) {
    UnimodularityReport report;
    report.pass = true;
    for (int i = 1; i <= d.components(); ++i) {
        Int value = det(intersection_form(d, i));
        if (abs(value) != 1) report.pass = false;
        report.per_component.emplace_back(i, std::move(value));
    }
    report.total = det(d.symmetrized());
    if (abs(report.total) != 1) report.pass = false;
    return report;
}

IntMatrix intersection_form(const SeifertMatrix& d, int i) {
    IntMatrix a = d.block(i, i);
    return a + a.transpose();
}

} // namespace blink
