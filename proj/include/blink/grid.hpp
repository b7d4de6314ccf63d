#pragma once

#include <vector>

#include "blink/errors.hpp"

namespace blink {

// Dense row-major storage for matrix-like values whose cells are not plain
// integers (Laurent polynomials, group-ring elements).
template <class T>
class Grid {
public:
    Grid() : rows_(0), cols_(0) {}
    Grid(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw ValidationError("grid dimensions must be nonnegative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return cells_[index(r, c)]; }
    const T& at(int r, int c) const { return cells_[index(r, c)]; }

    bool operator==(const Grid&) const = default;

private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw ValidationError("grid index out of range");
        return static_cast<size_t>(r) * cols_ + c;
    }

    int rows_;
    int cols_;
    std::vector<T> cells_;
};

} // namespace blink
