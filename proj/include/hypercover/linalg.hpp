#pragma once

#include "hypercover/rational.hpp"

#include <vector>

namespace hypercover {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    void append_row(const RationalVector& row);

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

struct KernelResult {
    int rank = 0;
    std::vector<RationalVector> basis;  // one vector per free column, ascending
};

// Exact nullspace via reduced row echelon form.
KernelResult kernel(RationalMatrix m);
int rank(RationalMatrix m);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace hypercover
