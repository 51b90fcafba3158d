#include "hypercover/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hypercover {

void RationalMatrix::append_row(const RationalVector& row) {
    if (static_cast<int>(row.size()) != cols_) throw std::domain_error("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

// In-place RREF; returns pivot columns in row order.
std::vector<int> reduce(RationalMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (int k = 0; k < m.cols(); ++k) std::swap(m.at(p, k), m.at(r, k));
        const Rational inv = 1 / m.at(r, c);
        for (int k = c; k < m.cols(); ++k)
            if (m.at(r, k) != 0) m.at(r, k) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (int k = c; k < m.cols(); ++k)
                if (m.at(r, k) != 0) m.at(i, k) -= f * m.at(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

KernelResult kernel(RationalMatrix m) {
    const auto pivots = reduce(m);
    KernelResult out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<int> pivot_row(m.cols(), -1);
    for (int i = 0; i < out.rank; ++i) pivot_row[pivots[i]] = i;
    for (int f = 0; f < m.cols(); ++f) {
        if (pivot_row[f] >= 0) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (int i = 0; i < out.rank; ++i)
            if (m.at(i, f) != 0) v[pivots[i]] = -m.at(i, f);
        out.basis.push_back(std::move(v));
    }
    return out;
}

int rank(RationalMatrix m) { return static_cast<int>(reduce(m).size()); }

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::domain_error("dot length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace hypercover
