#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace hypercover {

// A cube point. Bit i-1 holds coordinate x_i, so at most 64 coordinates.
using Point = std::uint64_t;

inline int weight_of(Point p) { return __builtin_popcountll(p); }
inline bool coord(Point p, int i) { return (p >> (i - 1)) & 1u; }  // 1-based

class SymmetricSet {
public:
    SymmetricSet() = default;
    // Sorts and dedups; throws std::domain_error on a weight outside [0,n].
    SymmetricSet(int n, std::vector<int> weights);

    int n() const { return n_; }
    const std::vector<int>& weights() const { return weights_; }
    bool contains_weight(int w) const;
    bool contains(Point p) const { return contains_weight(weight_of(p)); }
    bool empty() const { return weights_.empty(); }
    bool full() const { return static_cast<int>(weights_.size()) == n_ + 1; }
    SymmetricSet complement() const;
    // Expanded points, ascending by encoding. Only sensible for small n.
    std::vector<Point> points() const;

    auto operator<=>(const SymmetricSet&) const = default;

private:
    int n_ = 0;
    std::vector<int> weights_;
};

// J_{n,a,b}: weights [0,a] ∪ [b,n].
struct PeripheralInterval {
    int n = 0;
    int a = -1;
    int b = 1;

    PeripheralInterval() = default;
    PeripheralInterval(int n_, int a_, int b_);  // checks the ranges

    // |I_{n,a,b}| = number of weights strictly between a and b.
    int gap() const { return b - a - 1; }
    SymmetricSet as_set() const;

    auto operator<=>(const PeripheralInterval&) const = default;
};

struct PointSet {
    int n = 0;
    std::vector<Point> points;  // sorted, distinct

    PointSet() = default;
    PointSet(int n_, std::vector<Point> pts);
    static PointSet of(const SymmetricSet& s) { return PointSet(s.n(), s.points()); }
    bool contains(Point p) const;
};

SymmetricSet canonical_weight_window(int n, int i);
bool is_peripheral(const SymmetricSet& s);

int mu(const SymmetricSet& s);
int lambda_measure(const SymmetricSet& s);
int mu_bar(const SymmetricSet& s);
int lambda_bar(const SymmetricSet& s);

PeripheralInterval inner_interval(const SymmetricSet& s);
PeripheralInterval outer_interval(const SymmetricSet& s);
int inn_measure(const SymmetricSet& s);
int out_measure(const SymmetricSet& s);

struct IndexWitness {
    int value = 0;
    Point point = 0;   // the separated point u (or p for the symmetric witness)
    Point coords = 0;  // the coordinate set I, bit i-1 for coordinate i
};

IndexWitness index_complexity_symmetric(const SymmetricSet& s);
IndexWitness index_complexity_bruteforce(const PointSet& s);

// i0, i1 are coordinate masks; i0 must avoid the ones of p, i1 must sit inside them.
PeripheralInterval separation(int n, Point p, Point i0, Point i1);

SymmetricSet complement_transform(const SymmetricSet& s);

}  // namespace hypercover
