#include "hypercover/symcore.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hypercover {

SymmetricSet::SymmetricSet(int n, std::vector<int> weights) : n_(n), weights_(std::move(weights)) {
    if (n < 1) throw std::domain_error("dimension must be positive");
    std::sort(weights_.begin(), weights_.end());
    weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
    if (!weights_.empty() && (weights_.front() < 0 || weights_.back() > n))
        throw std::domain_error("weight outside [0," + std::to_string(n) + "]");
}

bool SymmetricSet::contains_weight(int w) const {
    return std::binary_search(weights_.begin(), weights_.end(), w);
}

SymmetricSet SymmetricSet::complement() const {
    std::vector<int> c;
    for (int w = 0; w <= n_; ++w)
        if (!contains_weight(w)) c.push_back(w);
    return SymmetricSet(n_, std::move(c));
}

std::vector<Point> SymmetricSet::points() const {
    if (n_ > 30) throw std::domain_error("refusing to expand a symmetric set with n > 30");
    std::vector<Point> out;
    for (Point p = 0; p < (Point{1} << n_); ++p)
        if (contains(p)) out.push_back(p);
    return out;
}

PeripheralInterval::PeripheralInterval(int n_, int a_, int b_) : n(n_), a(a_), b(b_) {
    if (a < -1 || a > n - 1 || b < 1 || b > n + 1 || a >= b)
        throw std::domain_error("invalid peripheral interval (" + std::to_string(a) + "," +
                                std::to_string(b) + ") for n=" + std::to_string(n));
}

SymmetricSet PeripheralInterval::as_set() const {
    std::vector<int> w;
    for (int x = 0; x <= a; ++x) w.push_back(x);
    for (int x = b; x <= n; ++x) w.push_back(x);
    return SymmetricSet(n, std::move(w));
}

PointSet::PointSet(int n_, std::vector<Point> pts) : n(n_), points(std::move(pts)) {
    if (n < 1 || n > 64) throw std::domain_error("point set dimension must be in [1,64]");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::domain_error("duplicate point");
    if (n < 64)
        for (Point p : points)
            if (p >> n) throw std::domain_error("point has more than n coordinates");
}

bool PointSet::contains(Point p) const { return std::binary_search(points.begin(), points.end(), p); }

SymmetricSet canonical_weight_window(int n, int i) {
    if (i < 0 || i > n) throw std::domain_error("window index outside [0,n]");
    std::vector<int> w;
    for (int x = 0; x <= i - 1; ++x) w.push_back(x);
    for (int x = n - i + 1; x <= n; ++x) w.push_back(x);
    return SymmetricSet(n, std::move(w));
}

bool is_peripheral(const SymmetricSet& s) {
    return inner_interval(s).as_set() == s;
}

int mu(const SymmetricSet& s) {
    const int n = s.n();
    int best = 0;
    for (int i = 1; i <= (n + 1) / 2; ++i) {
        // windows are nested, so the first miss ends the scan
        if (!s.contains_weight(i - 1) || !s.contains_weight(n - i + 1)) break;
        best = i;
    }
    return best;
}

int lambda_measure(const SymmetricSet& s) { return static_cast<int>(s.weights().size()) - mu(s); }
int mu_bar(const SymmetricSet& s) { return mu(s.complement()); }
int lambda_bar(const SymmetricSet& s) { return lambda_measure(s.complement()); }

PeripheralInterval inner_interval(const SymmetricSet& s) {
    const int n = s.n();
    if (s.full()) return {n, n / 2, n / 2 + 1};
    int a = -1;
    while (a + 1 <= n && s.contains_weight(a + 1)) ++a;
    int b = n + 1;
    while (b - 1 >= 0 && s.contains_weight(b - 1)) --b;
    return {n, a, b};
}

PeripheralInterval outer_interval(const SymmetricSet& s) {
    const int n = s.n();
    std::vector<int> l;
    l.push_back(-1);
    l.insert(l.end(), s.weights().begin(), s.weights().end());
    l.push_back(n + 1);
    // A containing interval leaves (a,b) free of weights; the smallest ones
    // sit on consecutive entries of l with the widest gap.
    int widest = 0;
    for (std::size_t k = 0; k + 1 < l.size(); ++k) {
        int a = l[k], b = l[k + 1];
        if (a < -1 || a > n - 1 || b < 1 || b > n + 1) continue;
        widest = std::max(widest, b - a);
    }
    int best_a = 0, best_b = 0, best_lam = -1;
    for (std::size_t k = 0; k + 1 < l.size(); ++k) {
        int a = l[k], b = l[k + 1];
        if (a < -1 || a > n - 1 || b < 1 || b > n + 1 || b - a != widest) continue;
        int lam = std::abs(a + b - n);
        bool better = best_lam < 0 || lam < best_lam || (lam == best_lam && a > n - b);
        if (better) best_a = a, best_b = b, best_lam = lam;
    }
    return {n, best_a, best_b};
}

int inn_measure(const SymmetricSet& s) {
    const auto in = inner_interval(s);
    const int m = std::min(in.a, s.n() - in.b) + 1;
    const auto window = canonical_weight_window(s.n(), m);
    int extra = 0;
    for (int w : s.weights())
        if (!window.contains_weight(w)) ++extra;
    return m + extra;
}

int out_measure(const SymmetricSet& s) {
    const auto out = outer_interval(s);
    return out.a + s.n() - out.b + 1;
}

IndexWitness index_complexity_symmetric(const SymmetricSet& s) {
    if (s.empty()) throw std::domain_error("index complexity of the empty set is undefined");
    const int n = s.n();
    const auto [_, a, b] = outer_interval(s);
    IndexWitness w;
    w.value = a + n - b + 1;
    auto ones = [](int k) { return k >= 64 ? ~Point{0} : (Point{1} << k) - 1; };
    if (a >= n - b) {
        w.coords = ones(a + n - b + 1);
        w.point = ones(a);
    } else {
        w.coords = ones(n) & ~ones(b - a - 1);
        w.point = ones(b);
    }
    return w;
}

namespace {

bool separates(const PointSet& s, Point u, Point mask) {
    for (Point v : s.points)
        if (v != u && ((u ^ v) & mask) == 0) return false;
    return true;
}

// Next r-combination of [0,n) in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    const int r = static_cast<int>(c.size());
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace

IndexWitness index_complexity_bruteforce(const PointSet& s) {
    if (s.points.empty()) throw std::domain_error("index complexity of the empty set is undefined");
    for (int r = 0; r <= s.n; ++r) {
        std::vector<int> c(r);
        for (int i = 0; i < r; ++i) c[i] = i;
        do {
            Point mask = 0;
            for (int i : c) mask |= Point{1} << i;
            for (Point u : s.points)
                if (separates(s, u, mask)) return {r, u, mask};
        } while (next_combination(c, s.n));
    }
    throw std::logic_error("unreachable: full coordinate set separates every point");
}

PeripheralInterval separation(int n, Point p, Point i0, Point i1) {
    const Point all = n >= 64 ? ~Point{0} : (Point{1} << n) - 1;
    if ((p | i0 | i1) & ~all) throw std::domain_error("coordinates outside [1,n]");
    if (i0 & p) throw std::domain_error("I0 must index zero coordinates of p");
    if (i1 & ~p) throw std::domain_error("I1 must index one coordinates of p");
    return {n, std::popcount(i1) - 1, n - std::popcount(i0) + 1};
}

SymmetricSet complement_transform(const SymmetricSet& s) {
    std::vector<int> w;
    for (int x : s.weights()) w.push_back(s.n() - x);
    return SymmetricSet(s.n(), std::move(w));
}

}  // namespace hypercover
