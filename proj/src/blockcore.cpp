#include "hypercover/blockcore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hypercover {

BlockStructure::BlockStructure(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::domain_error("need at least one block");
    for (int n : sizes)
        if (n < 1) throw std::domain_error("block sizes must be positive");
    if (total() > 64) throw std::domain_error("at most 64 coordinates");
}

int BlockStructure::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

int BlockStructure::offset(int j) const {
    return std::accumulate(sizes.begin(), sizes.begin() + j, 0);
}

Point BlockStructure::block_mask(int j) const {
    const int n = sizes.at(j);
    const Point ones = n >= 64 ? ~Point{0} : (Point{1} << n) - 1;
    return ones << offset(j);
}

int BlockStructure::block_weight(Point p, int j) const { return std::popcount(p & block_mask(j)); }

BlockSymmetricSet::BlockSymmetricSet(BlockStructure s, std::set<WeightTuple> tuples)
    : structure_(std::move(s)), tuples_(std::move(tuples)) {
    for (const auto& t : tuples_) {
        if (static_cast<int>(t.size()) != structure_.k()) throw std::domain_error("tuple length mismatch");
        for (int j = 0; j < structure_.k(); ++j)
            if (t[j] < 0 || t[j] > structure_.sizes[j]) throw std::domain_error("tuple weight out of range");
    }
}

BlockSymmetricSet BlockSymmetricSet::grid(const std::vector<SymmetricSet>& factors) {
    std::vector<int> sizes;
    for (const auto& f : factors) sizes.push_back(f.n());
    std::set<WeightTuple> tuples{WeightTuple{}};
    for (const auto& f : factors) {
        std::set<WeightTuple> next;
        for (const auto& t : tuples)
            for (int w : f.weights()) {
                auto u = t;
                u.push_back(w);
                next.insert(std::move(u));
            }
        tuples = std::move(next);
    }
    return BlockSymmetricSet(BlockStructure(sizes), std::move(tuples));
}

bool BlockSymmetricSet::contains(Point p) const {
    WeightTuple t(structure_.k());
    for (int j = 0; j < structure_.k(); ++j) t[j] = structure_.block_weight(p, j);
    return tuples_.count(t) > 0;
}

SymmetricSet BlockSymmetricSet::projection(int j) const {
    std::vector<int> w;
    for (const auto& t : tuples_) w.push_back(t.at(j));
    return SymmetricSet(structure_.sizes.at(j), std::move(w));
}

BlockSymmetricSet BlockSymmetricSet::complement() const {
    std::set<WeightTuple> all{WeightTuple{}};
    for (int n : structure_.sizes) {
        std::set<WeightTuple> next;
        for (const auto& t : all)
            for (int w = 0; w <= n; ++w) {
                auto u = t;
                u.push_back(w);
                next.insert(std::move(u));
            }
        all = std::move(next);
    }
    std::set<WeightTuple> rest;
    std::set_difference(all.begin(), all.end(), tuples_.begin(), tuples_.end(),
                        std::inserter(rest, rest.end()));
    return BlockSymmetricSet(structure_, std::move(rest));
}

std::optional<std::vector<SymmetricSet>> BlockSymmetricSet::grid_factors() const {
    std::vector<SymmetricSet> f;
    for (int j = 0; j < structure_.k(); ++j) f.push_back(projection(j));
    if (grid(f).tuples() != tuples_) return std::nullopt;
    return f;
}

std::vector<Point> BlockSymmetricSet::points() const {
    const int n = structure_.total();
    if (n > 30) throw std::domain_error("refusing to expand a block set with N > 30");
    std::vector<Point> out;
    for (Point p = 0; p < (Point{1} << n); ++p)
        if (contains(p)) out.push_back(p);
    return out;
}

namespace {

bool leq(const IndexTuple& a, const IndexTuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Calls f on every tuple of the box ∏[0, hi_j], in lexicographic order.
template <class F>
void for_box(const std::vector<int>& hi, F&& f) {
    IndexTuple z(hi.size(), 0);
    if (std::any_of(hi.begin(), hi.end(), [](int h) { return h < 0; })) return;
    while (true) {
        f(z);
        int i = static_cast<int>(z.size()) - 1;
        while (i >= 0 && z[i] == hi[i]) z[i--] = 0;
        if (i < 0) return;
        ++z[i];
    }
}

}  // namespace

PosetExtremes poset_extremes(const std::set<IndexTuple>& members, const std::vector<int>& q) {
    PosetExtremes out;
    for (const auto& m : members) {
        if (m.size() != q.size()) throw std::domain_error("index tuple length mismatch");
        bool maximal = true;
        for (const auto& o : members)
            if (o != m && leq(m, o)) maximal = false;
        if (maximal) out.innext.insert(m);
    }
    // A minimal non-member z has z_j <= q_j + 1: lowering a coordinate above
    // q_j + 1 keeps it outside the box, so z would not be minimal.
    std::vector<int> hi;
    for (int x : q) hi.push_back(x + 1);
    std::vector<IndexTuple> outside;
    for_box(hi, [&](const IndexTuple& z) {
        if (!members.count(z)) outside.push_back(z);
    });
    for (const auto& z : outside) {
        bool minimal = true;
        for (const auto& o : outside)
            if (o != z && leq(o, z)) {
                minimal = false;
                break;
            }
        if (minimal) out.outext.insert(z);
    }
    return out;
}

PdcCertificate index_lattice(const BlockSymmetricSet& s, const OrderChoice& order) {
    const int k = s.structure().k();
    if (static_cast<int>(order.size()) != k) throw std::domain_error("order choice length mismatch");
    PdcCertificate c;
    c.order = order;
    for (int j = 0; j < k; ++j) {
        auto w = s.projection(j).weights();
        if (order[j] == BlockOrder::descending) std::reverse(w.begin(), w.end());
        c.lattice.q.push_back(static_cast<int>(w.size()) - 1);
        c.enumerations.push_back(std::move(w));
    }
    for (const auto& t : s.tuples()) {
        IndexTuple z(k);
        for (int j = 0; j < k; ++j) {
            const auto& e = c.enumerations[j];
            z[j] = static_cast<int>(std::find(e.begin(), e.end(), t[j]) - e.begin());
        }
        c.lattice.members.insert(std::move(z));
    }
    return c;
}

bool downward_closed(const IndexLattice& l) {
    for (const auto& m : l.members) {
        bool ok = true;
        for_box(m, [&](const IndexTuple& z) {
            if (ok && !l.members.count(z)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::optional<PdcCertificate> pdc_under(const BlockSymmetricSet& s, const OrderChoice& order) {
    auto c = index_lattice(s, order);
    if (!downward_closed(c.lattice)) return std::nullopt;
    return c;
}

std::optional<PdcCertificate> pdc_check(const BlockSymmetricSet& s) {
    const int k = s.structure().k();
    // Bit j of the counter set means block j descends; the counter order puts
    // all-ascending first and compares blocks from the first one.
    for (unsigned m = 0; m < (1u << k); ++m) {
        OrderChoice o(k);
        for (int j = 0; j < k; ++j)
            o[j] = ((m >> (k - 1 - j)) & 1u) ? BlockOrder::descending : BlockOrder::ascending;
        if (auto c = pdc_under(s, o)) return c;
    }
    return std::nullopt;
}

SymmetricSet prefix_set(const BlockSymmetricSet& s, const OrderChoice& order, int j, int z) {
    if (j < 0 || j >= s.structure().k()) throw std::domain_error("block index out of range");
    if (static_cast<int>(order.size()) != s.structure().k()) throw std::domain_error("order choice length mismatch");
    auto w = s.projection(j).weights();
    if (z < 0 || z >= static_cast<int>(w.size())) throw std::domain_error("prefix index out of range");
    if (order[j] == BlockOrder::descending) std::reverse(w.begin(), w.end());
    w.resize(z + 1);
    return SymmetricSet(s.structure().sizes[j], std::move(w));
}

bool outer_intact_check(const BlockSymmetricSet& s, const OrderChoice& order) {
    const auto c = pdc_under(s, order);
    if (!c) throw std::domain_error("set is not PDC under the given order");
    const auto ext = poset_extremes(c->lattice.members, c->lattice.q);
    for (const auto& z : ext.innext)
        for (int j = 0; j < s.structure().k(); ++j)
            if (outer_interval(prefix_set(s, order, j, z[j])) != outer_interval(s.projection(j))) return false;
    return true;
}

int block_index_complexity(const BlockSymmetricSet& s, const OrderChoice& order) {
    if (s.empty()) throw std::domain_error("index complexity of the empty set is undefined");
    if (!outer_intact_check(s, order)) throw std::domain_error("set is not outer intact");
    int r = 0;
    for (int j = 0; j < s.structure().k(); ++j) r += out_measure(s.projection(j));
    return r;
}

}  // namespace hypercover
