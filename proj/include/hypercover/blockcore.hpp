#pragma once

#include "hypercover/symcore.hpp"

#include <optional>
#include <set>
#include <vector>

namespace hypercover {

struct BlockStructure {
    std::vector<int> sizes;

    BlockStructure() = default;
    explicit BlockStructure(std::vector<int> s);

    int k() const { return static_cast<int>(sizes.size()); }
    int total() const;
    int offset(int j) const;  // first global coordinate (0-based) of block j
    Point block_mask(int j) const;
    int block_weight(Point p, int j) const;
    bool operator==(const BlockStructure&) const = default;
};

using WeightTuple = std::vector<int>;
using IndexTuple = std::vector<int>;

class BlockSymmetricSet {
public:
    BlockSymmetricSet() = default;
    BlockSymmetricSet(BlockStructure s, std::set<WeightTuple> tuples);
    static BlockSymmetricSet grid(const std::vector<SymmetricSet>& factors);

    const BlockStructure& structure() const { return structure_; }
    const std::set<WeightTuple>& tuples() const { return tuples_; }
    bool empty() const { return tuples_.empty(); }
    bool contains(Point p) const;
    SymmetricSet projection(int j) const;
    BlockSymmetricSet complement() const;
    // Factors when the set is a product of its projections.
    std::optional<std::vector<SymmetricSet>> grid_factors() const;
    std::vector<Point> points() const;
    bool operator==(const BlockSymmetricSet&) const = default;

private:
    BlockStructure structure_;
    std::set<WeightTuple> tuples_;
};

enum class BlockOrder { ascending, descending };
using OrderChoice = std::vector<BlockOrder>;

struct IndexLattice {
    std::vector<int> q;
    std::set<IndexTuple> members;
};

struct PosetExtremes {
    std::set<IndexTuple> innext;
    std::set<IndexTuple> outext;
};

PosetExtremes poset_extremes(const std::set<IndexTuple>& members, const std::vector<int>& q);

struct PdcCertificate {
    OrderChoice order;
    IndexLattice lattice;
    std::vector<std::vector<int>> enumerations;  // w_{j,0} <_j ... <_j w_{j,q_j}
};

// Index lattice under one order choice, and whether it is downward closed.
PdcCertificate index_lattice(const BlockSymmetricSet& s, const OrderChoice& order);
bool downward_closed(const IndexLattice& l);
std::optional<PdcCertificate> pdc_under(const BlockSymmetricSet& s, const OrderChoice& order);
std::optional<PdcCertificate> pdc_check(const BlockSymmetricSet& s);

SymmetricSet prefix_set(const BlockSymmetricSet& s, const OrderChoice& order, int j, int z);
bool outer_intact_check(const BlockSymmetricSet& s, const OrderChoice& order);
int block_index_complexity(const BlockSymmetricSet& s, const OrderChoice& order);

}  // namespace hypercover
