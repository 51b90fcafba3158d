#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercover/blockcore.hpp"

using namespace hypercover;

namespace {

constexpr auto asc = BlockOrder::ascending;
constexpr auto desc = BlockOrder::descending;

// All tuples of [0,n1] x [0,n2], in lexicographic order.
std::vector<WeightTuple> box2(int n1, int n2) {
    std::vector<WeightTuple> out;
    for (int a = 0; a <= n1; ++a)
        for (int b = 0; b <= n2; ++b) out.push_back({a, b});
    return out;
}

BlockSymmetricSet from_mask(int n1, int n2, unsigned m) {
    const auto all = box2(n1, n2);
    std::set<WeightTuple> t;
    for (std::size_t i = 0; i < all.size(); ++i)
        if ((m >> i) & 1u) t.insert(all[i]);
    return BlockSymmetricSet(BlockStructure({n1, n2}), t);
}

}  // namespace

TEST_CASE("poset extremes") {
    auto e = poset_extremes({{0, 0}, {0, 1}, {1, 0}}, {1, 1});
    CHECK(e.innext == std::set<IndexTuple>{{0, 1}, {1, 0}});
    CHECK(e.outext == std::set<IndexTuple>{{1, 1}, {2, 0}, {0, 2}});

    std::set<IndexTuple> box;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 1; ++b) box.insert({a, b});
    e = poset_extremes(box, {2, 1});
    CHECK(e.innext == std::set<IndexTuple>{{2, 1}});
    CHECK(e.outext == std::set<IndexTuple>{{3, 0}, {0, 2}});

    e = poset_extremes({}, {-1, -1});
    CHECK(e.innext.empty());
    CHECK(e.outext == std::set<IndexTuple>{{0, 0}});
}

TEST_CASE("pdc detection") {
    BlockSymmetricSet s(BlockStructure({1, 1}), {{0, 0}, {0, 1}, {1, 0}});
    auto c = pdc_check(s);
    REQUIRE(c);
    CHECK(c->order == OrderChoice{asc, asc});
    CHECK_FALSE(pdc_under(s, {desc, asc}));

    auto g = BlockSymmetricSet::grid({SymmetricSet(3, {0, 2}), SymmetricSet(2, {1})});
    c = pdc_check(g);
    REQUIRE(c);
    CHECK(c->order == OrderChoice{asc, asc});
    CHECK(outer_intact_check(g, c->order));
}

TEST_CASE("prefix sets") {
    auto g = BlockSymmetricSet::grid({SymmetricSet(1, {0, 1}), SymmetricSet(5, {0, 2, 4})});
    CHECK(prefix_set(g, {asc, asc}, 0, 0).weights() == std::vector<int>{0});
    CHECK(prefix_set(g, {asc, desc}, 1, 1).weights() == std::vector<int>{2, 4});
    CHECK(prefix_set(g, {asc, asc}, 1, 2) == g.projection(1));
    CHECK_THROWS_AS(prefix_set(g, {asc, asc}, 1, 3), std::domain_error);
}

TEST_CASE("outer intactness") {
    BlockSymmetricSet s(BlockStructure({3, 3}), {{0, 0}, {0, 3}, {3, 0}});
    // innext {(0,1),(1,0)}: the prefix {0} has outer (0,4) while S_1 = {0,3} has (0,3)
    CHECK(outer_interval(SymmetricSet(3, {0})) == PeripheralInterval(3, 0, 4));
    CHECK(outer_interval(SymmetricSet(3, {0, 3})) == PeripheralInterval(3, 0, 3));
    CHECK_FALSE(outer_intact_check(s, {asc, asc}));

    BlockSymmetricSet layer(BlockStructure({2, 2}), {{1, 1}});
    CHECK(outer_intact_check(layer, {asc, asc}));
    CHECK(block_index_complexity(layer, {asc, asc}) == 2);
    CHECK_THROWS_AS(outer_intact_check(BlockSymmetricSet(BlockStructure({1, 1}), {{0, 0}, {1, 1}}), {asc, asc}),
                    std::domain_error);
}

TEST_CASE("complement closure of pdc sets, N <= 6") {
    // With only the two monotone orders per block, complements need not be
    // PDC: {(0,1)} in sizes (1,2) leaves the row {0,2} for block-1 weight 0,
    // and the grid {1}x{1} in sizes (2,2) leaves the row {0,2} for weight 1.
    // Neither row is a prefix of an order on [0,2].
    BlockSymmetricSet smallest(BlockStructure({1, 2}), {{0, 1}});
    REQUIRE(pdc_check(smallest));
    CHECK_FALSE(pdc_check(smallest.complement()));
    auto middle = BlockSymmetricSet::grid({SymmetricSet(2, {1}), SymmetricSet(2, {1})});
    REQUIRE(pdc_check(middle));
    CHECK_FALSE(pdc_check(middle.complement()));

    int pdc = 0, closed = 0;
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n1 + n2 <= 6 && n2 <= 3; ++n2) {
            const int cells = (n1 + 1) * (n2 + 1);
            for (unsigned m = 0; m < (1u << cells); ++m) {
                auto s = from_mask(n1, n2, m);
                if (!pdc_check(s)) continue;
                ++pdc;
                if (pdc_check(s.complement())) ++closed;
            }
        }
    MESSAGE("pdc sets: " << pdc << ", with pdc complement: " << closed);
    CHECK(closed < pdc);
}

TEST_CASE("innext boxes decompose pdc sets") {
    for (unsigned m = 0; m < (1u << 9); ++m) {
        auto s = from_mask(2, 2, m);
        auto c = pdc_check(s);
        if (!c) continue;
        auto e = poset_extremes(c->lattice.members, c->lattice.q);
        std::set<WeightTuple> u;
        for (const auto& z : e.innext) {
            auto a = prefix_set(s, c->order, 0, z[0]), b = prefix_set(s, c->order, 1, z[1]);
            for (int x : a.weights())
                for (int y : b.weights()) u.insert({x, y});
        }
        CHECK(u == s.tuples());
    }
}
