#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercover/oracles.hpp"

using namespace hypercover;

namespace {

PointSet cube_minus(int n, std::vector<Point> removed) {
    std::vector<Point> pts;
    for (Point p = 0; p < (Point{1} << n); ++p)
        if (std::find(removed.begin(), removed.end(), p) == removed.end()) pts.push_back(p);
    return PointSet(n, pts);
}

// Affine closure test by rational rank of homogenized points.
bool closed_by_rank(int n, std::uint64_t z) {
    auto rank_of = [&](std::uint64_t m) {
        RationalMatrix a(0, n + 1);
        for (Point p = 0; p < (Point{1} << n); ++p)
            if ((m >> p) & 1u) {
                RationalVector row(n + 1);
                for (int i = 0; i < n; ++i) row[i] = (p >> i) & 1u;
                row[n] = 1;
                a.append_row(row);
            }
        return rank(a);
    };
    const int r = rank_of(z);
    for (Point x = 0; x < (Point{1} << n); ++x)
        if (!((z >> x) & 1u) && rank_of(z | (std::uint64_t{1} << x)) == r) return false;
    return true;
}

}  // namespace

TEST_CASE("cube flats") {
    CHECK(enumerate_cube_flats(1).size() == 3);
    CHECK(enumerate_cube_flats(2).size() == 11);
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t full = (std::uint64_t{1} << (1 << n)) - 1;
        std::vector<std::uint64_t> brute;
        for (std::uint64_t z = 0; z < full; ++z)
            if (closed_by_rank(n, z)) brute.push_back(z);
        std::vector<std::uint64_t> got;
        for (const auto& f : enumerate_cube_flats(n)) {
            got.push_back(f.points);
            const auto h = realizable_witness(f);
            for (Point p = 0; p < (Point{1} << n); ++p) CHECK((h.evaluate(p) == 0) == bool((f.points >> p) & 1u));
        }
        std::sort(got.begin(), got.end());
        CHECK(got == brute);
    }
    CHECK_THROWS_AS(realizable_witness(CubeFlat{2, 0b0111, 2}), std::domain_error);
    CHECK(cube_closure(3, 0b10010110) == 0b11111111);
    CHECK_THROWS_AS(enumerate_cube_flats(6), OracleRefusal);
}

TEST_CASE("generic combination avoids every group") {
    std::vector<std::vector<RationalVector>> g{{{1, -1}}, {{1, 1}}, {{0, 1}}, {{1, 0}, {0, 1}}};
    auto c = generic_combination(g, 2);
    for (const auto& grp : g) {
        bool alive = false;
        for (const auto& r : grp) alive = alive || dot(r, c) != 0;
        CHECK(alive);
    }
}

TEST_CASE("epc oracle examples") {
    for (int n = 1; n <= 3; ++n)
        for (Point a = 0; a < (Point{1} << n); ++a) CHECK(epc_oracle(CoverSpec(cube_minus(n, {a}), 1, 0)).value == n);
    auto sw = epc_oracle(CoverSpec(cube_minus(3, {0}), 2, 1));
    CHECK(sw.value == 5);
    CHECK(sw.check.passed);
    CHECK(sw.transcript.back().bound == 5);
    CHECK(sw.transcript[sw.transcript.size() - 2].status != "feasible");
    CHECK(epc_oracle(CoverSpec(cube_minus(3, {0}), 2, 0)).value == 4);
    // weights {0,1} at n = 3: EPC 3 while no 3 hyperplanes do it
    const auto s = SymmetricSet(3, {0, 1});
    CoverSpec spec(s, 2, 0);
    CHECK(epc_oracle(spec).value == 3);
    CHECK(ehc_oracle(spec).value >= 4);
    CHECK_THROWS_AS(epc_oracle(CoverSpec(cube_minus(3, {0}), 4, 0)), OracleRefusal);
}

TEST_CASE("ehc oracle examples") {
    CHECK(ehc_oracle(CoverSpec(cube_minus(2, {0}), 2, 0)).value == 3);
    CHECK(ehc_oracle(CoverSpec(SymmetricSet(3, {1}).complement(), 1, 0)).value == 2);
    for (Point a = 0; a < 16; ++a) CHECK(ehc_oracle(CoverSpec(cube_minus(4, {a}), 1, 0)).value == 4);
    auto r = ehc_oracle(CoverSpec(cube_minus(3, {0}), 2, 1));
    CHECK(r.value == 5);
    CHECK(r.check.passed);
    CHECK(r.transcript.front().status == "infeasible-by-bound");
    CHECK(r.transcript.front().bound < r.value);
    CHECK_THROWS_AS(ehc_oracle(CoverSpec(cube_minus(5, {0}), 2, 0)), OracleRefusal);
}

TEST_CASE("bepc oracle examples") {
    BlockStructure b({1, 1});
    CHECK(bepc_oracle(CoverSpec(BlockSymmetricSet(b, {{0, 0}, {0, 1}, {1, 0}}), 1, 0, b)).value == 2);
    CHECK(bepc_oracle(CoverSpec(BlockSymmetricSet(b, {{1, 1}}), 1, 0, b)).value == 1);
    BlockStructure one({3});
    const auto s = SymmetricSet(3, {0, 2});
    CHECK(bepc_oracle(CoverSpec(BlockSymmetricSet(one, {{0}, {2}}), 2, 1, one)).value ==
          epc_oracle(CoverSpec(s, 2, 1)).value);
}

TEST_CASE("sandwich, index floor and determinism") {
    for (int n = 1; n <= 3; ++n)
        for (unsigned m = 1; m < (1u << (n + 1)) - 1; ++m) {
            std::vector<int> w;
            for (int x = 0; x <= n; ++x)
                if ((m >> x) & 1u) w.push_back(x);
            const SymmetricSet s(n, w);
            for (int t = 1; t <= 2; ++t) {
                CoverSpec spec(s, t, t - 1);
                const auto e = epc_oracle(spec);
                const auto h = ehc_oracle(spec, {}, Execution::serial);
                CHECK(e.value <= h.value);
                CHECK(e.check.passed);
                CHECK(h.check.passed);
                CHECK(e.value >= epc_index_lower_bound(PointSet::of(s.complement()), t));
                const auto hp = ehc_oracle(spec, {}, Execution::parallel);
                CHECK(hp.value == h.value);
                CHECK(hp.transcript.back().nodes == h.transcript.back().nodes);
                CHECK(std::get<HyperplaneFamily>(hp.witness).items == std::get<HyperplaneFamily>(h.witness).items);
            }
        }
    CHECK(epc_index_lower_bound(PointSet(4, {5}), 1) == 4);
    CHECK_THROWS_AS(epc_index_lower_bound(PointSet(4, {}), 1), std::domain_error);
}
