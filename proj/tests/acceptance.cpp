// One line per acceptance criterion; exit status 1 if any line fails.
#include "hypercover/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace hypercover;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SymmetricSet from_mask(int n, unsigned m) {
    std::vector<int> w;
    for (int x = 0; x <= n; ++x)
        if ((m >> x) & 1u) w.push_back(x);
    return SymmetricSet(n, w);
}

PointSet cube_minus(int n, Point a) {
    std::vector<Point> pts;
    for (Point p = 0; p < (Point{1} << n); ++p)
        if (p != a) pts.push_back(p);
    return PointSet(n, pts);
}

int incidence(const HyperplaneFamily& f, Point p) {
    int c = 0;
    for (const auto& h : f.items) c += h.evaluate(p) == 0;
    return c;
}

std::vector<BlockSymmetricSet> two_block_sets(int n1, int n2) {
    std::vector<WeightTuple> cells;
    for (int a = 0; a <= n1; ++a)
        for (int b = 0; b <= n2; ++b) cells.push_back({a, b});
    std::vector<BlockSymmetricSet> out;
    for (unsigned m = 1; m < (1u << cells.size()); ++m) {
        std::set<WeightTuple> t;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if ((m >> i) & 1u) t.insert(cells[i]);
        out.emplace_back(BlockStructure({n1, n2}), t);
    }
    return out;
}

std::string tuples_str(const BlockSymmetricSet& s) {
    std::ostringstream o;
    o << "{";
    bool first = true;
    for (const auto& t : s.tuples()) {
        o << (first ? "" : ",") << "(" << t[0] << "," << t[1] << ")";
        first = false;
    }
    return o.str() + "}";
}

Outcome alon_furedi() {
    const auto t0 = Clock::now();
    Outcome o;
    int checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (Point a = 0; a < (Point{1} << n); ++a) {
            const CoverSpec spec(cube_minus(n, a), 1, 0);
            const auto e = epc_oracle(spec), h = ehc_oracle(spec);
            if (e.value != n || h.value != n) {
                o.pass = false;
                o.detail += " n=" + std::to_string(n) + " a=" + std::to_string(a) + ": epc " + std::to_string(e.value) +
                            " ehc " + std::to_string(h.value);
            }
            ++checked;
        }
    const double s = seconds_since(t0);
    if (s >= 10) o.pass = false;
    o.detail = std::to_string(checked) + " instances, " + std::to_string(s).substr(0, 5) + " s" + o.detail;
    return o;
}

Outcome sauermann_wigderson() {
    const auto t0 = Clock::now();
    Outcome o;
    int tight = 0, loose = 0;
    for (int n = 1; n <= 4; ++n)
        for (int t = 1; t <= 3; ++t)
            for (int ell = 0; ell < t; ++ell) {
                int expect;
                if (ell == t - 1) expect = n + 2 * t - 2, ++tight;
                else if (t - 1 <= (n + 1) / 2) expect = n + 2 * t - 3, ++loose;
                else continue;
                const int v = epc_oracle(CoverSpec(cube_minus(n, 0), t, ell)).value;
                if (v != expect) {
                    o.pass = false;
                    o.detail += " (n,t,l)=(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(ell) +
                                "): " + std::to_string(v) + " vs " + std::to_string(expect);
                }
            }
    const double s = seconds_since(t0);
    if (s >= 120) o.pass = false;
    o.detail = std::to_string(tight) + " instances with l=t-1, " + std::to_string(loose) + " with l<t-1, " +
               std::to_string(s).substr(0, 5) + " s" + o.detail;
    return o;
}

Outcome clifton_huang() {
    const auto t0 = Clock::now();
    Outcome o;
    for (auto [n, t] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        const int v = ehc_oracle(CoverSpec(cube_minus(n, 0), t, 0)).value;
        const int expect = n + t * (t - 1) / 2;
        o.detail += " (" + std::to_string(n) + "," + std::to_string(t) + ")=" + std::to_string(v);
        if (v != expect) o.pass = false, o.detail += "!=" + std::to_string(expect);
    }
    const double s = seconds_since(t0);
    if (s >= 300) o.pass = false;
    o.detail = std::to_string(s).substr(0, 5) + " s," + o.detail;
    return o;
}

Outcome multiplicity_symmetric() {
    Outcome o;
    int checked = 0;
    double worst = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto t0 = Clock::now();
        for (unsigned m = 1; m < (1u << (n + 1)); ++m) {
            const auto s = from_mask(n, m);
            for (int t = 1; t <= 2; ++t) {
                const int formula = lambda_bar(s) + 2 * t - 2;
                const CoverSpec spec(s.complement(), t, t - 1);
                const auto f = construct_symmetric_cover(s, t);
                const bool ok = f.size() == formula && verify_cover(f, spec).passed &&
                                epc_oracle(spec).value == formula && ehc_oracle(spec).value == formula;
                if (!ok) {
                    o.pass = false;
                    o.detail += " n=" + std::to_string(n) + " mask=" + std::to_string(m) + " t=" + std::to_string(t);
                }
                ++checked;
            }
        }
        worst = std::max(worst, seconds_since(t0));
    }
    if (worst >= 600) o.pass = false;
    o.detail = std::to_string(checked) + " instances, slowest n sweep " + std::to_string(worst).substr(0, 5) + " s" + o.detail;
    return o;
}

Outcome grid_equivalence() {
    Outcome o;
    int checked = 0;
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n1 + n2 <= 4; ++n2)
            for (unsigned m1 = 1; m1 < (1u << (n1 + 1)); ++m1)
                for (unsigned m2 = 1; m2 < (1u << (n2 + 1)); ++m2) {
                    const auto a = from_mask(n1, m1), b = from_mask(n2, m2);
                    const auto g = BlockSymmetricSet::grid({a, b});
                    for (int t = 1; t <= 2; ++t) {
                        const int formula = lambda_bar(a) + lambda_bar(b) + 2 * t - 2;
                        const CoverSpec spec(g.complement(), t, t - 1, g.structure());
                        const auto f = construct_grid_cover(g, t);
                        const bool ok = f.size() == formula && verify_cover(f, spec).passed &&
                                        bepc_oracle(spec).value == formula;
                        if (!ok) {
                            o.pass = false;
                            o.detail += " " + tuples_str(g) + " t=" + std::to_string(t);
                        }
                        ++checked;
                    }
                }
    o.detail = std::to_string(checked) + " grid instances" + o.detail;
    return o;
}

Outcome inner_outer() {
    const auto t0 = Clock::now();
    Outcome o;
    long checked = 0, equalities = 0, bad = 0;
    for (int n = 1; n <= 10; ++n)
        for (unsigned m = 1; m < (1u << (n + 1)); ++m) {
            const auto s = from_mask(n, m);
            const int lhs = inn_measure(s.complement()) + out_measure(s);
            const bool periph = is_peripheral(s) || is_peripheral(s.complement());
            if (lhs < n || (lhs == n) != periph) ++bad;
            equalities += lhs == n;
            ++checked;
        }
    const double s = seconds_since(t0);
    o.pass = bad == 0 && s < 10;
    o.detail = std::to_string(checked) + " sets, " + std::to_string(equalities) + " equalities, " + std::to_string(bad) +
               " exceptions, " + std::to_string(s).substr(0, 5) + " s";
    return o;
}

Outcome index_symmetric() {
    Outcome o;
    long checked = 0, bad = 0;
    for (int n = 1; n <= 5; ++n)
        for (unsigned m = 1; m < (1u << (n + 1)); ++m) {
            const auto s = from_mask(n, m);
            const int r = index_complexity_bruteforce(PointSet::of(s)).value;
            if (r != out_measure(s) || lambda_bar(s) < n - r) ++bad;
            ++checked;
        }
    o.pass = bad == 0;
    o.detail = std::to_string(checked) + " sets, " + std::to_string(bad) + " exceptions";
    return o;
}

Outcome index_pdc() {
    Outcome o;
    long sets = 0, pairs = 0, bad = 0;
    const OrderChoice orders[] = {{BlockOrder::ascending, BlockOrder::ascending},
                                  {BlockOrder::ascending, BlockOrder::descending},
                                  {BlockOrder::descending, BlockOrder::ascending},
                                  {BlockOrder::descending, BlockOrder::descending}};
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (const auto& s : two_block_sets(n1, n2)) {
                int brute = -1;
                for (const auto& ord : orders) {
                    if (!pdc_under(s, ord) || !outer_intact_check(s, ord)) continue;
                    if (brute < 0) {
                        brute = index_complexity_bruteforce(PointSet(n1 + n2, s.points())).value;
                        ++sets;
                    }
                    ++pairs;
                    if (block_index_complexity(s, ord) != brute) {
                        ++bad;
                        o.detail += " " + tuples_str(s);
                    }
                }
            }
    o.pass = bad == 0 && sets > 0;
    o.detail = std::to_string(sets) + " outer-intact pdc sets, " + std::to_string(pairs) + " (set, order) pairs, " +
               std::to_string(bad) + " exceptions" + o.detail;
    return o;
}

Outcome hamming() {
    Outcome o;
    int checked = 0, built = 0;
    std::string mismatches;
    for (int n = 2; n <= 4; ++n)
        for (int w = 1; w <= n - 1; ++w)
            for (int t = 2; t <= (n + 3) / 2; ++t) {
                std::vector<int> ws;
                for (int x = 0; x < w; ++x) ws.push_back(x);
                const CoverSpec spec(SymmetricSet(n, ws), t, 0);
                const int v = epc_oracle(spec).value, formula = w + 2 * t - 3;
                ++checked;
                if (v != formula) {
                    o.pass = false;
                    mismatches += " (n,w,t)=(" + std::to_string(n) + "," + std::to_string(w) + "," + std::to_string(t) +
                                  "): oracle " + std::to_string(v) + " formula " + std::to_string(formula);
                }
                std::vector<Point> base_pts;
                for (Point p = 0; p + 1 < (Point{1} << w); ++p) base_pts.push_back(p);
                const auto base = epc_oracle(CoverSpec(PointSet(w, base_pts), t, 0));
                if (base.value != formula) continue;  // no base of the required degree is minimal here
                const auto q = construct_hamming_ball_cover(n, w, t, std::get<Polynomial>(base.witness));
                if (q.degree() != formula || !verify_cover(q, spec).passed) {
                    o.pass = false;
                    mismatches += " symmetrized witness failed at (" + std::to_string(n) + "," + std::to_string(w) + "," +
                                  std::to_string(t) + ")";
                }
                ++built;
            }
    const CoverSpec ce(SymmetricSet(3, {0, 1}), 2, 0);
    const int e = epc_oracle(ce).value, h = ehc_oracle(ce).value;
    if (e != 3 || h < 4) o.pass = false;
    o.detail = std::to_string(checked) + " instances, " + std::to_string(built) + " symmetrized witnesses; weights {0,1} in {0,1}^3: epc " +
               std::to_string(e) + ", ehc " + std::to_string(h) + mismatches;
    return o;
}

Outcome layer() {
    Outcome o;
    int checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (int w = 0; w <= n; ++w)
            for (int t = 1; t <= 3; ++t) {
                const CoverSpec spec(SymmetricSet(n, {w}), t, 0);
                const auto p = construct_layer_power_cover(n, w, t);
                if (epc_oracle(spec).value != t || p.degree() != t || !verify_cover(p, spec).passed) {
                    o.pass = false;
                    o.detail += " (n,w,t)=(" + std::to_string(n) + "," + std::to_string(w) + "," + std::to_string(t) + ")";
                }
                ++checked;
            }
    o.detail = std::to_string(checked) + " instances" + o.detail;
    return o;
}

Outcome subcube() {
    Outcome o;
    int checked = 0, oracle_checked = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m)
            for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
                const auto s = from_mask(n, mask);
                for (int t = 1; t <= 2; ++t) {
                    const auto f = construct_symmetric_cover(s, t);
                    const CoverSpec base(s.complement(), t, t - 1);
                    std::vector<Point> lifted_pts;
                    for (Point p : s.complement().points())
                        for (Point free = 0; free < (Point{1} << m); ++free) lifted_pts.push_back((p << m) | free);
                    std::sort(lifted_pts.begin(), lifted_pts.end());
                    const CoverSpec big(PointSet(n + m, lifted_pts), t, t - 1);
                    const auto up = lift_subcube_cover(f, m);
                    const auto down = restrict_subcube_cover(up, m);
                    bool ok = verify_cover(f, base).passed && verify_cover(up, big).passed && up.size() == f.size() &&
                              down.collapsed.empty() && down.family == f && verify_cover(down.family, base).passed;
                    if (n + m <= 4) {
                        ok = ok && ehc_oracle(big).value == ehc_oracle(base).value;
                        ++oracle_checked;
                    }
                    if (!ok) {
                        o.pass = false;
                        o.detail += " n=" + std::to_string(n) + " m=" + std::to_string(m) + " mask=" + std::to_string(mask) +
                                    " t=" + std::to_string(t);
                    }
                    ++checked;
                }
            }
    o.detail = std::to_string(checked) + " round trips, " + std::to_string(oracle_checked) + " with equal ehc" + o.detail;
    return o;
}

Outcome pdc_adjudication() {
    Outcome o;
    int instances = 0, innext_agree = 0, literal_agree = 0;
    std::string literal_off;
    int shown = 0;
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n1 + n2 <= 4; ++n2)
            for (const auto& s : two_block_sets(n1, n2)) {
                const auto c = pdc_check(s);
                if (!c || s.complement().empty()) continue;
                const CoverSpec spec(s.complement(), 1, 0, s.structure());
                const int oracle = bepc_oracle(spec).value;
                const int in = pdc_formula(s, c->order, 1, PdcVariant::innext);
                const int lit = pdc_formula(s, c->order, 1, PdcVariant::literal_outext);
                ++instances;
                if (in == oracle) ++innext_agree;
                else o.pass = false, o.detail += " innext mismatch " + tuples_str(s);
                if (lit == oracle) ++literal_agree;
                else if (shown++ < 4)
                    literal_off += " " + std::to_string(n1) + "x" + std::to_string(n2) + tuples_str(s) + ":" + std::to_string(lit) +
                                   "/" + std::to_string(oracle);
            }
    const BlockSymmetricSet ex(BlockStructure({1, 1}), {{0, 0}, {0, 1}, {1, 0}});
    const OrderChoice asc{BlockOrder::ascending, BlockOrder::ascending};
    const int lit = pdc_formula(ex, asc, 1, PdcVariant::literal_outext), in = pdc_formula(ex, asc, 1, PdcVariant::innext);
    const int orc = bepc_oracle(CoverSpec(ex.complement(), 1, 0, ex.structure())).value;
    if (lit != 2 || orc != 1 || in != 1) o.pass = false;
    o.detail = std::to_string(instances) + " instances, innext agrees on " + std::to_string(innext_agree) + ", literal on " +
               std::to_string(literal_agree) + "; 2x2 instance literal=" + std::to_string(lit) + " oracle=" + std::to_string(orc) +
               " innext=" + std::to_string(in) + "; literal/oracle disagreements include" + literal_off + o.detail;
    return o;
}

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

Outcome invariants() {
    Outcome o;
    auto fail = [&](const std::string& what) { o.pass = false, o.detail += " " + what; };

    // Appendix A: a family that is a cover makes its product a cover
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-1, 1), cst(-2, 1), size(1, 6);
    int specs = 0;
    for (int rep = 0; rep < 1500; ++rep) {
        const int n = 2 + rep % 3;
        HyperplaneFamily f(n);
        const int k = size(rng);
        while (f.size() < k) {
            std::vector<Rational> c(n);
            for (auto& x : c) x = coef(rng);
            try {
                f.add(Hyperplane(c, cst(rng)));
            } catch (const std::domain_error&) {
            }
        }
        const auto prod = product_of_affine(f);
        for (int t = 1; t <= 3; ++t)
            for (int ell = 0; ell < t; ++ell) {
                std::vector<Point> tgt;
                bool ok = true;
                for (Point p = 0; p < (Point{1} << n); ++p) {
                    const int c = incidence(f, p);
                    if (c >= t) tgt.push_back(p);
                    else if (c != ell) ok = false;
                }
                if (!ok || tgt.size() == (std::size_t{1} << n)) continue;
                const CoverSpec spec(PointSet(n, tgt), t, ell);
                if (!verify_cover(f, spec).passed || !verify_cover(prod, spec).passed) fail("appendix-A");
                if (n == 4) {
                    const CoverSpec b(PointSet(n, tgt), t, ell, BlockStructure({2, 2}));
                    if (verify_cover(f, b).passed && !verify_cover(prod, b).passed) fail("appendix-A-block");
                }
                ++specs;
            }
    }
    // Lemma T
    int lemma = 0;
    for (int n = 1; n <= 10; ++n)
        for (int i = 0; i <= (n + 1) / 2; ++i) {
            if (n == 1 && i == 1) continue;  // zero form
            const auto f = family_Hstar(n, i);
            const auto t = canonical_weight_window(n, i);
            for (Point p = 0; p < (Point{1} << n); ++p)
                if ((incidence(f, p) > 0) != t.contains(p)) fail("lemma-T");
            ++lemma;
        }
    // separation
    int seps = 0;
    for (int n = 1; n <= 4; ++n) {
        const Point all = (Point{1} << n) - 1;
        for (Point p = 0; p <= all; ++p)
            for (Point i0 = 0; i0 <= all; ++i0) {
                if (i0 & p) continue;
                for (Point i1 = 0; i1 <= all; ++i1) {
                    if ((i1 & ~p) || (i0 | i1) == 0) continue;
                    const Point mask = i0 | i1;
                    std::vector<int> w;
                    for (int x = 0; x <= n; ++x) {
                        bool every = true;
                        for (Point y = 0; y <= all; ++y)
                            if (std::popcount(y) == x && ((y ^ p) & mask) == 0) every = false;
                        if (every) w.push_back(x);
                    }
                    if (separation(n, p, i0, i1).as_set() != SymmetricSet(n, w)) fail("sym-index");
                    ++seps;
                }
            }
    }
    // transform
    int transforms = 0;
    for (int n = 1; n <= 10; ++n)
        for (unsigned m = 0; m < (1u << (n + 1)); ++m) {
            const auto s = from_mask(n, m);
            if (lambda_measure(complement_transform(s)) != lambda_measure(s)) fail("transform");
            ++transforms;
        }
    // flats
    int flats = 0;
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t full = (std::uint64_t{1} << (1 << n)) - 1;
        std::vector<std::uint64_t> brute, got;
        for (std::uint64_t z = 0; z < full; ++z)
            if (closed_by_rank(n, z)) brute.push_back(z);
        for (const auto& f : enumerate_cube_flats(n)) got.push_back(f.points);
        std::sort(got.begin(), got.end());
        if (got != brute) fail("flats n=" + std::to_string(n));
        flats += static_cast<int>(got.size());
    }
    o.detail = "appendix-A " + std::to_string(specs) + " specs, lemma-T " + std::to_string(lemma) + " families, sym-index " +
               std::to_string(seps) + " triples, transform " + std::to_string(transforms) + " sets, flats " +
               std::to_string(flats) + " (n<=3)" + o.detail;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, alon_furedi},      {2, sauermann_wigderson}, {3, clifton_huang}, {4, multiplicity_symmetric},
        {5, grid_equivalence}, {6, inner_outer},         {7, index_symmetric}, {8, index_pdc},
        {9, hamming},          {10, layer},              {11, subcube},        {12, pdc_adjudication},
        {13, invariants}};
    int failed = 0;
    for (const auto& [id, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %2d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
