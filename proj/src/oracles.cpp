#include "hypercover/oracles.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace hypercover {

RationalVector generic_combination(const std::vector<std::vector<RationalVector>>& groups, int dim) {
    RationalVector c(dim, 0);
    std::vector<int> row_of(groups.size(), -1);
    std::vector<Rational> value(groups.size());  // groups[g][row_of[g]] . c
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t r = 0; r < groups[g].size() && row_of[g] < 0; ++r) {
            Rational v = dot(groups[g][r], c);
            if (v != 0) row_of[g] = static_cast<int>(r), value[g] = v;
        }
        if (row_of[g] >= 0) continue;
        int r = -1, i = -1;
        for (std::size_t rr = 0; rr < groups[g].size() && r < 0; ++rr)
            for (int ii = 0; ii < dim; ++ii)
                if (groups[g][rr][ii] != 0) {
                    r = static_cast<int>(rr), i = ii;
                    break;
                }
        if (r < 0) throw std::domain_error("generic combination asked for an identically zero group");
        // c + s e_i keeps row r of g nonzero for every s != 0 (that row vanishes on c);
        // each earlier group loses its witness row for at most one s.
        for (long s = 1;; ++s) {
            bool ok = true;
            for (std::size_t h = 0; h < g && ok; ++h)
                if (value[h] + s * groups[h][row_of[h]][i] == 0) ok = false;
            if (!ok) continue;
            c[i] += s;
            for (std::size_t h = 0; h < g; ++h) value[h] += s * groups[h][row_of[h]][i];
            row_of[g] = r;
            value[g] = s * groups[g][r][i];
            break;
        }
    }
    return c;
}

namespace {

// Exponent vectors of total degree <= d, sorted by degree then lexicographically.
std::vector<Exponent> exponents_up_to(int n, int d) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[i] = v;
            self(self, i + 1, left - v);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    std::stable_sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return out;
}

int order_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Row of the functional P -> (d^alpha P)(a) over the monomial basis.
RationalVector derivative_row(const std::vector<Exponent>& basis, const Exponent& alpha, Point a) {
    RationalVector row(basis.size());
    const int n = static_cast<int>(alpha.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& b = basis[k];
        long v = 1;
        for (int i = 0; i < n && v != 0; ++i) {
            if (b[i] < alpha[i] || (!((a >> i) & 1u) && b[i] > alpha[i])) v = 0;
            for (int m = 0; m < alpha[i] && v != 0; ++m) v *= b[i] - m;
        }
        row[k] = v;
    }
    return row;
}

bool supported_in(const Exponent& e, const BlockStructure& b, int j) {
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        if (e[i] != 0 && (i < b.offset(j) || i >= b.offset(j) + b.sizes[j])) return false;
    return true;
}

Polynomial integral_polynomial(const std::vector<Exponent>& basis, const RationalVector& coef, int n) {
    mpz_class l = 1, g = 0;
    for (const auto& c : coef)
        if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : coef)
        if (c != 0) {
            mpz_class num = c.get_num() * (l / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
    Polynomial p(n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coef[k] != 0) p.add_term(basis[k], Rational(coef[k] * Rational(l) / Rational(g)));
    return p;
}

OracleResult polynomial_oracle(const CoverSpec& spec, const OracleLimits& lim, bool block) {
    const int n = spec.nvars();
    const auto& blocks = spec.blocks();
    if (n > lim.max_n) throw OracleRefusal("dimension " + std::to_string(n) + " exceeds max-n " + std::to_string(lim.max_n));
    if (spec.t() > lim.max_t) throw OracleRefusal("t=" + std::to_string(spec.t()) + " exceeds max-t " + std::to_string(lim.max_t));
    const int t = spec.t(), ell = spec.ell();
    const auto low = exponents_up_to(n, std::max(t, ell + 1));
    std::vector<Point> inside, outside;
    for (Point p = 0; p < (Point{1} << n); ++p) (spec.in_target(p) ? inside : outside).push_back(p);

    OracleResult res;
    res.kind = block ? "bepc" : "epc";
    for (int d = 0; d <= lim.max_degree; ++d) {
        const auto basis = exponents_up_to(n, d);
        TranscriptEntry entry;
        entry.bound = d;
        entry.unknowns = static_cast<int>(basis.size());
        RationalMatrix m(0, entry.unknowns);
        for (Point a : inside)
            for (const auto& al : low)
                if (order_of(al) < t) m.append_row(derivative_row(basis, al, a));
        for (Point b : outside)
            for (const auto& al : low) {
                if (order_of(al) >= ell) continue;
                bool keep = !block;
                for (int j = 0; j < blocks.k() && !keep; ++j) keep = supported_in(al, blocks, j);
                if (keep) m.append_row(derivative_row(basis, al, b));
            }
        const auto ker = kernel(std::move(m));
        entry.rank = ker.rank;
        entry.kernel_dim = static_cast<int>(ker.basis.size());
        if (ker.basis.empty()) {
            entry.status = "kernel-empty";
            res.transcript.push_back(entry);
            continue;
        }
        // Exactness: at each off-target point (per block in block mode) some
        // order-ell functional must survive on the kernel.
        std::vector<std::vector<RationalVector>> groups;
        for (Point b : outside) {
            for (int j = 0; j < (block ? blocks.k() : 1) && !entry.blocked_at; ++j) {
                std::vector<RationalVector> g;
                bool alive = false;
                for (const auto& al : low) {
                    if (order_of(al) != ell || (block && !supported_in(al, blocks, j))) continue;
                    const auto row = derivative_row(basis, al, b);
                    RationalVector on_kernel(ker.basis.size());
                    for (std::size_t i = 0; i < ker.basis.size(); ++i) {
                        on_kernel[i] = dot(row, ker.basis[i]);
                        alive = alive || on_kernel[i] != 0;
                    }
                    g.push_back(std::move(on_kernel));
                }
                if (!alive) {
                    entry.blocked_at = b;
                    entry.blocked_block = block ? j : -1;
                }
                groups.push_back(std::move(g));
            }
            if (entry.blocked_at) break;
        }
        if (entry.blocked_at) {
            entry.status = "exactness-blocked";
            res.transcript.push_back(entry);
            continue;
        }
        const auto c = generic_combination(groups, entry.kernel_dim);
        RationalVector coef(basis.size(), 0);
        for (std::size_t i = 0; i < ker.basis.size(); ++i)
            if (c[i] != 0)
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (ker.basis[i][k] != 0) coef[k] += c[i] * ker.basis[i][k];
        auto poly = integral_polynomial(basis, coef, n);
        res.check = verify_cover(poly, spec);
        if (!res.check.passed) throw std::logic_error("generic kernel element failed verification");
        entry.status = "feasible";
        res.transcript.push_back(entry);
        res.value = d;
        res.witness = std::move(poly);
        return res;
    }
    throw OracleRefusal("no cover up to max-degree " + std::to_string(lim.max_degree));
}

}  // namespace

OracleResult epc_oracle(const CoverSpec& spec, const OracleLimits& lim) {
    if (spec.mode() != CoverMode::exact) throw std::domain_error("epc oracle needs an exact-mode spec");
    return polynomial_oracle(spec, lim, false);
}

OracleResult bepc_oracle(const CoverSpec& spec, const OracleLimits& lim) {
    if (spec.mode() != CoverMode::block_exact) throw std::domain_error("bepc oracle needs a block-exact spec");
    return polynomial_oracle(spec, lim, true);
}

namespace {

constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1

std::int64_t inv_mod(std::int64_t a) {
    std::int64_t r = 1, e = kPrime - 2;
    a %= kPrime;
    if (a < 0) a += kPrime;
    while (e) {
        if (e & 1) r = r * a % kPrime;
        a = a * a % kPrime;
        e >>= 1;
    }
    return r;
}

// Row echelon over GF(p) of difference vectors with entries in {-1,0,1}.
// Their minors are bounded by Hadamard's n^(n/2) <= 216 for n <= 6, far below p,
// so ranks and memberships agree with the rational ones.
struct Echelon {
    int n;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<int> lead;

    std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const int c = lead[r];
            if (v[c] == 0) continue;
            const std::int64_t f = v[c];
            for (int k = 0; k < n; ++k) v[k] = ((v[k] - f * rows[r][k]) % kPrime + kPrime) % kPrime;
        }
        return v;
    }
    bool add(std::vector<std::int64_t> v) {
        v = reduce(std::move(v));
        int c = 0;
        while (c < n && v[c] == 0) ++c;
        if (c == n) return false;
        const std::int64_t inv = inv_mod(v[c]);
        for (auto& x : v) x = x * inv % kPrime;
        rows.push_back(std::move(v));
        lead.push_back(c);
        return true;
    }
};

std::vector<std::int64_t> diff(Point y, Point z, int n) {
    std::vector<std::int64_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = ((((y >> i) & 1) - ((z >> i) & 1)) + kPrime) % kPrime;
    return v;
}

std::pair<std::uint64_t, int> closure_with_dim(int n, std::uint64_t pts) {
    if (pts == 0) return {0, -1};
    const Point z0 = std::countr_zero(pts);
    Echelon e{n, {}, {}};
    for (Point y = 0; y < (Point{1} << n); ++y)
        if ((pts >> y) & 1u) e.add(diff(y, z0, n));
    std::uint64_t out = 0;
    for (Point y = 0; y < (Point{1} << n); ++y) {
        auto r = e.reduce(diff(y, z0, n));
        if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })) out |= std::uint64_t{1} << y;
    }
    return {out, static_cast<int>(e.rows.size())};
}

}  // namespace

std::uint64_t cube_closure(int n, std::uint64_t points) {
    if (n < 1 || n > 6) throw std::domain_error("cube closure supports 1 <= n <= 6");
    return closure_with_dim(n, points).first;
}

std::vector<CubeFlat> enumerate_cube_flats(int n) {
    if (n < 1 || n > 5) throw OracleRefusal("flat enumeration supports 1 <= n <= 5");
    const std::uint64_t full = n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n)) - 1;
    std::unordered_set<std::uint64_t> seen{0};
    std::deque<std::uint64_t> queue{0};
    std::vector<CubeFlat> out;
    while (!queue.empty()) {
        const auto f = queue.front();
        queue.pop_front();
        out.push_back({n, f, closure_with_dim(n, f).second});
        for (Point x = 0; x < (Point{1} << n); ++x) {
            if ((f >> x) & 1u) continue;
            const auto g = cube_closure(n, f | (std::uint64_t{1} << x));
            if (g != full && seen.insert(g).second) queue.push_back(g);
        }
    }
    // larger flats first; the search prefers them as branching candidates
    std::sort(out.begin(), out.end(), [](const CubeFlat& a, const CubeFlat& b) {
        const int pa = std::popcount(a.points), pb = std::popcount(b.points);
        return pa != pb ? pa > pb : a.points < b.points;
    });
    return out;
}

Hyperplane realizable_witness(const CubeFlat& z) {
    const int n = z.n;
    if (z.points && cube_closure(n, z.points) != z.points) throw std::domain_error("point set is not a cube flat");
    RationalMatrix m(0, n + 1);
    for (Point p = 0; p < (Point{1} << n); ++p)
        if ((z.points >> p) & 1u) {
            RationalVector row(n + 1);
            for (int i = 0; i < n; ++i) row[i] = (p >> i) & 1u;
            row[n] = 1;
            m.append_row(row);
        }
    const auto ker = kernel(std::move(m));
    std::vector<std::vector<RationalVector>> groups;
    std::vector<RationalVector> linear;
    for (int i = 0; i < n; ++i) {
        RationalVector g(ker.basis.size());
        for (std::size_t b = 0; b < ker.basis.size(); ++b) g[b] = ker.basis[b][i];
        linear.push_back(std::move(g));
    }
    groups.push_back(std::move(linear));
    for (Point p = 0; p < (Point{1} << n); ++p) {
        if ((z.points >> p) & 1u) continue;
        RationalVector g(ker.basis.size());
        bool alive = false;
        for (std::size_t b = 0; b < ker.basis.size(); ++b) {
            g[b] = ker.basis[b][n];
            for (int i = 0; i < n; ++i)
                if ((p >> i) & 1u) g[b] += ker.basis[b][i];
            alive = alive || g[b] != 0;
        }
        if (!alive) throw std::domain_error("point set is not a cube flat");
        groups.push_back({std::move(g)});
    }
    const auto c = generic_combination(groups, static_cast<int>(ker.basis.size()));
    RationalVector form(n + 1, 0);
    for (std::size_t b = 0; b < ker.basis.size(); ++b)
        for (int i = 0; i <= n; ++i) form[i] += c[b] * ker.basis[b][i];
    mpz_class l = 1;
    for (const auto& x : form) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : form) x *= l;
    const Rational c0 = form[n];
    form.pop_back();
    Hyperplane h(std::move(form), c0);
    for (Point p = 0; p < (Point{1} << n); ++p)
        if ((h.evaluate(p) == 0) != bool((z.points >> p) & 1u)) throw std::logic_error("witness zero set differs from the flat");
    return h;
}

namespace {

struct Multicover {
    int npts;
    std::vector<std::uint64_t> flats;            // candidate flats, index order fixed
    std::vector<std::vector<int>> through;       // flats containing each point, ascending
    std::vector<int> need;
    std::vector<bool> equality;

    struct State {
        std::vector<int> cnt;
        std::vector<int> chosen;
        long long nodes = 0;
    };

    // Returns true when the remaining budget r suffices.
    bool dfs(State& s, int r, int last_point, int last_index, const std::atomic<int>* cancel, int my_branch) const {
        ++s.nodes;
        if (cancel && (s.nodes & 1023) == 0 && cancel->load(std::memory_order_relaxed) < my_branch) return false;
        std::uint64_t deficient = 0, saturated = 0;
        int max_def = 0, total = 0;
        for (int p = 0; p < npts; ++p) {
            const int d = need[p] - s.cnt[p];
            if (equality[p] && d == 0) saturated |= std::uint64_t{1} << p;
            if (d > 0) {
                deficient |= std::uint64_t{1} << p;
                max_def = std::max(max_def, d);
                total += d;
            }
        }
        if (!deficient) return true;
        if (max_def > r) return false;
        int max_cov = 0;
        std::vector<int> admissible_count(npts, 0);
        for (std::size_t f = 0; f < flats.size(); ++f) {
            if (flats[f] & saturated) continue;
            const std::uint64_t hit = flats[f] & deficient;
            max_cov = std::max(max_cov, std::popcount(hit));
            for (auto h = hit; h; h &= h - 1) ++admissible_count[std::countr_zero(h)];
        }
        if (max_cov == 0 || (total + max_cov - 1) / max_cov > r) return false;
        // fail-first: the deficient point with the fewest usable flats,
        // equality points before target points on ties
        int p = -1;
        for (auto h = deficient; h; h &= h - 1) {
            const int q = std::countr_zero(h);
            if (admissible_count[q] == 0) return false;
            if (p < 0 || admissible_count[q] < admissible_count[p] ||
                (admissible_count[q] == admissible_count[p] && equality[q] && !equality[p]))
                p = q;
        }
        std::vector<std::pair<int, int>> cand;  // (-coverage, index)
        const int from = p == last_point ? last_index : 0;
        for (int f : through[p])
            if (f >= from && !(flats[f] & saturated)) cand.emplace_back(-std::popcount(flats[f] & deficient), f);
        std::sort(cand.begin(), cand.end());
        for (const auto& [_, f] : cand) {
            for (auto h = flats[f]; h; h &= h - 1) ++s.cnt[std::countr_zero(h)];
            s.chosen.push_back(f);
            if (dfs(s, r - 1, p, f, cancel, my_branch)) return true;
            s.chosen.pop_back();
            for (auto h = flats[f]; h; h &= h - 1) --s.cnt[std::countr_zero(h)];
        }
        return false;
    }

    int root_bound() const {
        int max_def = 0, total = 0, max_cov = 0;
        std::uint64_t deficient = 0;
        for (int p = 0; p < npts; ++p)
            if (need[p] > 0) {
                deficient |= std::uint64_t{1} << p;
                max_def = std::max(max_def, need[p]);
                total += need[p];
            }
        for (auto f : flats) max_cov = std::max(max_cov, std::popcount(f & deficient));
        if (total == 0) return 0;
        return std::max(max_def, max_cov ? (total + max_cov - 1) / max_cov : INT_MAX);
    }
};

}  // namespace

OracleResult ehc_oracle(const CoverSpec& spec, const OracleLimits& lim, Execution ex) {
    if (spec.mode() != CoverMode::exact) throw std::domain_error("ehc oracle needs an exact-mode spec");
    const int n = spec.nvars();
    const int cap = spec.t() == 1 ? std::min(lim.max_n, 5) : std::min(lim.max_n, 4);
    if (n > cap) throw OracleRefusal("dimension " + std::to_string(n) + " exceeds the ehc bound " + std::to_string(cap));
    if (spec.t() > lim.max_t) throw OracleRefusal("t=" + std::to_string(spec.t()) + " exceeds max-t " + std::to_string(lim.max_t));

    const auto all = enumerate_cube_flats(n);
    Multicover mc;
    mc.npts = 1 << n;
    mc.need.resize(mc.npts);
    mc.equality.resize(mc.npts);
    std::uint64_t off = 0;
    for (Point p = 0; p < static_cast<Point>(mc.npts); ++p) {
        const bool in = spec.in_target(p);
        mc.need[p] = in ? spec.t() : spec.ell();
        mc.equality[p] = !in;
        if (!in) off |= std::uint64_t{1} << p;
    }
    std::vector<int> flat_of;  // candidate index -> position in `all`
    for (std::size_t f = 0; f < all.size(); ++f) {
        if (all[f].points == 0) continue;
        if (spec.ell() == 0 && (all[f].points & off)) continue;
        mc.flats.push_back(all[f].points);
        flat_of.push_back(static_cast<int>(f));
    }
    mc.through.resize(mc.npts);
    for (std::size_t f = 0; f < mc.flats.size(); ++f)
        for (auto h = mc.flats[f]; h; h &= h - 1) mc.through[std::countr_zero(h)].push_back(static_cast<int>(f));

    OracleResult res;
    res.kind = "ehc";
    const int start = mc.root_bound();
    if (start > 0) {
        TranscriptEntry e;
        e.bound = start - 1;
        e.status = "infeasible-by-bound";
        res.transcript.push_back(e);
    }
    for (int k = start; k <= lim.max_size; ++k) {
        TranscriptEntry entry;
        entry.bound = k;
        std::uint64_t deficient = 0;
        for (int p = 0; p < mc.npts; ++p)
            if (mc.need[p] > 0) deficient |= std::uint64_t{1} << p;
        if (!deficient) {
            entry.status = "feasible";
            entry.nodes = 1;
            res.transcript.push_back(entry);
            res.value = k;
            res.witness = HyperplaneFamily(n);
            res.check = verify_cover(std::get<HyperplaneFamily>(res.witness), spec);
            return res;
        }
        // First level of the search expanded here so the subtrees can run
        // on separate threads; same branch point and order as dfs.
        std::vector<int> admissible_count(mc.npts, 0);
        for (auto f : mc.flats)
            for (auto h = f & deficient; h; h &= h - 1) ++admissible_count[std::countr_zero(h)];
        int p = -1;
        for (auto h = deficient; h; h &= h - 1) {
            const int q = std::countr_zero(h);
            if (p < 0 || admissible_count[q] < admissible_count[p] ||
                (admissible_count[q] == admissible_count[p] && mc.equality[q] && !mc.equality[p]))
                p = q;
        }
        std::vector<std::pair<int, int>> cand;
        for (int f : mc.through[p]) cand.emplace_back(-std::popcount(mc.flats[f] & deficient), f);
        std::sort(cand.begin(), cand.end());

        const int nb = static_cast<int>(cand.size());
        std::vector<long long> nodes(nb, 0);
        std::vector<std::vector<int>> sols(nb);
        std::vector<char> found(nb, 0);
        std::atomic<int> best{INT_MAX};
        auto run = [&](int b) {
            if (best.load() < b) return;
            Multicover::State s{std::vector<int>(mc.npts, 0), {}, 0};
            const int f = cand[b].second;
            for (auto h = mc.flats[f]; h; h &= h - 1) ++s.cnt[std::countr_zero(h)];
            s.chosen.push_back(f);
            if (k >= 1 && mc.dfs(s, k - 1, p, f, &best, b)) {
                found[b] = 1;
                sols[b] = s.chosen;
                int cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
            }
            nodes[b] = s.nodes + 1;
        };
        if (ex == Execution::serial) {
            for (int b = 0; b < nb && best.load() == INT_MAX; ++b) run(b);
        } else {
#pragma omp parallel for schedule(dynamic, 1)
            for (int b = 0; b < nb; ++b) run(b);
        }
        const int win = best.load();
        entry.nodes = 1;
        for (int b = 0; b < nb && b <= win; ++b) entry.nodes += nodes[b];
        if (win == INT_MAX) {
            entry.status = "infeasible";
            res.transcript.push_back(entry);
            continue;
        }
        entry.status = "feasible";
        res.transcript.push_back(entry);
        auto chosen = sols[win];
        std::sort(chosen.begin(), chosen.end());
        HyperplaneFamily fam(n);
        for (int f : chosen) fam.add(realizable_witness(all[flat_of[f]]));
        res.value = k;
        res.check = verify_cover(fam, spec);
        if (!res.check.passed) throw std::logic_error("multicover witness failed verification");
        res.witness = std::move(fam);
        return res;
    }
    throw OracleRefusal("no cover up to max-size " + std::to_string(lim.max_size));
}

int epc_index_lower_bound(const PointSet& s, int t) {
    if (s.points.empty()) throw std::domain_error("index bound needs a nonempty set");
    return s.n - index_complexity_bruteforce(s).value + 2 * t - 2;
}

}  // namespace hypercover
