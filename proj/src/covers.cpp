#include "hypercover/covers.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace hypercover {

int target_dimension(const Target& t) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SymmetricSet>) return s.n();
            else if constexpr (std::is_same_v<T, PointSet>) return s.n;
            else return s.structure().total();
        },
        t);
}

namespace {

BlockStructure natural_blocks(const Target& t) {
    if (auto b = std::get_if<BlockSymmetricSet>(&t)) return b->structure();
    return BlockStructure({target_dimension(t)});
}

}  // namespace

CoverSpec::CoverSpec(Target target, int t, int ell)
    : CoverSpec(std::move(target), t, ell, BlockStructure()) {}

CoverSpec::CoverSpec(Target target, int t, int ell, BlockStructure blocks)
    : target_(std::move(target)), t_(t), ell_(ell) {
    mode_ = blocks.sizes.empty() ? CoverMode::exact : CoverMode::block_exact;
    blocks_ = blocks.sizes.empty() ? natural_blocks(target_) : std::move(blocks);
    if (t_ < 1) throw std::domain_error("t must be at least 1");
    if (ell_ < 0 || ell_ >= t_) throw std::domain_error("ell must lie in [0, t-1]");
    if (blocks_.total() != target_dimension(target_)) throw std::domain_error("block sizes do not match the target dimension");
    if (nvars() > 24) throw std::domain_error("verification is exhaustive; at most 24 coordinates");
    const Point cube = Point{1} << nvars();
    long long inside = 0;
    for (Point p = 0; p < cube; ++p) inside += in_target(p);
    if (inside == static_cast<long long>(cube)) throw std::domain_error("target must be a proper subset of the cube");
}

bool CoverSpec::in_target(Point p) const {
    return std::visit([p](const auto& s) { return s.contains(p); }, target_);
}

namespace {

// Runs check(p, out) over every cube point; violations come back sorted, so the
// serial and parallel paths produce identical reports.
template <class F>
VerificationReport scan_cube(int n, Execution ex, F&& check) {
    const long long count = 1LL << n;
    VerificationReport r;
    r.points_checked = count;
    if (ex == Execution::serial) {
        for (long long p = 0; p < count; ++p) check(static_cast<Point>(p), r.violations);
    } else {
#pragma omp parallel
        {
            std::vector<Violation> local;
#pragma omp for schedule(dynamic, 8)
            for (long long p = 0; p < count; ++p) check(static_cast<Point>(p), local);
#pragma omp critical
            r.violations.insert(r.violations.end(), local.begin(), local.end());
        }
    }
    std::sort(r.violations.begin(), r.violations.end());
    r.passed = r.violations.empty();
    return r;
}

}  // namespace

VerificationReport verify_cover(const HyperplaneFamily& f, const CoverSpec& spec, Execution ex) {
    if (f.nvars != spec.nvars()) throw std::domain_error("family dimension does not match the spec");
    const auto& blocks = spec.blocks();
    // Which members have no coefficient inside block j.
    std::vector<std::vector<bool>> flat_on(blocks.k(), std::vector<bool>(f.size()));
    for (int j = 0; j < blocks.k(); ++j)
        for (int h = 0; h < f.size(); ++h) {
            bool flat = true;
            for (int i = blocks.offset(j); i < blocks.offset(j) + blocks.sizes[j]; ++i)
                if (f.items[h].coeffs[i] != 0) flat = false;
            flat_on[j][h] = flat;
        }
    return scan_cube(spec.nvars(), ex, [&](Point p, std::vector<Violation>& out) {
        std::vector<int> zero;
        for (int h = 0; h < f.size(); ++h)
            if (f.items[h].evaluate(p) == 0) zero.push_back(h);
        const int c = static_cast<int>(zero.size());
        if (spec.in_target(p)) {
            if (c < spec.t()) out.push_back({p, -1, "below-t", c});
            return;
        }
        if (c != spec.ell()) out.push_back({p, -1, "not-ell", c});
        if (spec.mode() != CoverMode::block_exact) return;
        for (int j = 0; j < blocks.k(); ++j)
            for (int h : zero)
                if (flat_on[j][h]) out.push_back({p, j, "collapse", 0, h});
    });
}

VerificationReport verify_cover(const Polynomial& poly, const CoverSpec& spec, Execution ex) {
    if (poly.nvars() != spec.nvars()) throw std::domain_error("polynomial dimension does not match the spec");
    if (poly.is_zero()) {
        VerificationReport r;
        r.passed = false;
        r.violations.push_back({0, -1, "zero-polynomial", -1});
        return r;
    }
    const auto& blocks = spec.blocks();
    return scan_cube(spec.nvars(), ex, [&](Point p, std::vector<Violation>& out) {
        if (spec.in_target(p)) {
            const int m = lowest_order_at(poly, p);
            if (m < spec.t()) out.push_back({p, -1, "below-t", m});
            return;
        }
        if (spec.mode() == CoverMode::exact) {
            const int m = lowest_order_at(poly, p);
            if (m != spec.ell()) out.push_back({p, -1, "not-ell", m});
            return;
        }
        for (int j = 0; j < blocks.k(); ++j) {
            std::vector<std::optional<Rational>> fix(spec.nvars());
            Point local = 0;
            for (int i = 0; i < spec.nvars(); ++i) {
                const bool bit = (p >> i) & 1u;
                if (i >= blocks.offset(j) && i < blocks.offset(j) + blocks.sizes[j]) {
                    if (bit) local |= Point{1} << (i - blocks.offset(j));
                } else {
                    fix[i] = Rational(bit ? 1 : 0);
                }
            }
            const Polynomial q = poly.substitute(fix);
            const int m = q.is_zero() ? -1 : lowest_order_at(q, local);
            if (m != spec.ell()) out.push_back({p, j, "block-not-ell", m});
        }
    });
}

HyperplaneFamily family_Hprime(int n, const std::vector<int>& weights) {
    HyperplaneFamily f(n);
    for (int w : weights) {
        if (w < 0 || w > n) throw std::domain_error("layer weight outside [0,n]");
        f.add(Hyperplane(std::vector<Rational>(n, 1), -w));
    }
    return f;
}

HyperplaneFamily family_Hstar(int n, int i) {
    if (i < 0 || i > (n + 1) / 2) throw std::domain_error("H* index outside [0, ceil(n/2)]");
    HyperplaneFamily f(n);
    for (int j = 1; j <= i; ++j) {
        std::vector<Rational> c(n, 0);
        for (int k = 0; k < n - j; ++k) c[k] = 1;
        c[n - j] = -(n - 2 * i + j);
        // only (n,i) = (1,1) makes every coefficient vanish; Hyperplane rejects it
        f.add(Hyperplane(std::move(c), -(i - j)));
    }
    return f;
}

HyperplaneFamily family_Hcirc(int n, int m) {
    if (m < 0) throw std::domain_error("negative repetition count");
    HyperplaneFamily f(n);
    std::vector<Rational> e1(n, 0);
    e1[0] = 1;
    for (int r = 0; r < m; ++r) {
        f.add(Hyperplane(e1, 0));
        f.add(Hyperplane(e1, -1));
    }
    return f;
}

HyperplaneFamily vanishing_family(const SymmetricSet& a) {
    if (a.full()) throw std::domain_error("no hyperplane family vanishes exactly on the full cube");
    const int n = a.n();
    const int m = mu(a);
    auto f = family_Hstar(n, m);
    const auto window = canonical_weight_window(n, m);
    std::vector<int> rest;
    for (int w : a.weights())
        if (!window.contains_weight(w)) rest.push_back(w);
    f.append(family_Hprime(n, rest));
    return f;
}

HyperplaneFamily embed_block(const HyperplaneFamily& f, const BlockStructure& b, int j) {
    if (f.nvars != b.sizes.at(j)) throw std::domain_error("family does not fit the block");
    HyperplaneFamily out(b.total());
    for (const auto& h : f.items) {
        std::vector<Rational> c(b.total(), 0);
        std::copy(h.coeffs.begin(), h.coeffs.end(), c.begin() + b.offset(j));
        out.add(Hyperplane(std::move(c), h.constant));
    }
    return out;
}

HyperplaneFamily cross_padding(const BlockStructure& b, int m) {
    if (b.k() < 2) throw std::domain_error("cross padding needs two blocks");
    HyperplaneFamily f(b.total());
    std::vector<Rational> diff(b.total(), 0), sum(b.total(), 0);
    diff[b.offset(0)] = 1, diff[b.offset(1)] = -1;
    sum[b.offset(0)] = 1, sum[b.offset(1)] = 1;
    for (int r = 0; r < m; ++r) {
        f.add(Hyperplane(diff, 0));
        f.add(Hyperplane(sum, -1));
    }
    return f;
}

Polynomial padding_polynomial(const BlockStructure& b) {
    Polynomial f(b.total());
    for (int j = 0; j < b.k(); ++j) {
        auto x = Polynomial::variable(b.total(), b.offset(j));
        f += x * (x - Polynomial::constant(b.total(), 1));
    }
    return f;
}

HyperplaneFamily construct_symmetric_cover(const SymmetricSet& s, int t) {
    if (s.empty()) throw std::domain_error("symmetric cover needs a nonempty set");
    if (t < 1) throw std::domain_error("t must be at least 1");
    auto f = vanishing_family(s.complement());
    f.append(family_Hcirc(s.n(), t - 1));
    return f;
}

HyperplaneFamily construct_grid_cover(const BlockSymmetricSet& grid, int t) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    const auto factors = grid.grid_factors();
    if (!factors) throw std::domain_error("set is not a grid");
    const auto& b = grid.structure();
    HyperplaneFamily f(b.total());
    for (int j = 0; j < b.k(); ++j) {
        if ((*factors)[j].empty()) throw std::domain_error("grid has an empty factor");
        f.append(embed_block(vanishing_family((*factors)[j].complement()), b, j));
    }
    // X_1 and X_1 - 1 restrict to the zero form on any other block, so with
    // several blocks the padding pairs the first coordinates of blocks 1 and 2.
    f.append(b.k() == 1 ? family_Hcirc(b.total(), t - 1) : cross_padding(b, t - 1));
    return f;
}

HyperplaneFamily construct_subcube_complement_cover(int n, int m, int t) {
    if (m < 0 || m >= n) throw std::domain_error("need 0 <= m < n");
    HyperplaneFamily f(n);
    for (int i = m; i < n; ++i) {
        std::vector<Rational> c(n, 0);
        c[i] = 1;
        f.add(Hyperplane(std::move(c), -1));
    }
    f.append(family_Hcirc(n, t - 1));
    return f;
}

namespace {

Polynomial block_product(const HyperplaneFamily& f, const BlockStructure& b, int j) {
    return product_of_affine(embed_block(f, b, j));
}

// Nonzero exactly on the box prod_j boxes[j] (one symmetric set per block).
Polynomial box_indicator(const std::vector<std::optional<SymmetricSet>>& boxes, const BlockStructure& b) {
    Polynomial g = Polynomial::constant(b.total(), 1);
    for (int j = 0; j < b.k(); ++j)
        if (boxes[j]) g = g * block_product(vanishing_family(boxes[j]->complement()), b, j);
    return g;
}

Polynomial padding_power(const BlockStructure& b, int t) {
    return padding_polynomial(b).pow(t - 1);
}

PolynomialConstruction combine(const std::vector<Polynomial>& terms, const Polynomial& pad, const CoverSpec& spec,
                               int formula, bool must_pass) {
    PolynomialConstruction out;
    out.formula_degree = formula;
    // Scalars 1, M, M^2, ...; bad choices of M are roots of finitely many
    // nonzero polynomials, so doubling M eventually clears them.
    for (long long m = 2; m <= (1LL << 20); m *= 2) {
        Polynomial sum(spec.nvars());
        Rational lam = 1;
        for (const auto& g : terms) {
            sum += g * lam;
            lam *= static_cast<long>(m);
        }
        out.poly = sum * pad;
        out.scalar_base = m;
        out.report = verify_cover(out.poly, spec);
        if (out.report.passed) return out;
    }
    if (must_pass) throw std::logic_error("scalar search exhausted without a verified cover");
    return out;
}

int lambda_bar_prefix(const BlockSymmetricSet& s, const OrderChoice& o, int j, int z) {
    return lambda_bar(prefix_set(s, o, j, z));
}

}  // namespace

int pdc_formula(const BlockSymmetricSet& s, const OrderChoice& order, int t, PdcVariant variant) {
    if (s.empty()) throw std::domain_error("PDC formula needs a nonempty set");
    const auto c = pdc_under(s, order);
    if (!c) throw std::domain_error("set is not PDC under the given order");
    const auto ext = poset_extremes(c->lattice.members, c->lattice.q);
    int best = 0;
    const auto& zs = variant == PdcVariant::innext ? ext.innext : ext.outext;
    for (const auto& z : zs) {
        int sum = 0;
        for (int j = 0; j < s.structure().k(); ++j) {
            if (variant == PdcVariant::innext) sum += lambda_bar_prefix(s, order, j, z[j]);
            else if (z[j] >= 1) sum += lambda_bar_prefix(s, order, j, z[j] - 1);
        }
        best = std::max(best, sum);
    }
    return best + 2 * t - 2;
}

PolynomialConstruction construct_pdc_polynomial_cover(const BlockSymmetricSet& s, const OrderChoice& order, int t,
                                                      PdcVariant variant) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    const int formula = pdc_formula(s, order, t, variant);
    const auto c = pdc_under(s, order);
    const auto ext = poset_extremes(c->lattice.members, c->lattice.q);
    const auto& b = s.structure();
    std::vector<Polynomial> terms;
    for (const auto& z : variant == PdcVariant::innext ? ext.innext : ext.outext) {
        std::vector<std::optional<SymmetricSet>> boxes(b.k());
        for (int j = 0; j < b.k(); ++j) {
            if (variant == PdcVariant::innext) boxes[j] = prefix_set(s, order, j, z[j]);
            else if (z[j] >= 1) boxes[j] = prefix_set(s, order, j, z[j] - 1);
        }
        terms.push_back(box_indicator(boxes, b));
    }
    const CoverSpec spec(s.complement(), t, t - 1, b);
    return combine(terms, padding_power(b, t), spec, formula, variant == PdcVariant::innext);
}

PolynomialConstruction construct_grid_self_cover(const BlockSymmetricSet& grid, int t) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    const auto factors = grid.grid_factors();
    if (!factors) throw std::domain_error("set is not a grid");
    if (grid.empty()) throw std::domain_error("grid must be nonempty");
    const auto& b = grid.structure();
    std::vector<Polynomial> terms;
    int formula = 0;
    for (int j = 0; j < b.k(); ++j) {
        const auto& sj = (*factors)[j];
        if (sj.full()) continue;  // a full factor constrains nothing
        terms.push_back(block_product(vanishing_family(sj), b, j));
        formula = std::max(formula, lambda_measure(sj));
    }
    const CoverSpec spec(grid, t, t - 1, b);
    return combine(terms, padding_power(b, t), spec, formula + 2 * t - 2, true);
}

Polynomial construct_hamming_ball_cover(int n, int w, int t, const Polynomial& base) {
    if (w < 1 || w > n - 1) throw std::domain_error("ball radius must lie in [1, n-1]");
    if (t < 2 || t > (n + 3) / 2) throw std::domain_error("t must lie in [2, floor((n+3)/2)]");
    if (base.nvars() != w) throw std::domain_error("base polynomial must have w variables");
    std::vector<Point> pts;
    for (Point p = 0; p + 1 < (Point{1} << w); ++p) pts.push_back(p);
    const CoverSpec base_spec(PointSet(w, pts), t, 0);
    if (base.degree() != w + 2 * t - 3 || !verify_cover(base, base_spec).passed)
        throw std::domain_error("base is not a (t,0)-exact cover of the punctured cube of degree w+2t-3");
    Polynomial out(n);
    std::vector<int> idx(w);
    for (int i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        out += base.embed(n, idx);
        int i = w - 1;
        while (i >= 0 && idx[i] == n - w + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < w; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

Polynomial construct_layer_power_cover(int n, int w, int t) {
    if (w < 0 || w > n) throw std::domain_error("layer weight outside [0,n]");
    if (t < 1) throw std::domain_error("t must be at least 1");
    return Hyperplane(std::vector<Rational>(n, 1), -w).to_polynomial().pow(t);
}

HyperplaneFamily lift_subcube_cover(const HyperplaneFamily& f, int m) {
    if (m < 0) throw std::domain_error("negative lift");
    HyperplaneFamily out(f.nvars + m);
    for (const auto& h : f.items) {
        std::vector<Rational> c(m, 0);
        c.insert(c.end(), h.coeffs.begin(), h.coeffs.end());
        out.add(Hyperplane(std::move(c), h.constant));
    }
    return out;
}

Restriction restrict_subcube_cover(const HyperplaneFamily& f, int m) {
    if (m < 0 || m >= f.nvars) throw std::domain_error("need 0 <= m < n");
    Restriction r{HyperplaneFamily(f.nvars - m), {}};
    for (int h = 0; h < f.size(); ++h) {
        std::vector<Rational> c(f.items[h].coeffs.begin() + m, f.items[h].coeffs.end());
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) {
            r.collapsed.push_back(h);
            continue;
        }
        r.family.add(Hyperplane(std::move(c), f.items[h].constant));
    }
    return r;
}

}  // namespace hypercover
