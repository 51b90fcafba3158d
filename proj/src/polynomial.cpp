#include "hypercover/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypercover {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_arity(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::domain_error("variable count mismatch");
}

// Rewrite X_i as X_i + c in every term.
Polynomial shift_variable(const Polynomial& p, int i, const Rational& c) {
    if (c == 0) return p;
    Polynomial out(p.nvars());
    for (const auto& [e, coef] : p.terms()) {
        const int k = e[i];
        Exponent f = e;
        mpz_class binom = 1;
        Rational cpow = 1;
        // term j: C(k,j) c^(k-j) X_i^j, walked from j=k down to 0
        for (int j = k; j >= 0; --j) {
            f[i] = j;
            out.add_term(f, coef * Rational(binom) * cpow);
            binom = binom * j / (k - j + 1);
            cpow *= c;
        }
    }
    return out;
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::domain_error("variable index out of range");
    Polynomial p(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::affine(std::span<const Rational> coeffs, const Rational& c0) {
    const int n = static_cast<int>(coeffs.size());
    Polynomial p = constant(n, c0);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, _] : terms_) d = std::max(d, total(e));
    return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::domain_error("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_arity(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_arity(*this, o);
    Polynomial r(nvars_);
    Exponent e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::domain_error("negative power");
    Polynomial r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::domain_error("point length mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_ && term != 0; ++i)
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        sum += term;
    }
    return sum;
}

Rational Polynomial::evaluate(Point p) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        bool alive = true;
        for (int i = 0; i < nvars_ && alive; ++i)
            if (e[i] > 0 && !((p >> i) & 1u)) alive = false;
        if (alive) sum += c;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Rational>>& values) const {
    if (static_cast<int>(values.size()) != nvars_) throw std::domain_error("substitution length mismatch");
    std::vector<int> keep;
    for (int i = 0; i < nvars_; ++i)
        if (!values[i]) keep.push_back(i);
    Polynomial r(static_cast<int>(keep.size()));
    Exponent f(keep.size());
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_ && term != 0; ++i)
            if (values[i])
                for (int k = 0; k < e[i]; ++k) term *= *values[i];
        if (term == 0) continue;
        for (std::size_t j = 0; j < keep.size(); ++j) f[j] = e[keep[j]];
        r.add_term(f, term);
    }
    return r;
}

Polynomial Polynomial::embed(int total_vars, std::span<const int> target) const {
    if (static_cast<int>(target.size()) != nvars_) throw std::domain_error("embedding length mismatch");
    Polynomial r(total_vars);
    Exponent f(total_vars);
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (int i = 0; i < nvars_; ++i) f.at(target[i]) += e[i];
        r.add_term(f, c);
    }
    return r;
}

Polynomial derivative(const Polynomial& p, std::span<const int> alpha) {
    if (static_cast<int>(alpha.size()) != p.nvars()) throw std::domain_error("multi-index length mismatch");
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        mpz_class factor = 1;
        bool alive = true;
        for (int i = 0; i < p.nvars() && alive; ++i) {
            if (alpha[i] < 0) throw std::domain_error("negative multi-index");
            if (alpha[i] > e[i]) alive = false;
            for (int k = 0; k < alpha[i] && alive; ++k) factor *= e[i] - k;
            f[i] = e[i] - alpha[i];
        }
        if (alive) r.add_term(f, c * Rational(factor));
    }
    return r;
}

int multiplicity_at(const Polynomial& p, std::span<const Rational> a, int cap) {
    if (p.is_zero()) throw std::domain_error("multiplicity of the zero polynomial is undefined");
    const int n = p.nvars();
    // Level o holds (last variable differentiated, ∂^α p) for every |α| = o,
    // each α generated once by differentiating in nondecreasing variable order.
    std::vector<std::pair<int, Polynomial>> level{{0, p}};
    for (int o = 0; o < cap; ++o) {
        for (const auto& [_, q] : level)
            if (q.evaluate(a) != 0) return o;
        std::vector<std::pair<int, Polynomial>> next;
        for (const auto& [last, q] : level) {
            for (int i = last; i < n; ++i) {
                std::vector<int> step(n, 0);
                step[i] = 1;
                Polynomial d = derivative(q, step);
                if (!d.is_zero()) next.emplace_back(i, std::move(d));
            }
        }
        level = std::move(next);
        if (level.empty()) return cap;  // unreachable for nonzero p below its degree
    }
    return cap;
}

Polynomial taylor_shift(const Polynomial& p, std::span<const Rational> a) {
    if (static_cast<int>(a.size()) != p.nvars()) throw std::domain_error("point length mismatch");
    Polynomial r = p;
    for (int i = 0; i < p.nvars(); ++i) r = shift_variable(r, i, a[i]);
    return r;
}

int lowest_order_at(const Polynomial& p, std::span<const Rational> a) {
    if (p.is_zero()) throw std::domain_error("multiplicity of the zero polynomial is undefined");
    const Polynomial s = taylor_shift(p, a);
    int best = s.degree();
    for (const auto& [e, _] : s.terms()) best = std::min(best, total(e));
    return best;
}

namespace {

// Adds c * prod_i C(e_i, b_i) into acc for every b <= e that agrees with e off
// the support of a and has |b| = order. Those are the order-|b| coefficients
// of p(X + a) contributed by the term c X^e when a is a 0/1 point.
void shifted_terms(const Exponent& e, const Rational& c, Point a, int order, std::map<Exponent, Rational>& acc) {
    const int n = static_cast<int>(e.size());
    int fixed = 0;
    for (int i = 0; i < n; ++i)
        if (!((a >> i) & 1u)) fixed += e[i];
    if (fixed > order) return;
    Exponent b = e;
    auto rec = [&](auto&& self, int i, int left, const mpz_class& coef) -> void {
        if (i == n) {
            if (left == 0) acc[b] += c * Rational(coef);
            return;
        }
        if (!((a >> i) & 1u)) {
            self(self, i + 1, left, coef);
            return;
        }
        mpz_class binom = 1;
        for (int v = 0; v <= std::min(e[i], left); ++v) {
            b[i] = v;
            self(self, i + 1, left - v, coef * binom);
            binom = binom * (e[i] - v) / (v + 1);
        }
        b[i] = e[i];
    };
    rec(rec, 0, order - fixed, mpz_class(1));
}

}  // namespace

int lowest_order_at(const Polynomial& p, Point a) {
    if (p.is_zero()) throw std::domain_error("multiplicity of the zero polynomial is undefined");
    const int d = p.degree();
    for (int o = 0; o <= d; ++o) {
        std::map<Exponent, Rational> acc;
        for (const auto& [e, c] : p.terms()) shifted_terms(e, c, a, o, acc);
        for (const auto& [_, v] : acc)
            if (v != 0) return o;
    }
    throw std::logic_error("unreachable: a nonzero polynomial has a nonzero shifted coefficient");
}

std::vector<Rational> point_coords(Point p, int n) {
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = (p >> i) & 1u;
    return x;
}

}  // namespace hypercover
