#pragma once

#include "hypercover/rational.hpp"
#include "hypercover/symcore.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hypercover {

using Exponent = std::vector<int>;

// Sparse polynomial over Q. Terms are kept in a std::map so iteration order,
// and therefore every serialization, is deterministic.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);  // X_{i+1}
    // c_1 X_1 + ... + c_n X_n + c0
    static Polynomial affine(std::span<const Rational> coeffs, const Rational& c0);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    void add_term(const Exponent& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial pow(int k) const;
    bool operator==(const Polynomial& o) const = default;

    Rational evaluate(std::span<const Rational> x) const;
    Rational evaluate(Point p) const;

    // Fixes the variables whose entry is set; the rest keep their relative order.
    Polynomial substitute(const std::vector<std::optional<Rational>>& values) const;
    // Re-index into a ring of total_vars variables: X_{i+1} -> X_{target[i]+1}.
    Polynomial embed(int total_vars, std::span<const int> target) const;

private:
    int nvars_ = 0;
    std::map<Exponent, Rational> terms_;
};

Polynomial derivative(const Polynomial& p, std::span<const int> alpha);

// Largest t <= cap with every order-<t derivative vanishing at a.
int multiplicity_at(const Polynomial& p, std::span<const Rational> a, int cap);

// Coefficients of p written in powers of (X - a).
Polynomial taylor_shift(const Polynomial& p, std::span<const Rational> a);

// Lowest total degree among the terms of taylor_shift(p, a); p must be nonzero.
int lowest_order_at(const Polynomial& p, std::span<const Rational> a);
int lowest_order_at(const Polynomial& p, Point a);

std::vector<Rational> point_coords(Point p, int n);

}  // namespace hypercover
