#pragma once

#include "hypercover/polynomial.hpp"

#include <vector>

namespace hypercover {

// c_1 X_1 + ... + c_n X_n + c_0
struct Hyperplane {
    std::vector<Rational> coeffs;
    Rational constant;

    Hyperplane() = default;
    // Throws std::domain_error when every c_i is zero.
    Hyperplane(std::vector<Rational> c, Rational c0);

    int nvars() const { return static_cast<int>(coeffs.size()); }
    Rational evaluate(Point p) const;
    Polynomial to_polynomial() const { return Polynomial::affine(coeffs, constant); }
    bool operator==(const Hyperplane&) const = default;
};

struct HyperplaneFamily {
    int nvars = 0;
    std::vector<Hyperplane> items;

    HyperplaneFamily() = default;
    explicit HyperplaneFamily(int n) : nvars(n) {}

    int size() const { return static_cast<int>(items.size()); }
    void add(Hyperplane h);
    void append(const HyperplaneFamily& other);
    bool operator==(const HyperplaneFamily&) const = default;
};

// Empty family gives the constant 1.
Polynomial product_of_affine(const HyperplaneFamily& family);

}  // namespace hypercover
