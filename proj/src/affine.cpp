#include "hypercover/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypercover {

Hyperplane::Hyperplane(std::vector<Rational> c, Rational c0) : coeffs(std::move(c)), constant(std::move(c0)) {
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; }))
        throw std::domain_error("hyperplane needs a nonzero linear coefficient");
}

Rational Hyperplane::evaluate(Point p) const {
    Rational s = constant;
    for (int i = 0; i < nvars(); ++i)
        if ((p >> i) & 1u) s += coeffs[i];
    return s;
}

void HyperplaneFamily::add(Hyperplane h) {
    if (h.nvars() != nvars) throw std::domain_error("hyperplane dimension mismatch");
    items.push_back(std::move(h));
}

void HyperplaneFamily::append(const HyperplaneFamily& other) {
    for (const auto& h : other.items) add(h);
}

Polynomial product_of_affine(const HyperplaneFamily& family) {
    Polynomial p = Polynomial::constant(family.nvars, 1);
    for (const auto& h : family.items) p = p * h.to_polynomial();
    return p;
}

}  // namespace hypercover
