#pragma once

#include "hypercover/affine.hpp"
#include "hypercover/blockcore.hpp"
#include "hypercover/polynomial.hpp"
#include "hypercover/symcore.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hypercover {

enum class CoverMode { exact, block_exact };
enum class Execution { serial, parallel };

using Target = std::variant<SymmetricSet, PointSet, BlockSymmetricSet>;

class CoverSpec {
public:
    // Exact mode; the block structure is the single block of size n.
    CoverSpec(Target target, int t, int ell);
    CoverSpec(Target target, int t, int ell, BlockStructure blocks);

    const Target& target() const { return target_; }
    int t() const { return t_; }
    int ell() const { return ell_; }
    CoverMode mode() const { return mode_; }
    const BlockStructure& blocks() const { return blocks_; }
    int nvars() const { return blocks_.total(); }
    bool in_target(Point p) const;

private:
    Target target_;
    int t_, ell_;
    CoverMode mode_;
    BlockStructure blocks_;
};

int target_dimension(const Target& t);

struct Violation {
    Point point = 0;
    int block = -1;     // -1 for whole-cube conditions
    std::string kind;   // below-t, not-ell, block-not-ell, collapse, zero-polynomial
    int observed = 0;   // incidence count or multiplicity; -1 when infinite
    int member = -1;    // offending family member for collapse
    auto operator<=>(const Violation&) const = default;
};

struct VerificationReport {
    bool passed = true;
    long long points_checked = 0;
    std::vector<Violation> violations;
};

VerificationReport verify_cover(const HyperplaneFamily& f, const CoverSpec& spec, Execution ex = Execution::parallel);
VerificationReport verify_cover(const Polynomial& p, const CoverSpec& spec, Execution ex = Execution::parallel);

// Fundamental families on n variables.
HyperplaneFamily family_Hprime(int n, const std::vector<int>& weights);
HyperplaneFamily family_Hstar(int n, int i);
HyperplaneFamily family_Hcirc(int n, int m);  // m copies each of X_1 and X_1 - 1

// Family whose cube zero set is exactly A, of size Λ(A); A must not be the full cube.
HyperplaneFamily vanishing_family(const SymmetricSet& a);
// Places a family on block j of a block structure.
HyperplaneFamily embed_block(const HyperplaneFamily& f, const BlockStructure& b, int j);
// m copies of X_{1,1} - X_{2,1} and X_{1,1} + X_{2,1} - 1; needs k >= 2.
HyperplaneFamily cross_padding(const BlockStructure& b, int m);
// Sum over blocks of X_{j,1}(X_{j,1} - 1).
Polynomial padding_polynomial(const BlockStructure& b);

HyperplaneFamily construct_symmetric_cover(const SymmetricSet& s, int t);
HyperplaneFamily construct_grid_cover(const BlockSymmetricSet& grid, int t);
// {X_{m+1} - 1, ..., X_n - 1} with H°(t-1): covers everything but {0,1}^m x {0^{n-m}}.
HyperplaneFamily construct_subcube_complement_cover(int n, int m, int t);

enum class PdcVariant { innext, literal_outext };

struct PolynomialConstruction {
    Polynomial poly;
    int formula_degree = 0;
    long long scalar_base = 0;   // M in the scalars 1, M, M^2, ...
    VerificationReport report;
};

PolynomialConstruction construct_pdc_polynomial_cover(const BlockSymmetricSet& s, const OrderChoice& order, int t,
                                                      PdcVariant variant = PdcVariant::innext);
int pdc_formula(const BlockSymmetricSet& s, const OrderChoice& order, int t, PdcVariant variant);
PolynomialConstruction construct_grid_self_cover(const BlockSymmetricSet& grid, int t);
Polynomial construct_hamming_ball_cover(int n, int w, int t, const Polynomial& base);
Polynomial construct_layer_power_cover(int n, int w, int t);

HyperplaneFamily lift_subcube_cover(const HyperplaneFamily& f, int m);
struct Restriction {
    HyperplaneFamily family;
    std::vector<int> collapsed;  // members that became constants
};
Restriction restrict_subcube_cover(const HyperplaneFamily& f, int m);

}  // namespace hypercover
