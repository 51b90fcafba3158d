#pragma once

#include "hypercover/covers.hpp"
#include "hypercover/linalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hypercover {

struct OracleLimits {
    int max_n = 5;
    int max_t = 3;
    int max_degree = 16;
    int max_size = 14;
};

// Raised when an instance lies outside the configured bounds.
class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TranscriptEntry {
    int bound = 0;                // degree for polynomial oracles, size for ehc
    std::string status;           // kernel-empty, exactness-blocked, feasible, infeasible, infeasible-by-bound
    int unknowns = 0;
    int rank = 0;
    int kernel_dim = 0;
    std::optional<Point> blocked_at;
    int blocked_block = -1;
    long long nodes = 0;
};

using Witness = std::variant<HyperplaneFamily, Polynomial>;

struct OracleResult {
    std::string kind;  // epc, bepc, ehc
    int value = 0;
    Witness witness;
    std::vector<TranscriptEntry> transcript;
    VerificationReport check;
};

OracleResult epc_oracle(const CoverSpec& spec, const OracleLimits& lim = {});
OracleResult bepc_oracle(const CoverSpec& spec, const OracleLimits& lim = {});

struct CubeFlat {
    int n = 0;
    std::uint64_t points = 0;  // bit p set when cube point p lies in the flat
    int dimension = -1;        // affine dimension of the hull; -1 for the empty flat
    bool operator==(const CubeFlat&) const = default;
};

// Affine hull of the marked points, intersected with the cube.
std::uint64_t cube_closure(int n, std::uint64_t points);
std::vector<CubeFlat> enumerate_cube_flats(int n);
Hyperplane realizable_witness(const CubeFlat& z);

OracleResult ehc_oracle(const CoverSpec& spec, const OracleLimits& lim = {}, Execution ex = Execution::parallel);

int epc_index_lower_bound(const PointSet& s, int t);

// Picks c with every group's matrix times c nonzero; groups are lists of rows
// over the same coordinates and none may be identically zero.
RationalVector generic_combination(const std::vector<std::vector<RationalVector>>& groups, int dim);

}  // namespace hypercover
