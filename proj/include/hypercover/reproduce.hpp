#pragma once

#include "hypercover/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypercover {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

enum class Status { confirmed, discrepancy, oracle_skipped };

struct Certificate {
    std::string suite;
    std::string claim;
    json instance;                 // parameters, set and spec; enough to recompute the formula
    int formula_value = 0;
    std::optional<int> oracle_value;
    std::string oracle_kind;       // empty when the claim has no oracle
    std::optional<Witness> witness;
    std::optional<int> witness_value;
    std::vector<Check> checks;
    Status status = Status::confirmed;
};

struct ReproduceBounds {
    std::optional<int> max_n;  // caps the dimension sweep of every suite
    std::optional<int> max_t;
    OracleLimits oracle;
};

const std::vector<std::string>& suite_names();
// The literal reading of the PDC theorem is expected to disagree with the oracle.
bool quarantined(const std::string& suite);

// Throws std::invalid_argument for an unknown suite.
std::vector<Certificate> reproduce(const std::string& suite, const ReproduceBounds& bounds = {});

std::string status_name(Status s);
json encode(const Certificate& c);
Certificate decode_certificate(const json& j);

// Recomputes the formula, re-verifies the embedded witness and checks that the
// recorded status follows from the recorded values.
struct Recheck {
    bool passed = true;
    std::vector<Check> checks;
};
Recheck recheck_certificate(const json& j);

// format is "json" or "table"; tables are sorted by (suite, n, t).
std::string render_report(const std::vector<Certificate>& certs, const std::string& format);

}  // namespace hypercover
