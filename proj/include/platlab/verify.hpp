#pragma once

#include "platlab/config.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace platlab {

enum ExitCode { kExitPass = 0, kExitCheckFailure = 1, kExitInputError = 2, kExitBudget = 3 };

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool budget_exceeded = false;
    bool pass() const;
    int exit_code() const;
    nlohmann::json to_json() const;
};

// Track labels at |t| = 2, as printed for the worked example.
extern const std::vector<int> kReferenceBrown;
extern const std::vector<int> kReferenceOrange;
extern const std::vector<int> kReferencePurple;

VerifyReport run_verify(const RunConfig& cfg);

}  // namespace platlab
