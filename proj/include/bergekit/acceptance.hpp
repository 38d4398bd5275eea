#pragma once

#include <bergekit/solver.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bergekit {

struct CriterionResult {
    int id = 0;
    std::string key;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceConfig {
    std::uint64_t seed = 20240917;
    SolveOptions solve;
};

/// Keys of the acceptance items in order: "ik", "g1", "h8", "h2", "oracle",
/// "family", "shifting", "containment", "rowsum", "classifier", "conditional",
/// "monotonicity".
const std::vector<std::string>& criterion_keys();

CriterionResult run_criterion(const std::string& key, const AcceptanceConfig& config);
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

/// One exact value against its closed form: key "ik" (needs k), "g1", "h8" or "h2".
CriterionResult check_formula(const std::string& key, std::optional<int> k, int m, const AcceptanceConfig& config);

/// "[PASS] 2 g1: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace bergekit
