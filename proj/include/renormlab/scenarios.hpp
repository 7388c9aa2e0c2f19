#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "renormlab/rational.hpp"

namespace renormlab {

struct ScenarioConfig {
    std::string name;
    std::uint64_t seed = 42;
    long trials = 0;  // 0 = scenario default
    Rational precision = pow2(-64);
    int dim = 12;
    int window = 32;
    int depth = 10;
};

struct ScenarioInfo {
    std::string name;
    std::string result;  // the mathematical statement the scenario exercises
};

struct ScenarioResult {
    nlohmann::ordered_json report;
    bool expectations_met = true;
    bool inconclusive = false;
};

const std::vector<ScenarioInfo>& scenario_catalog();
bool scenario_exists(const std::string& name);

// deterministic for a fixed config
ScenarioResult run_scenario(const ScenarioConfig& cfg);

struct SuiteResult {
    nlohmann::ordered_json report;
    bool expectations_met = true;
    bool inconclusive = false;
};

SuiteResult run_all_scenarios(ScenarioConfig base);

}  // namespace renormlab
