#ifndef CONSLAW_SCENARIO_HPP
#define CONSLAW_SCENARIO_HPP

#include "conslaw/laws.hpp"
#include "conslaw/lift.hpp"
#include "conslaw/model.hpp"

#include <cstdint>
#include <optional>

namespace conslaw {

// Full problem description: architecture, geometry, flow, ansatz bounds.
struct ScenarioConfig {
    Architecture arch;
    MetricSpec metric;
    FlowSpec flow = FlowSpec::gradient();
    std::optional<unsigned> degree;
    std::optional<unsigned> time_cap;
    std::uint64_t seed = 1;
};

// The symbolic side of a scenario: the fields whose orthogonal complement
// (resp. generated Lie algebra) defines the conservation laws.
struct Scenario {
    SpacePtr space;
    std::vector<VectorField> fields;
    bool momentum = false;
    bool surrogate = false; // time-like coordinate is s = exp(tau*t)
    std::size_t D = 0;
    unsigned degree = 0;
    unsigned time_cap = 0;
};

// Default ansatz degrees: 2 for gradient flows, 3 with time cap 1 for the
// heavy-ball surrogate, 5 with time cap 3 for the cleared Nesterov system.
Scenario build_scenario(const ScenarioConfig& cfg);

// Closed-form families applicable to a configuration (empty when none are
// known, e.g. any mirror/ICNN/ReLU momentum flow).
std::vector<LawFamily> closed_form_laws(const ScenarioConfig& cfg);

// Predicted law count where a counting formula exists.
std::optional<long> formula_count(const ScenarioConfig& cfg);

} // namespace conslaw

#endif
