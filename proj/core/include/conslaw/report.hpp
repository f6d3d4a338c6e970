#ifndef CONSLAW_REPORT_HPP
#define CONSLAW_REPORT_HPP

#include "conslaw/laws.hpp"
#include "conslaw/lie.hpp"
#include "conslaw/scenario.hpp"
#include "conslaw/solver.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace conslaw {

using Json = nlohmann::ordered_json;

const char* library_version();

// { "vars": [names], "terms": [ { "coeff": "p/q", "exps": [...] } ] },
// terms in the polynomial's canonical ordering. Round-trips bit-exactly.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const SpacePtr& space, const Json& j);

Json rationals_to_json(const QVector& v);

// Config (de)serialization. Parsers reject unknown keys.
Json architecture_to_json(const Architecture& arch);
Architecture architecture_from_json(const Json& j);
Json metric_to_json(const MetricSpec& metric);
MetricSpec metric_from_json(const Json& j);
Json flow_to_json(const FlowSpec& flow);
FlowSpec flow_from_json(const Json& j);
Json scenario_config_to_json(const ScenarioConfig& cfg);
ScenarioConfig scenario_config_from_json(const Json& j);

Json solver_report(const ScenarioConfig& cfg, const LawBasis& basis);
Json lie_report(const ScenarioConfig& cfg, const LieBasis& basis,
                std::size_t dim, std::size_t ambient, std::size_t law_count,
                const QVector& witness);
Json law_family_to_json(const LawFamily& family);

// Single report asserting solver = Lie (= formula when available); a
// "mismatch" block distinguishes a too-small ansatz degree from a hard bug.
struct CompareOutcome {
    Json report;
    bool ok = false;
};
CompareOutcome compare_report(const ScenarioConfig& cfg, const LawBasis& basis,
                              std::size_t lie_count,
                              std::optional<long> formula_count);

} // namespace conslaw

#endif
