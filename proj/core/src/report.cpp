#include "conslaw/report.hpp"

#include <set>
#include <stdexcept>

namespace conslaw {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                         const char* what) {
    if (!j.is_object())
        throw std::invalid_argument(std::string(what) + ": expected an object");
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw std::invalid_argument(std::string(what) + ": unknown key \"" +
                                        item.key() + "\"");
}

Rational rational_field(const Json& j, const char* key) {
    if (!j.contains(key)) return Rational(0);
    const Json& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    return rational_from_string(v.get<std::string>());
}

} // namespace

const char* library_version() { return "conslaw 0.1.0"; }

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["vars"] = p.space()->names();
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        Json term;
        term["coeff"] = rational_to_string(coeff);
        term["exps"] = exps;
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const SpacePtr& space, const Json& j) {
    reject_unknown_keys(j, {"vars", "terms"}, "polynomial");
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    if (vars != space->names())
        throw std::invalid_argument("polynomial: variable names do not match space");
    Polynomial p = Polynomial::zero(space);
    for (const Json& term : j.at("terms")) {
        reject_unknown_keys(term, {"coeff", "exps"}, "polynomial term");
        auto exps = term.at("exps").get<Exponents>();
        if (exps.size() != space->size())
            throw std::invalid_argument("polynomial: exponent vector length");
        p.add_term(exps, rational_from_string(term.at("coeff").get<std::string>()));
    }
    return p;
}

Json rationals_to_json(const QVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_to_string(q));
    return out;
}

Json architecture_to_json(const Architecture& arch) {
    Json j;
    j["kind"] = arch.kind == Architecture::Kind::Linear ? "linear" : "relu2";
    j["dims"] = arch.dims;
    j["bias"] = arch.bias;
    return j;
}

Architecture architecture_from_json(const Json& j) {
    reject_unknown_keys(j, {"kind", "dims", "bias"}, "architecture");
    const auto kind = j.at("kind").get<std::string>();
    auto dims = j.at("dims").get<std::vector<int>>();
    const bool bias = j.value("bias", false);
    if (kind == "linear") {
        if (bias) throw std::invalid_argument("architecture: linear has no bias");
        return Architecture::linear(std::move(dims));
    }
    if (kind == "relu2") {
        if (dims.size() != 3)
            throw std::invalid_argument("architecture: relu2 needs dims [n, m, r]");
        return Architecture::relu2(dims[0], dims[1], dims[2], bias);
    }
    throw std::invalid_argument("architecture: unknown kind \"" + kind + "\"");
}

Json metric_to_json(const MetricSpec& metric) {
    Json j;
    switch (metric.kind) {
    case MetricSpec::Kind::Euclidean: j["metric"] = "euclidean"; break;
    case MetricSpec::Kind::MirrorDiag: j["metric"] = "mirror"; break;
    case MetricSpec::Kind::IcnnHybrid: j["metric"] = "icnn"; break;
    }
    j["mode"] = metric.mode == MetricSpec::Mode::GradientFlow ? "gf" : "mf";
    j["tau"] = rational_to_string(metric.tau);
    return j;
}

MetricSpec metric_from_json(const Json& j) {
    reject_unknown_keys(j, {"metric", "mode", "tau"}, "metric");
    MetricSpec m;
    const auto kind = j.at("metric").get<std::string>();
    if (kind == "euclidean") m.kind = MetricSpec::Kind::Euclidean;
    else if (kind == "mirror") m.kind = MetricSpec::Kind::MirrorDiag;
    else if (kind == "icnn") m.kind = MetricSpec::Kind::IcnnHybrid;
    else throw std::invalid_argument("metric: unknown kind \"" + kind + "\"");
    const auto mode = j.value("mode", std::string("gf"));
    if (mode == "gf") m.mode = MetricSpec::Mode::GradientFlow;
    else if (mode == "mf") m.mode = MetricSpec::Mode::MomentumFlow;
    else throw std::invalid_argument("metric: unknown mode \"" + mode + "\"");
    m.tau = rational_field(j, "tau");
    return m;
}

Json flow_to_json(const FlowSpec& flow) {
    Json j;
    switch (flow.kind) {
    case FlowSpec::Kind::Gradient: j["flow"] = "gf"; break;
    case FlowSpec::Kind::HeavyBall: j["flow"] = "heavy_ball"; break;
    case FlowSpec::Kind::Nesterov: j["flow"] = "nesterov"; break;
    }
    j["tau"] = rational_to_string(flow.tau);
    return j;
}

FlowSpec flow_from_json(const Json& j) {
    reject_unknown_keys(j, {"flow", "tau"}, "flow");
    const auto kind = j.at("flow").get<std::string>();
    if (kind == "gf") return FlowSpec::gradient();
    if (kind == "heavy_ball") return FlowSpec::heavy_ball(rational_field(j, "tau"));
    if (kind == "nesterov") return FlowSpec::nesterov();
    throw std::invalid_argument("flow: unknown kind \"" + kind + "\"");
}

Json scenario_config_to_json(const ScenarioConfig& cfg) {
    Json j;
    j["architecture"] = architecture_to_json(cfg.arch);
    j["metric"] = metric_to_json(cfg.metric);
    j["flow"] = flow_to_json(cfg.flow);
    if (cfg.degree) j["degree"] = *cfg.degree;
    if (cfg.time_cap) j["time_cap"] = *cfg.time_cap;
    j["seed"] = cfg.seed;
    return j;
}

ScenarioConfig scenario_config_from_json(const Json& j) {
    reject_unknown_keys(
        j, {"architecture", "metric", "flow", "degree", "time_cap", "seed"},
        "config");
    ScenarioConfig cfg;
    cfg.arch = architecture_from_json(j.at("architecture"));
    if (j.contains("metric")) cfg.metric = metric_from_json(j.at("metric"));
    if (j.contains("flow")) cfg.flow = flow_from_json(j.at("flow"));
    if (j.contains("degree")) cfg.degree = j.at("degree").get<unsigned>();
    if (j.contains("time_cap")) cfg.time_cap = j.at("time_cap").get<unsigned>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

Json solver_report(const ScenarioConfig& cfg, const LawBasis& basis) {
    Json j;
    j["version"] = library_version();
    j["config"] = scenario_config_to_json(cfg);
    j["degree"] = basis.degree;
    j["time_degree_cap"] = basis.time_degree_cap;
    Json laws = Json::array();
    for (const auto& law : basis.laws) laws.push_back(polynomial_to_json(law));
    j["laws"] = std::move(laws);
    j["independent"] = basis.independent;
    j["witness"] = rationals_to_json(basis.witness);
    j["witness_certificate"] = basis.witness_certificate;
    j["seed"] = basis.seed;
    return j;
}

Json lie_report(const ScenarioConfig& cfg, const LieBasis& basis,
                std::size_t dim, std::size_t ambient, std::size_t law_count,
                const QVector& witness) {
    Json j;
    j["version"] = library_version();
    j["config"] = scenario_config_to_json(cfg);
    j["dim"] = dim;
    j["ambient"] = ambient;
    j["law_count"] = law_count;
    j["iterations"] = basis.iterations;
    j["stabilized"] = basis.stabilized;
    j["degree_warning"] = basis.degree_warning;
    j["witness"] = rationals_to_json(witness);
    j["seed"] = cfg.seed;
    return j;
}

Json law_family_to_json(const LawFamily& family) {
    Json j;
    j["family"] = family.family;
    j["i"] = family.layer;
    j["A"] = Json::array({family.skew_row, family.skew_col});
    j["polynomial"] = polynomial_to_json(family.realization);
    return j;
}

CompareOutcome compare_report(const ScenarioConfig& cfg, const LawBasis& basis,
                              std::size_t lie_count,
                              std::optional<long> formula_count) {
    CompareOutcome out;
    Json& j = out.report;
    j["version"] = library_version();
    j["config"] = scenario_config_to_json(cfg);
    j["solver"] = basis.independent;
    j["lie"] = lie_count;
    if (formula_count) j["formula"] = *formula_count;
    j["witness"] = rationals_to_json(basis.witness);
    j["seed"] = basis.seed;

    out.ok = basis.independent == lie_count &&
             (!formula_count || static_cast<long>(lie_count) == *formula_count);
    if (!out.ok) {
        Json mismatch;
        if (basis.independent < lie_count) {
            mismatch["code"] = "degree_bound";
            mismatch["hint"] = "raise degree";
        } else if (basis.independent > lie_count) {
            mismatch["code"] = "solver_exceeds_lie";
            mismatch["hint"] = "internal inconsistency: more independent laws "
                               "than the trace dimension allows";
        } else {
            mismatch["code"] = "formula_mismatch";
            mismatch["hint"] = "computed count disagrees with the closed-form "
                               "prediction";
        }
        j["mismatch"] = std::move(mismatch);
    }
    return out;
}

} // namespace conslaw
