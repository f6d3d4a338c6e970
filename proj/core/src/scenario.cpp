#include "conslaw/scenario.hpp"

#include "conslaw/laws.hpp"

#include <stdexcept>

namespace conslaw {

Scenario build_scenario(const ScenarioConfig& cfg) {
    const bool momentum = cfg.flow.kind != FlowSpec::Kind::Gradient;

    MetricSpec metric = cfg.metric;
    metric.mode = momentum ? MetricSpec::Mode::MomentumFlow
                           : MetricSpec::Mode::GradientFlow;
    if (momentum && metric.kind != MetricSpec::Kind::Euclidean) {
        if (cfg.flow.kind == FlowSpec::Kind::Nesterov)
            throw std::invalid_argument(
                "mirror-type metrics need a constant tau; Nesterov unsupported");
        metric.tau = cfg.flow.tau;
    }

    auto tv = VariableSpace::TimeVar::None;
    if (momentum)
        tv = (cfg.flow.kind == FlowSpec::Kind::HeavyBall && cfg.flow.tau != 0)
                 ? VariableSpace::TimeVar::Surrogate
                 : VariableSpace::TimeVar::Time;

    SpacePtr space = cfg.arch.make_space(momentum, tv);
    auto fields = apply_metric(metric, grad_phi(build_phi(cfg.arch, space), space),
                               space);

    Scenario sc;
    sc.space = space;
    sc.momentum = momentum;
    sc.D = cfg.arch.param_count();

    if (!momentum) {
        sc.fields = std::move(fields);
        sc.degree = cfg.degree.value_or(2);
        sc.time_cap = cfg.time_cap.value_or(0);
        return sc;
    }

    LiftedSystem sys = lift_momentum(fields, cfg.flow, space);
    if (cfg.flow.kind == FlowSpec::Kind::HeavyBall) {
        if (cfg.flow.tau != 0) sys = heavy_ball_surrogate(sys);
        sc.degree = cfg.degree.value_or(3);
        sc.time_cap = cfg.time_cap.value_or(cfg.flow.tau != 0 ? 1 : 0);
    } else {
        sc.degree = cfg.degree.value_or(5);
        sc.time_cap = cfg.time_cap.value_or(3);
    }
    sc.fields = std::move(sys.fields);
    sc.surrogate = sys.surrogate;
    return sc;
}

namespace {

// two-layer linear widths {n, r, m} reparameterize W = U V^T with
// U in n x r, V^T in r x m
bool two_layer(const Architecture& arch, int& n, int& m, int& r) {
    if (arch.kind != Architecture::Kind::Linear || arch.dims.size() != 3)
        return false;
    n = arch.dims[0];
    r = arch.dims[1];
    m = arch.dims[2];
    return true;
}

} // namespace

std::vector<LawFamily> closed_form_laws(const ScenarioConfig& cfg) {
    const bool momentum = cfg.flow.kind != FlowSpec::Kind::Gradient;
    int n = 0, m = 0, r = 0;

    switch (cfg.metric.kind) {
    case MetricSpec::Kind::Euclidean: {
        if (!momentum) {
            SpacePtr sp = cfg.arch.make_space(false, VariableSpace::TimeVar::None);
            return balancedness_gf_laws(cfg.arch, sp);
        }
        if (cfg.arch.kind != Architecture::Kind::Linear) return {};
        auto tv = (cfg.flow.kind == FlowSpec::Kind::HeavyBall && cfg.flow.tau != 0)
                      ? VariableSpace::TimeVar::Surrogate
                      : VariableSpace::TimeVar::Time;
        SpacePtr sp = cfg.arch.make_space(true, tv);
        return pca_momentum_laws(cfg.arch, cfg.flow, sp);
    }
    case MetricSpec::Kind::MirrorDiag:
        if (momentum || !two_layer(cfg.arch, n, m, r)) return {};
        return nmf_gf_laws(n, m, r,
                           cfg.arch.make_space(false, VariableSpace::TimeVar::None));
    case MetricSpec::Kind::IcnnHybrid:
        if (momentum || cfg.arch.kind != Architecture::Kind::Relu2 || !cfg.arch.bias)
            return {};
        return icnn_gf_laws(cfg.arch.dims[0], cfg.arch.dims[1], cfg.arch.dims[2],
                            cfg.arch.make_space(false, VariableSpace::TimeVar::None));
    }
    return {};
}

std::optional<long> formula_count(const ScenarioConfig& cfg) {
    const bool momentum = cfg.flow.kind != FlowSpec::Kind::Gradient;
    int n = 0, m = 0, r = 0;

    switch (cfg.metric.kind) {
    case MetricSpec::Kind::Euclidean:
        if (cfg.arch.kind == Architecture::Kind::Relu2)
            return momentum ? 0L : static_cast<long>(cfg.arch.dims[2]);
        if (!two_layer(cfg.arch, n, m, r)) return std::nullopt;
        try {
            return momentum ? predicted_count_mf(n, m, r)
                            : predicted_count_gf(n, m, r);
        } catch (const std::exception&) {
            return std::nullopt; // no closed formula, e.g. (1,1,r<4) momentum
        }
    case MetricSpec::Kind::MirrorDiag:
        if (!two_layer(cfg.arch, n, m, r)) return std::nullopt;
        return momentum ? 0L : static_cast<long>(r);
    case MetricSpec::Kind::IcnnHybrid:
        if (cfg.arch.kind != Architecture::Kind::Relu2 || !cfg.arch.bias)
            return std::nullopt;
        return momentum ? 0L : static_cast<long>(cfg.arch.dims[2]);
    }
    return std::nullopt;
}

} // namespace conslaw
