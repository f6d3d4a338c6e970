#include "conslaw/lift.hpp"

#include <cmath>
#include <stdexcept>

namespace conslaw {

namespace {

void require_lift_space(const SpacePtr& space) {
    if (!space->has_time() || !space->has_velocity())
        throw std::invalid_argument("lift needs a (time, theta, theta') space");
}

// chi_i = (0, 0, M grad phi_i): parameter-block values move to the
// velocity block.
VectorField lift_field(const VectorField& f, const SpacePtr& space) {
    VectorField chi(space);
    for (std::size_t j = 0; j < space->param_count(); ++j)
        chi.components[space->velocity_var(j)] = f.components[space->param_var(j)];
    return chi;
}

} // namespace

LiftedSystem lift_momentum(const std::vector<VectorField>& metric_fields,
                           const FlowSpec& flow, const SpacePtr& space) {
    if (flow.kind == FlowSpec::Kind::Gradient)
        throw std::invalid_argument("use gradient fields directly");
    if (flow.kind == FlowSpec::Kind::Nesterov)
        return nesterov_cleared(metric_fields, space);
    require_lift_space(space);

    LiftedSystem sys{space, {}, flow, false};
    VectorField chi0(space);
    chi0.components[0] = Polynomial::constant(space, Rational(1));
    for (std::size_t j = 0; j < space->param_count(); ++j) {
        Polynomial vel = Polynomial::variable(space, space->velocity_var(j));
        chi0.components[space->param_var(j)] = vel;
        chi0.components[space->velocity_var(j)] = vel.scaled(-flow.tau);
    }
    sys.fields.push_back(std::move(chi0));
    for (const auto& f : metric_fields) sys.fields.push_back(lift_field(f, space));
    return sys;
}

LiftedSystem heavy_ball_surrogate(const LiftedSystem& system) {
    if (system.flow.kind != FlowSpec::Kind::HeavyBall || system.surrogate)
        throw std::invalid_argument("surrogate needs a plain heavy-ball system");
    if (system.flow.tau == 0)
        throw std::invalid_argument("surrogate undefined; solve directly in t");

    LiftedSystem out = system;
    out.surrogate = true;
    // diag(tau*s, 1, ..., 1) chi_i: only chi_0 has a nonzero first component
    Polynomial s = Polynomial::variable(system.space, 0);
    out.fields[0].components[0] =
        out.fields[0].components[0] * s.scaled(system.flow.tau);
    return out;
}

LiftedSystem nesterov_cleared(const std::vector<VectorField>& metric_fields,
                              const SpacePtr& space) {
    require_lift_space(space);
    LiftedSystem sys{space, {}, FlowSpec::nesterov(), false};
    Polynomial t = Polynomial::variable(space, 0);
    VectorField chi0(space);
    chi0.components[0] = t;
    for (std::size_t j = 0; j < space->param_count(); ++j) {
        Polynomial vel = Polynomial::variable(space, space->velocity_var(j));
        chi0.components[space->param_var(j)] = t * vel;
        chi0.components[space->velocity_var(j)] = vel.scaled(Rational(-3));
    }
    sys.fields.push_back(std::move(chi0));
    for (const auto& f : metric_fields) sys.fields.push_back(lift_field(f, space));
    return sys;
}

FreeFlowInvariants free_flow_invariant_pair(double theta0, double thetadot0,
                                            double tau) {
    if (tau <= 0) throw std::invalid_argument("free-flow invariants need tau > 0");
    FreeFlowInvariants inv;
    inv.invariant_a = [tau](double th, double thd) { return th + thd / tau; };
    inv.invariant_b = [tau](double /*th*/, double thd, double t) {
        return thd * std::exp(tau * t);
    };
    inv.theta = [=](double t) {
        return theta0 + thetadot0 / tau * (1.0 - std::exp(-t * tau));
    };
    inv.thetadot = [=](double t) { return thetadot0 * std::exp(-t * tau); };
    return inv;
}

} // namespace conslaw
