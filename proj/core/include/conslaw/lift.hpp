#ifndef CONSLAW_LIFT_HPP
#define CONSLAW_LIFT_HPP

#include "conslaw/polynomial.hpp"

#include <functional>
#include <vector>

namespace conslaw {

struct FlowSpec {
    enum class Kind { Gradient, HeavyBall, Nesterov };
    Kind kind = Kind::Gradient;
    Rational tau = Rational(0); // heavy ball only; Nesterov fixes tau(t) = 3/t

    static FlowSpec gradient() { return {Kind::Gradient, Rational(0)}; }
    static FlowSpec heavy_ball(Rational tau) { return {Kind::HeavyBall, std::move(tau)}; }
    static FlowSpec nesterov() { return {Kind::Nesterov, Rational(0)}; }
};

// Phase-space lift: fields chi_0..chi_d on the (time, theta, theta-dot)
// coordinates, polynomial in every scenario handled here.
struct LiftedSystem {
    SpacePtr space;
    std::vector<VectorField> fields;
    FlowSpec flow;
    bool surrogate = false; // time-like variable is s = exp(tau*t)
};

// chi_0 = (1, theta', -tau*theta'), chi_i = (0, 0, M grad phi_i).
// Nesterov flows are returned already denominator-cleared.
LiftedSystem lift_momentum(const std::vector<VectorField>& metric_fields,
                           const FlowSpec& flow, const SpacePtr& space);

// Change of variable s = exp(tau*t): chi_0 -> (tau*s, theta', -tau*theta').
LiftedSystem heavy_ball_surrogate(const LiftedSystem& system);

// Multiplies the Nesterov chi_0 by t: (t, t*theta', -3*theta').
LiftedSystem nesterov_cleared(const std::vector<VectorField>& metric_fields,
                              const SpacePtr& space);

// Structure-theorem invariants of the free flow theta'' + tau*theta' = 0:
// a(t) = theta + theta'/tau and b(t) = theta' * exp(tau*t).
struct FreeFlowInvariants {
    std::function<double(double /*theta*/, double /*thetadot*/)> invariant_a;
    std::function<double(double, double, double /*t*/)> invariant_b;
    // closed-form trajectory for testing
    std::function<double(double /*t*/)> theta;
    std::function<double(double /*t*/)> thetadot;
};

FreeFlowInvariants free_flow_invariant_pair(double theta0, double thetadot0,
                                            double tau);

} // namespace conslaw

#endif
