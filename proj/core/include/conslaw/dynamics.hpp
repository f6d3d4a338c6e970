#ifndef CONSLAW_DYNAMICS_HPP
#define CONSLAW_DYNAMICS_HPP

#include "conslaw/model.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace conslaw {

struct Dataset {
    Eigen::MatrixXd X; // inputs,  m x p
    Eigen::MatrixXd Y; // targets, n x p
};

// X standard normal, Y from a random teacher of the same architecture
// (|.| applied entrywise for mirror targets). Deterministic per seed.
Dataset make_synthetic_dataset(const Architecture& arch, int samples,
                               std::uint64_t seed);

// Quadratic loss |g(theta, X) - Y|_F^2 and its gradient, theta packed
// column-major per weight matrix (same ordering as the parameter block
// of the symbolic VariableSpace).
double loss_value(const Architecture& arch, const Eigen::VectorXd& theta,
                  const Dataset& data);
Eigen::VectorXd loss_gradient(const Architecture& arch,
                              const Eigen::VectorXd& theta, const Dataset& data);

struct SimSpec {
    Architecture arch;
    MetricSpec metric;
    double mu = 0.0;    // mu = 0 is plain gradient descent
    double nu = 1.0;
    double delta = 1e-3;
    int steps = 1000;
    Dataset data;
    std::uint64_t seed = 1;
    double init_scale = 1.0;
    // warm start: theta_{-1} = theta_0 - delta * v_0 with random v_0 of this
    // scale; 0 keeps the cold-start (zero initial velocity) convention
    double init_velocity_scale = 0.0;
    bool positive_init = false; // mirror runs start strictly positive
};

struct FlowRun {
    SimSpec spec;
    double alpha = 0.0; // delta / (nu + mu/delta)
    double beta = 0.0;  // mu / (delta*nu + mu)
    std::vector<Eigen::VectorXd> trajectory; // theta_0 .. theta_steps
    std::vector<double> loss;
};

// Two-step discretization theta_{k+1} = theta_k - alpha M_k grad E(theta_k)
// + beta (theta_k - theta_{k-1}), M_k evaluated at mu*(theta_k -
// theta_{k-1})/delta + nu*theta_k; cold start (zero initial velocity).
FlowRun simulate_flow(const SimSpec& spec);

// theta' = theta - delta * H^+ grad E(theta), H the mean Gram matrix of the
// model Jacobians; eigenvalues below 1e-10 * max are zeroed in H^+.
Eigen::VectorXd natural_gradient_step(const Architecture& arch,
                                      const Eigen::VectorXd& theta,
                                      const Dataset& data, double delta);

struct DriftReport {
    std::string law_id;
    std::vector<double> values; // h(t_k, theta_k, theta'_k), k >= 1
    double max_abs_drift = 0.0;
    double relative_drift = 0.0;
};

// Evaluates laws along a run; velocities are backward differences
// (theta_k - theta_{k-1})/delta, the surrogate s is exp(tau * k * delta)
// with tau = nu/mu.
std::vector<DriftReport> evaluate_drift(
    const FlowRun& run,
    const std::vector<std::pair<std::string, Polynomial>>& laws);

// Classic fixed-step RK4, the continuous-flow oracle for drift baselines.
template <typename Deriv>
Eigen::VectorXd rk4_integrate(const Deriv& f, Eigen::VectorXd y, double t0,
                              double t1, int steps) {
    const double h = (t1 - t0) / steps;
    double t = t0;
    for (int i = 0; i < steps; ++i) {
        Eigen::VectorXd k1 = f(t, y);
        Eigen::VectorXd k2 = f(t + h / 2, y + h / 2 * k1);
        Eigen::VectorXd k3 = f(t + h / 2, y + h / 2 * k2);
        Eigen::VectorXd k4 = f(t + h, y + h * k3);
        y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        t += h;
    }
    return y;
}

} // namespace conslaw

#endif
