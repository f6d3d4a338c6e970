#ifndef CONSLAW_MODEL_HPP
#define CONSLAW_MODEL_HPP

#include "conslaw/polynomial.hpp"

#include <vector>

namespace conslaw {

// Network architecture. Linear nets carry layer widths n_0..n_q with
// weights U_i in R^{n_{i-1} x n_i}; two-layer ReLU nets carry (n, m, r)
// with U in R^{n x r}, V in R^{m x r} and an optional bias row b.
struct Architecture {
    enum class Kind { Linear, Relu2 };
    Kind kind = Kind::Linear;
    std::vector<int> dims;
    bool bias = false;

    static Architecture linear(std::vector<int> widths);
    static Architecture relu2(int n, int m, int r, bool bias);

    std::size_t param_count() const;
    std::vector<MatrixShape> shapes() const;

    // Lifted variable layout for this architecture.
    SpacePtr make_space(bool with_velocity, VariableSpace::TimeVar time) const;
};

struct MetricSpec {
    enum class Kind { Euclidean, MirrorDiag, IcnnHybrid };
    enum class Mode { GradientFlow, MomentumFlow };
    Kind kind = Kind::Euclidean;
    Mode mode = Mode::GradientFlow;
    Rational tau = Rational(0); // used by mirror/icnn in momentum mode
};

// Components phi_1..phi_d, polynomials in the parameter block only.
struct ReparamMap {
    std::vector<Polynomial> components;
    std::size_t size() const { return components.size(); }
};

// phi for the architecture, expanded symbolically in `space`.
ReparamMap build_phi(const Architecture& arch, const SpacePtr& space);

// grad phi_i placed on the parameter coordinates of `space`.
std::vector<VectorField> grad_phi(const ReparamMap& phi, const SpacePtr& space);

// Applies the metric componentwise; results stay polynomial fields.
std::vector<VectorField> apply_metric(const MetricSpec& metric,
                                      const std::vector<VectorField>& fields,
                                      const SpacePtr& space);

} // namespace conslaw

#endif
