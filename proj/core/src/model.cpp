#include "conslaw/model.hpp"

#include <stdexcept>

namespace conslaw {

Architecture Architecture::linear(std::vector<int> widths) {
    if (widths.size() < 3)
        throw std::invalid_argument("linear architecture needs at least two layers");
    for (int w : widths)
        if (w < 1) throw std::invalid_argument("layer widths must be positive");
    Architecture a;
    a.kind = Kind::Linear;
    a.dims = std::move(widths);
    return a;
}

Architecture Architecture::relu2(int n, int m, int r, bool bias) {
    if (n < 1 || m < 1 || r < 1)
        throw std::invalid_argument("relu2 dims must be positive");
    Architecture a;
    a.kind = Kind::Relu2;
    a.dims = {n, m, r};
    a.bias = bias;
    return a;
}

std::vector<MatrixShape> Architecture::shapes() const {
    std::vector<MatrixShape> out;
    if (kind == Kind::Linear) {
        for (std::size_t i = 0; i + 1 < dims.size(); ++i)
            out.push_back({"U" + std::to_string(i + 1), dims[i], dims[i + 1]});
    } else {
        out.push_back({"U", dims[0], dims[2]});
        out.push_back({"V", dims[1], dims[2]});
        if (bias) out.push_back({"b", 1, dims[2]});
    }
    return out;
}

std::size_t Architecture::param_count() const {
    std::size_t d = 0;
    for (const auto& s : shapes()) d += static_cast<std::size_t>(s.rows) * s.cols;
    return d;
}

SpacePtr Architecture::make_space(bool with_velocity,
                                  VariableSpace::TimeVar time) const {
    return VariableSpace::make(shapes(), with_velocity, time);
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix weight_matrix(const SpacePtr& space, std::size_t mat) {
    const auto& s = space->shapes()[mat];
    PolyMatrix out(s.rows, std::vector<Polynomial>(s.cols, Polynomial::zero(space)));
    for (int r = 0; r < s.rows; ++r)
        for (int c = 0; c < s.cols; ++c)
            out[r][c] = Polynomial::variable(space, space->param_var(mat, r, c));
    return out;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, const SpacePtr& space) {
    PolyMatrix out(a.size(), std::vector<Polynomial>(b[0].size(), Polynomial::zero(space)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

} // namespace

ReparamMap build_phi(const Architecture& arch, const SpacePtr& space) {
    ReparamMap phi;
    if (arch.kind == Architecture::Kind::Linear) {
        PolyMatrix prod = weight_matrix(space, 0);
        for (std::size_t i = 1; i + 1 < arch.dims.size(); ++i)
            prod = matmul(prod, weight_matrix(space, i), space);
        // entries of U_1...U_q, column-major
        for (std::size_t c = 0; c < prod[0].size(); ++c)
            for (std::size_t r = 0; r < prod.size(); ++r)
                phi.components.push_back(prod[r][c]);
        return phi;
    }
    const int n = arch.dims[0], m = arch.dims[1], r = arch.dims[2];
    for (int j = 0; j < r; ++j) {
        for (int l = 0; l < m; ++l)
            for (int k = 0; k < n; ++k) {
                Polynomial u = Polynomial::variable(space, space->param_var(0, k, j));
                Polynomial v = Polynomial::variable(space, space->param_var(1, l, j));
                phi.components.push_back(u * v);
            }
        if (arch.bias)
            for (int k = 0; k < n; ++k) {
                Polynomial u = Polynomial::variable(space, space->param_var(0, k, j));
                Polynomial b = Polynomial::variable(space, space->param_var(2, 0, j));
                phi.components.push_back(u * b);
            }
    }
    return phi;
}

std::vector<VectorField> grad_phi(const ReparamMap& phi, const SpacePtr& space) {
    std::vector<VectorField> out;
    out.reserve(phi.components.size());
    const std::size_t D = space->param_count();
    for (const auto& f : phi.components) {
        VectorField g(space);
        for (std::size_t j = 0; j < D; ++j)
            g.components[space->param_var(j)] = f.partial(space->param_var(j));
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<VectorField> apply_metric(const MetricSpec& metric,
                                      const std::vector<VectorField>& fields,
                                      const SpacePtr& space) {
    if (metric.kind == MetricSpec::Kind::Euclidean) return fields;
    const bool momentum = metric.mode == MetricSpec::Mode::MomentumFlow;
    if (momentum && !space->has_velocity())
        throw std::invalid_argument("momentum metric needs a velocity block");

    const std::size_t D = space->param_count();
    // icnn: mirror weights on the U block only, identity on V and b
    const std::size_t mirror_end =
        metric.kind == MetricSpec::Kind::IcnnHybrid
            ? static_cast<std::size_t>(space->shapes()[0].rows) * space->shapes()[0].cols
            : D;

    std::vector<VectorField> out;
    out.reserve(fields.size());
    for (const auto& f : fields) {
        VectorField g(space);
        for (std::size_t j = 0; j < D; ++j) {
            const std::size_t pj = space->param_var(j);
            if (f.components[pj].is_zero()) continue;
            if (j >= mirror_end) {
                g.components[pj] = f.components[pj];
                continue;
            }
            Polynomial weight = Polynomial::variable(space, pj).scaled(
                momentum ? metric.tau : Rational(1));
            if (momentum)
                weight += Polynomial::variable(space, space->velocity_var(j));
            g.components[pj] = f.components[pj] * weight;
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace conslaw
