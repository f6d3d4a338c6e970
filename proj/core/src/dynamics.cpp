#include "conslaw/dynamics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace conslaw {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<MatrixXd> unpack(const Architecture& arch, const VectorXd& theta) {
    std::vector<MatrixXd> mats;
    std::size_t off = 0;
    for (const auto& s : arch.shapes()) {
        MatrixXd m(s.rows, s.cols);
        for (int c = 0; c < s.cols; ++c)
            for (int r = 0; r < s.rows; ++r) m(r, c) = theta[off++];
        mats.push_back(std::move(m));
    }
    return mats;
}

VectorXd pack(const Architecture& arch, const std::vector<MatrixXd>& mats) {
    VectorXd theta(arch.param_count());
    std::size_t off = 0;
    for (const auto& m : mats)
        for (int c = 0; c < m.cols(); ++c)
            for (int r = 0; r < m.rows(); ++r) theta[off++] = m(r, c);
    return theta;
}

MatrixXd predict(const Architecture& arch, const std::vector<MatrixXd>& w,
                 const MatrixXd& X) {
    if (arch.kind == Architecture::Kind::Linear) {
        MatrixXd prod = w[0];
        for (std::size_t i = 1; i < w.size(); ++i) prod *= w[i];
        return prod * X;
    }
    // relu2: U sigma(V^T X + b^T)
    MatrixXd pre = w[1].transpose() * X; // r x p
    if (arch.bias) pre.colwise() += w[2].row(0).transpose();
    return w[0] * pre.cwiseMax(0.0);
}

} // namespace

Dataset make_synthetic_dataset(const Architecture& arch, int samples,
                               std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const auto shapes = arch.shapes();
    const int in_dim = arch.kind == Architecture::Kind::Linear
                           ? arch.dims.back()
                           : arch.dims[1];
    Dataset data;
    data.X.resize(in_dim, samples);
    for (int c = 0; c < samples; ++c)
        for (int r = 0; r < in_dim; ++r) data.X(r, c) = gauss(rng);

    // random teacher of the same architecture
    VectorXd teacher(arch.param_count());
    for (Eigen::Index i = 0; i < teacher.size(); ++i) teacher[i] = gauss(rng);
    data.Y = predict(arch, unpack(arch, teacher), data.X);
    return data;
}

double loss_value(const Architecture& arch, const VectorXd& theta,
                  const Dataset& data) {
    const MatrixXd resid = predict(arch, unpack(arch, theta), data.X) - data.Y;
    return resid.squaredNorm();
}

Eigen::VectorXd loss_gradient(const Architecture& arch, const VectorXd& theta,
                              const Dataset& data) {
    const auto w = unpack(arch, theta);
    std::vector<MatrixXd> grads(w.size());

    if (arch.kind == Architecture::Kind::Linear) {
        MatrixXd resid = predict(arch, w, data.X) - data.Y;
        MatrixXd g = 2.0 * resid * data.X.transpose(); // dE/d(U_1...U_q)
        const std::size_t q = w.size();
        for (std::size_t i = 0; i < q; ++i) {
            MatrixXd prefix = MatrixXd::Identity(w[0].rows(), w[0].rows());
            for (std::size_t j = 0; j < i; ++j) prefix *= w[j];
            MatrixXd suffix = MatrixXd::Identity(w[q - 1].cols(), w[q - 1].cols());
            for (std::size_t j = q; j-- > i + 1;) suffix = w[j] * suffix;
            grads[i] = prefix.transpose() * g * suffix.transpose();
        }
        return pack(arch, grads);
    }

    MatrixXd pre = w[1].transpose() * data.X; // r x p
    if (arch.bias) pre.colwise() += w[2].row(0).transpose();
    MatrixXd act = pre.cwiseMax(0.0);
    MatrixXd gate = (pre.array() > 0.0).cast<double>();
    MatrixXd resid = w[0] * act - data.Y;
    MatrixXd back = (2.0 * w[0].transpose() * resid).cwiseProduct(gate); // r x p
    grads[0] = 2.0 * resid * act.transpose();
    grads[1] = data.X * back.transpose();
    if (arch.bias) grads[2] = back.rowwise().sum().transpose();
    return pack(arch, grads);
}

FlowRun simulate_flow(const SimSpec& spec) {
    if (spec.delta <= 0) throw std::invalid_argument("step size must be positive");
    if (spec.mu < 0 || spec.nu < 0)
        throw std::invalid_argument("mu, nu must be non-negative");

    FlowRun run;
    run.spec = spec;
    run.alpha = spec.delta / (spec.nu + spec.mu / spec.delta);
    run.beta =
        spec.mu == 0 ? 0.0 : spec.mu / (spec.delta * spec.nu + spec.mu);

    const std::size_t D = spec.arch.param_count();
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd theta(D);
    for (std::size_t i = 0; i < D; ++i) theta[i] = gauss(rng) * spec.init_scale;
    if (spec.positive_init)
        theta = theta.cwiseAbs().array() + 0.25 * spec.init_scale;

    const bool mirror_all = spec.metric.kind == MetricSpec::Kind::MirrorDiag;
    const bool mirror_u = spec.metric.kind == MetricSpec::Kind::IcnnHybrid;
    const auto shapes = spec.arch.shapes();
    const std::size_t u_size =
        shapes.empty() ? 0
                       : static_cast<std::size_t>(shapes[0].rows) * shapes[0].cols;

    auto metric_apply = [&](const VectorXd& arg, const VectorXd& grad) {
        if (spec.metric.kind == MetricSpec::Kind::Euclidean) return grad;
        VectorXd out = grad;
        const std::size_t end = mirror_all ? D : (mirror_u ? u_size : 0);
        for (std::size_t i = 0; i < end; ++i) out[i] *= arg[i];
        return out;
    };
    auto check_state = [&](const VectorXd& th, double lo, int step) {
        if (!th.allFinite() || !std::isfinite(lo))
            throw std::runtime_error("trajectory diverged at step " +
                                     std::to_string(step));
        if ((mirror_all || spec.positive_init) &&
            spec.metric.kind != MetricSpec::Kind::Euclidean) {
            const std::size_t end = mirror_all ? D : u_size;
            for (std::size_t i = 0; i < end; ++i)
                if (th[i] <= 0.0)
                    throw std::runtime_error("mirror positivity lost at step " +
                                             std::to_string(step));
        }
    };

    run.trajectory.push_back(theta);
    run.loss.push_back(loss_value(spec.arch, theta, spec.data));
    check_state(theta, run.loss.back(), 0);

    VectorXd prev = theta; // cold start: zero initial velocity
    if (spec.init_velocity_scale != 0.0)
        for (std::size_t i = 0; i < D; ++i)
            prev[i] -= spec.delta * gauss(rng) * spec.init_velocity_scale;
    for (int k = 0; k < spec.steps; ++k) {
        const VectorXd metric_arg =
            spec.mu * (theta - prev) / spec.delta + spec.nu * theta;
        const VectorXd grad = loss_gradient(spec.arch, theta, spec.data);
        VectorXd next = theta - run.alpha * metric_apply(metric_arg, grad) +
                        run.beta * (theta - prev);
        prev = theta;
        theta = next;
        run.trajectory.push_back(theta);
        run.loss.push_back(loss_value(spec.arch, theta, spec.data));
        check_state(theta, run.loss.back(), k + 1);
    }
    return run;
}

namespace {

// H^+ grad E / p, the right-hand side of the natural gradient flow
VectorXd natural_direction(const Architecture& arch, const VectorXd& theta,
                           const Dataset& data) {
    const auto w = unpack(arch, theta);
    const std::size_t D = arch.param_count();
    const int p = static_cast<int>(data.X.cols());
    const int n_out = static_cast<int>(data.Y.rows());

    MatrixXd H = MatrixXd::Zero(D, D);
    for (int s = 0; s < p; ++s) {
        // Jacobian of g(theta, x_s) with respect to theta, n x D
        MatrixXd J = MatrixXd::Zero(n_out, D);
        if (arch.kind == Architecture::Kind::Linear) {
            const std::size_t q = w.size();
            const VectorXd x = data.X.col(s);
            std::size_t off = 0;
            for (std::size_t i = 0; i < q; ++i) {
                MatrixXd prefix = MatrixXd::Identity(n_out, n_out);
                for (std::size_t j = 0; j < i; ++j) prefix *= w[j];
                VectorXd sufx = x;
                for (std::size_t j = q; j-- > i + 1;) sufx = w[j] * sufx;
                for (int c = 0; c < w[i].cols(); ++c)
                    for (int r = 0; r < w[i].rows(); ++r)
                        J.col(off++) = prefix.col(r) * sufx[c];
            }
        } else {
            const VectorXd x = data.X.col(s);
            VectorXd pre = w[1].transpose() * x;
            if (arch.bias) pre += w[2].row(0).transpose();
            const int r_hid = static_cast<int>(pre.size());
            std::size_t off = 0;
            for (int j = 0; j < r_hid; ++j) // dU block
                for (int k = 0; k < n_out; ++k)
                    J(k, off++) = std::max(pre[j], 0.0);
            for (int j = 0; j < r_hid; ++j) { // dV block
                const double gate = pre[j] > 0.0 ? 1.0 : 0.0;
                for (int b = 0; b < w[1].rows(); ++b) {
                    for (int k = 0; k < n_out; ++k)
                        J(k, off) = w[0](k, j) * gate * x[b];
                    ++off;
                }
            }
            if (arch.bias)
                for (int j = 0; j < r_hid; ++j) {
                    const double gate = pre[j] > 0.0 ? 1.0 : 0.0;
                    for (int k = 0; k < n_out; ++k) J(k, off) = w[0](k, j) * gate;
                    ++off;
                }
        }
        H += J.transpose() * J;
    }
    H /= static_cast<double>(p);

    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(H);
    const VectorXd& ev = eig.eigenvalues();
    const double cutoff = 1e-10 * std::max(ev.cwiseAbs().maxCoeff(), 0.0);
    VectorXd inv = VectorXd::Zero(D);
    for (std::size_t i = 0; i < D; ++i)
        if (std::abs(ev[i]) > cutoff && cutoff > 0.0) inv[i] = 1.0 / ev[i];
    const MatrixXd Hpinv =
        eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();

    // mean-loss gradient, matching the 1/p normalization of the Gram matrix
    return Hpinv * loss_gradient(arch, theta, data) / p;
}

} // namespace

Eigen::VectorXd natural_gradient_step(const Architecture& arch,
                                      const VectorXd& theta,
                                      const Dataset& data, double delta) {
    // Heun step: second-order accurate, so the exactly-conserved quantities
    // of the continuous flow drift at O(delta^2) per unit time
    const VectorXd k1 = natural_direction(arch, theta, data);
    const VectorXd k2 = natural_direction(arch, theta - delta * k1, data);
    VectorXd next = theta - delta / 2 * (k1 + k2);
    if (!next.allFinite()) throw std::runtime_error("natural gradient diverged");
    return next;
}

std::vector<DriftReport> evaluate_drift(
    const FlowRun& run,
    const std::vector<std::pair<std::string, Polynomial>>& laws) {
    std::vector<DriftReport> reports;
    const SimSpec& spec = run.spec;
    for (const auto& [id, law] : laws) {
        const SpacePtr& sp = law.space();
        bool uses_velocity = false, uses_time = false;
        for (const auto& [e, c] : law.terms())
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (sp->kind(i) == VarKind::Velocity) uses_velocity = true;
                if (sp->kind(i) == VarKind::Time ||
                    sp->kind(i) == VarKind::TimeSurrogate)
                    uses_time = true;
            }
        if ((uses_velocity || (uses_time && sp->has_velocity())) && spec.mu == 0)
            throw std::invalid_argument("law requires momentum run: " + id);

        const double tau = spec.mu > 0 ? spec.nu / spec.mu : 0.0;
        DriftReport rep;
        rep.law_id = id;
        // k >= 1 so the backward-difference velocity is defined
        for (std::size_t k = 1; k < run.trajectory.size(); ++k) {
            std::vector<double> point(sp->size(), 0.0);
            std::size_t off = 0;
            if (sp->has_time())
                point[off++] = sp->kind(0) == VarKind::TimeSurrogate
                                   ? std::exp(tau * k * spec.delta)
                                   : k * spec.delta;
            const Eigen::VectorXd& th = run.trajectory[k];
            for (Eigen::Index i = 0; i < th.size(); ++i) point[off++] = th[i];
            if (sp->has_velocity()) {
                const Eigen::VectorXd vel =
                    (run.trajectory[k] - run.trajectory[k - 1]) / spec.delta;
                for (Eigen::Index i = 0; i < vel.size(); ++i) point[off++] = vel[i];
            }
            rep.values.push_back(law.eval(point));
        }
        for (double v : rep.values)
            rep.max_abs_drift =
                std::max(rep.max_abs_drift, std::abs(v - rep.values.front()));
        const double scale = std::abs(rep.values.front());
        rep.relative_drift =
            scale > 0 ? rep.max_abs_drift / scale : rep.max_abs_drift;
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace conslaw
