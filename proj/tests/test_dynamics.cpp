#include "conslaw/dynamics.hpp"
#include "conslaw/laws.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace conslaw;

namespace {

SimSpec base_spec() {
    SimSpec s;
    s.arch = Architecture::linear({2, 2, 2});
    s.data = make_synthetic_dataset(s.arch, 5, 42);
    s.delta = 1e-3;
    s.steps = 50;
    s.seed = 7;
    s.init_scale = 0.4;
    return s;
}

} // namespace

TEST_CASE("step-size coefficients match the scheme") {
    SimSpec s = base_spec();
    s.mu = 1.0;
    s.nu = 2.0;
    s.delta = 0.01;
    FlowRun run = simulate_flow(s);
    CHECK(run.alpha == doctest::Approx(0.01 / (2.0 + 1.0 / 0.01)));
    CHECK(run.beta == doctest::Approx(1.0 / (0.01 * 2.0 + 1.0)));

    s.mu = 0.0;
    run = simulate_flow(s);
    CHECK(run.beta == 0.0);
    CHECK(run.alpha == doctest::Approx(0.01 / 2.0));
}

TEST_CASE("simulation is deterministic per seed") {
    SimSpec s = base_spec();
    FlowRun a = simulate_flow(s), b = simulate_flow(s);
    REQUIRE(a.trajectory.size() == b.trajectory.size());
    for (std::size_t k = 0; k < a.trajectory.size(); ++k)
        CHECK(a.trajectory[k] == b.trajectory[k]);
    s.seed = 8;
    FlowRun c = simulate_flow(s);
    CHECK(a.trajectory[0] != c.trajectory[0]);
}

TEST_CASE("loss is monotone for small-step gradient descent") {
    SimSpec s = base_spec();
    FlowRun run = simulate_flow(s);
    for (std::size_t k = 1; k < run.loss.size(); ++k)
        CHECK(run.loss[k] <= run.loss[k - 1] + 1e-12);
}

TEST_CASE("loss gradient matches finite differences") {
    for (Architecture arch : {Architecture::linear({2, 3, 2}),
                              Architecture::relu2(2, 2, 3, true)}) {
        Dataset data = make_synthetic_dataset(arch, 6, 3);
        Eigen::VectorXd theta(arch.param_count());
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> u(0.2, 1.0);
        for (int i = 0; i < theta.size(); ++i) theta[i] = u(rng);
        const Eigen::VectorXd g = loss_gradient(arch, theta, data);
        const double h = 1e-6;
        for (int j = 0; j < theta.size(); ++j) {
            Eigen::VectorXd hi = theta, lo = theta;
            hi[j] += h;
            lo[j] -= h;
            const double fd =
                (loss_value(arch, hi, data) - loss_value(arch, lo, data)) /
                (2 * h);
            CHECK(std::abs(fd - g[j]) <= 1e-6 * std::max(1.0, std::abs(g[j])));
        }
    }
}

TEST_CASE("mirror runs keep positivity or abort") {
    SimSpec s = base_spec();
    s.metric.kind = MetricSpec::Kind::MirrorDiag;
    s.positive_init = true;
    s.delta = 1e-3;
    FlowRun run = simulate_flow(s); // must not throw
    for (const auto& th : run.trajectory) CHECK(th.minCoeff() > 0.0);
}

TEST_CASE("drift evaluation rejects momentum laws on gradient runs") {
    SimSpec s = base_spec();
    FlowRun run = simulate_flow(s); // mu = 0
    auto sp = s.arch.make_space(true, VariableSpace::TimeVar::Surrogate);
    auto fams = pca_momentum_laws(s.arch, FlowSpec::heavy_ball(Rational(1)), sp);
    REQUIRE(!fams.empty());
    CHECK_THROWS_AS(
        evaluate_drift(run, {{"mom", fams[0].realization}}),
        std::invalid_argument);
}

TEST_CASE("balancedness drift shrinks with the step size") {
    auto drift_at = [](double delta) {
        SimSpec s = base_spec();
        s.delta = delta;
        s.steps = static_cast<int>(0.5 / delta);
        FlowRun run = simulate_flow(s);
        auto sp = s.arch.make_space(false, VariableSpace::TimeVar::None);
        auto fams = balancedness_gf_laws(s.arch, sp);
        std::vector<std::pair<std::string, Polynomial>> laws;
        for (const auto& f : fams) laws.emplace_back(f.family, f.realization);
        double worst = 0;
        for (const auto& r : evaluate_drift(run, laws))
            worst = std::max(worst, r.max_abs_drift);
        return worst;
    };
    const double d1 = drift_at(4e-3), d2 = drift_at(2e-3);
    CHECK(d2 < d1);
}

TEST_CASE("natural gradient step is finite and descends") {
    Architecture arch = Architecture::linear({2, 2, 2});
    Dataset data = make_synthetic_dataset(arch, 5, 9);
    Eigen::VectorXd theta(8);
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 8; ++i) theta[i] = u(rng);
    const double l0 = loss_value(arch, theta, data);
    for (int k = 0; k < 100; ++k)
        theta = natural_gradient_step(arch, theta, data, 1e-3);
    CHECK(theta.allFinite());
    CHECK(loss_value(arch, theta, data) < l0);
}

TEST_CASE("rk4 integrates exponential decay to high order") {
    auto f = [](double, const Eigen::VectorXd& y) {
        return Eigen::VectorXd(-y);
    };
    Eigen::VectorXd y(1);
    y << 1.0;
    y = rk4_integrate(f, y, 0.0, 1.0, 100);
    CHECK(std::abs(y[0] - std::exp(-1.0)) <= 1e-9);
}

TEST_CASE("synthetic datasets are deterministic and shaped") {
    Architecture arch = Architecture::linear({2, 3, 4});
    Dataset a = make_synthetic_dataset(arch, 7, 5);
    Dataset b = make_synthetic_dataset(arch, 7, 5);
    CHECK(a.X == b.X);
    CHECK(a.Y == b.Y);
    CHECK(a.X.rows() == 4); // input dim = last width
    CHECK(a.Y.rows() == 2);
    CHECK(a.X.cols() == 7);
}
