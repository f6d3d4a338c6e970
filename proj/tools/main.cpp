// conslaw: discover, count, and numerically verify conservation laws of
// gradient/momentum training flows.

#include "conslaw/dynamics.hpp"
#include "conslaw/report.hpp"
#include "conslaw/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace conslaw;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

struct SimulateParams {
    double mu = 0.0;
    double nu = 1.0;
    double delta = 1e-3;
    int steps = 1000;
    int samples = 5;
    double init_scale = 0.4;
    double init_velocity_scale = 0.0;
    bool positive_init = false;
};

struct CliOptions {
    std::string config_path;
    std::string arch_kind;
    std::vector<int> dims;
    bool bias = false;
    std::string metric;
    std::string mode;
    std::string tau;
    std::string flow;
    int degree = -1;
    std::uint64_t seed = 1;
    bool seed_set = false;
    std::string out;
    std::string format = "json";
};

struct Job {
    ScenarioConfig scenario;
    SimulateParams sim;
    std::string out;
    std::string format = "json";
};

SimulateParams simulate_params_from_json(const Json& j) {
    SimulateParams p;
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k == "mu") p.mu = item.value().get<double>();
        else if (k == "nu") p.nu = item.value().get<double>();
        else if (k == "delta") p.delta = item.value().get<double>();
        else if (k == "steps") p.steps = item.value().get<int>();
        else if (k == "samples") p.samples = item.value().get<int>();
        else if (k == "init_scale") p.init_scale = item.value().get<double>();
        else if (k == "init_velocity_scale")
            p.init_velocity_scale = item.value().get<double>();
        else if (k == "positive_init") p.positive_init = item.value().get<bool>();
        else throw std::invalid_argument("simulate: unknown key \"" + k + "\"");
    }
    return p;
}

Job job_from_options(const CliOptions& opt, bool require_arch = true) {
    Job job;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw std::invalid_argument("cannot read " + opt.config_path);
        Json j = Json::parse(in);
        if (j.contains("simulate")) {
            job.sim = simulate_params_from_json(j.at("simulate"));
            j.erase("simulate");
        }
        if (j.contains("out")) {
            job.out = j.at("out").get<std::string>();
            j.erase("out");
        }
        if (j.contains("format")) {
            job.format = j.at("format").get<std::string>();
            j.erase("format");
        }
        job.scenario = scenario_config_from_json(j);
    }

    // inline flags override the config file
    if (!opt.arch_kind.empty() || !opt.dims.empty()) {
        Json a;
        a["kind"] = opt.arch_kind.empty() ? "linear" : opt.arch_kind;
        a["dims"] = opt.dims;
        a["bias"] = opt.bias;
        job.scenario.arch = architecture_from_json(a);
    }
    if (!opt.metric.empty()) {
        Json m;
        m["metric"] = opt.metric;
        job.scenario.metric = metric_from_json(m);
    }
    if (!opt.flow.empty() || !opt.mode.empty() || !opt.tau.empty()) {
        Json f;
        if (!opt.flow.empty()) f["flow"] = opt.flow;
        else if (opt.mode == "mf") f["flow"] = "heavy_ball";
        else f["flow"] = "gf";
        if (!opt.tau.empty()) f["tau"] = opt.tau;
        else if (f["flow"] != "gf") f["tau"] = "1";
        job.scenario.flow = flow_from_json(f);
    }
    if (opt.degree >= 0) job.scenario.degree = static_cast<unsigned>(opt.degree);
    if (opt.seed_set) job.scenario.seed = opt.seed;
    if (!opt.out.empty()) job.out = opt.out;
    if (opt.format != "json") job.format = opt.format;

    if (require_arch && job.scenario.arch.dims.empty())
        throw std::invalid_argument("no architecture given (--config or --dims)");
    if (job.format != "json" && job.format != "csv")
        throw std::invalid_argument("format must be json or csv");
    return job;
}

void emit(const Json& report, const std::string& out) {
    if (out.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << report.dump(2) << "\n";
}

int cmd_solve(const Job& job) {
    Scenario sc = build_scenario(job.scenario);
    LawBasis basis =
        solve_laws(sc.fields, sc.degree, sc.time_cap, job.scenario.seed);
    emit(solver_report(job.scenario, basis), job.out);
    return kExitOk;
}

int cmd_count(const Job& job) {
    Scenario sc = build_scenario(job.scenario);
    LieResult lr = lie_trace_analysis(sc.fields, job.scenario.seed);
    const std::size_t ambient = sc.momentum ? 2 * sc.D + 1 : sc.D;
    const std::size_t count = law_count_from_dim(
        lr.dim, sc.D,
        sc.momentum ? FlowMode::MomentumFlow : FlowMode::GradientFlow);
    emit(lie_report(job.scenario, lr.basis, lr.dim, ambient, count, lr.witness),
         job.out);
    return kExitOk;
}

int cmd_closed_form(const Job& job) {
    Json out;
    out["version"] = library_version();
    out["config"] = scenario_config_to_json(job.scenario);
    Json fams = Json::array();
    for (const LawFamily& f : closed_form_laws(job.scenario))
        fams.push_back(law_family_to_json(f));
    out["families"] = std::move(fams);
    emit(out, job.out);
    return kExitOk;
}

int cmd_compare(const Job& job) {
    Scenario sc = build_scenario(job.scenario);
    LawBasis basis =
        solve_laws(sc.fields, sc.degree, sc.time_cap, job.scenario.seed);
    LieResult lr = lie_trace_analysis(sc.fields, job.scenario.seed);
    const std::size_t lie_count = law_count_from_dim(
        lr.dim, sc.D,
        sc.momentum ? FlowMode::MomentumFlow : FlowMode::GradientFlow);
    CompareOutcome outcome =
        compare_report(job.scenario, basis, lie_count, formula_count(job.scenario));
    emit(outcome.report, job.out);
    return outcome.ok ? kExitOk : kExitMismatch;
}

int cmd_simulate(const Job& job) {
    SimSpec spec;
    spec.arch = job.scenario.arch;
    spec.metric = job.scenario.metric;
    spec.mu = job.sim.mu;
    spec.nu = job.sim.nu;
    spec.delta = job.sim.delta;
    spec.steps = job.sim.steps;
    spec.seed = job.scenario.seed;
    spec.init_scale = job.sim.init_scale;
    spec.init_velocity_scale = job.sim.init_velocity_scale;
    spec.positive_init =
        job.sim.positive_init || spec.metric.kind != MetricSpec::Kind::Euclidean;
    spec.data =
        make_synthetic_dataset(spec.arch, job.sim.samples, job.scenario.seed + 1);

    FlowRun run = simulate_flow(spec);

    // evaluate every applicable closed-form family along the run
    ScenarioConfig law_cfg = job.scenario;
    law_cfg.flow = FlowSpec::gradient();
    std::vector<std::pair<std::string, Polynomial>> laws;
    auto add_family = [&](const std::vector<LawFamily>& fams, const char* tag) {
        int idx = 0;
        for (const LawFamily& f : fams)
            laws.emplace_back(std::string(tag) + "/" + f.family + "_" +
                                  std::to_string(idx++),
                              f.realization);
    };
    add_family(closed_form_laws(law_cfg), "gf");
    if (spec.mu > 0 && spec.metric.kind == MetricSpec::Kind::Euclidean &&
        spec.arch.kind == Architecture::Kind::Linear) {
        ScenarioConfig mom_cfg = job.scenario;
        mom_cfg.flow = FlowSpec::heavy_ball(Rational(spec.nu) / Rational(spec.mu));
        add_family(closed_form_laws(mom_cfg), "mf");
    }

    std::vector<DriftReport> drifts = evaluate_drift(run, laws);

    const std::string base = job.out.empty() ? "run" : job.out;
    const std::string csv_path = base + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::invalid_argument("cannot write " + csv_path);
    csv << "step,t,loss,law_id,value,drift\n";
    csv.precision(17);
    for (const DriftReport& d : drifts)
        for (std::size_t k = 0; k < d.values.size(); ++k) {
            const std::size_t step = k + 1;
            csv << step << ',' << step * spec.delta << ',' << run.loss[step]
                << ',' << d.law_id << ',' << d.values[k] << ','
                << d.values[k] - d.values.front() << "\n";
        }

    Json manifest;
    manifest["version"] = library_version();
    manifest["config"] = scenario_config_to_json(job.scenario);
    manifest["mu"] = spec.mu;
    manifest["nu"] = spec.nu;
    manifest["delta"] = spec.delta;
    manifest["steps"] = spec.steps;
    manifest["samples"] = job.sim.samples;
    manifest["init_scale"] = spec.init_scale;
    manifest["init_velocity_scale"] = spec.init_velocity_scale;
    manifest["positive_init"] = spec.positive_init;
    manifest["alpha"] = run.alpha;
    manifest["beta"] = run.beta;
    manifest["seed"] = spec.seed;
    manifest["csv"] = csv_path;
    Json law_summaries = Json::array();
    for (const DriftReport& d : drifts) {
        Json s;
        s["law_id"] = d.law_id;
        s["max_abs_drift"] = d.max_abs_drift;
        s["relative_drift"] = d.relative_drift;
        law_summaries.push_back(std::move(s));
    }
    manifest["laws"] = std::move(law_summaries);
    emit(manifest, base + ".json");
    return kExitOk;
}

int cmd_free_flow(const Job& job) {
    const double tau = job.scenario.flow.tau == 0
                           ? 1.0
                           : rational_to_double(job.scenario.flow.tau);
    const double tol = 1e-9;
    double max_da = 0.0, max_db = 0.0;
    for (int s = 0; s < 10; ++s) {
        const double th0 = 0.3 + 0.17 * s, thd0 = -0.8 + 0.21 * s;
        FreeFlowInvariants inv = free_flow_invariant_pair(th0, thd0, tau);
        Eigen::VectorXd y(2);
        y << th0, thd0;
        auto f = [tau](double, const Eigen::VectorXd& v) {
            Eigen::VectorXd d(2);
            d << v[1], -tau * v[1];
            return d;
        };
        const double a0 = inv.invariant_a(y[0], y[1]);
        const double b0 = inv.invariant_b(y[0], y[1], 0.0);
        const int steps = 2000;
        for (int i = 0; i < steps; ++i) {
            const double t0 = 2.0 * i / steps, t1 = 2.0 * (i + 1) / steps;
            y = rk4_integrate(f, y, t0, t1, 1);
            max_da = std::max(max_da, std::abs(inv.invariant_a(y[0], y[1]) - a0));
            max_db =
                std::max(max_db, std::abs(inv.invariant_b(y[0], y[1], t1) - b0));
        }
    }
    Json report;
    report["version"] = library_version();
    report["tau"] = tau;
    report["seeds"] = 10;
    report["horizon"] = 2.0;
    report["max_drift_a"] = max_da;
    report["max_drift_b"] = max_db;
    report["tolerance"] = tol;
    const bool ok = max_da <= tol && max_db <= tol;
    report["ok"] = ok;
    emit(report, job.out);
    return ok ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conservation laws of gradient and momentum training flows"};
    app.require_subcommand(1);

    CliOptions opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "JSON config file");
        cmd->add_option("--arch", opt.arch_kind, "linear|relu2");
        cmd->add_option("--dims", opt.dims, "layer widths")->delimiter(',');
        cmd->add_flag("--bias", opt.bias, "relu2 bias row");
        cmd->add_option("--metric", opt.metric, "euclidean|mirror|icnn");
        cmd->add_option("--mode", opt.mode, "gf|mf");
        cmd->add_option("--tau", opt.tau, "momentum tau (rational p/q)");
        cmd->add_option("--flow", opt.flow, "gf|heavy_ball|nesterov");
        cmd->add_option("--degree", opt.degree, "ansatz degree override");
        cmd->add_option("--seed", opt.seed, "witness/data seed")
            ->each([&](const std::string&) { opt.seed_set = true; });
        cmd->add_option("--out", opt.out, "output path");
        cmd->add_option("--format", opt.format, "json|csv");
        return cmd;
    };

    auto* solve = add_common(app.add_subcommand("solve", "degree-bounded law basis"));
    auto* count = add_common(app.add_subcommand("count", "Lie trace-dimension count"));
    auto* closed =
        add_common(app.add_subcommand("closed-form", "closed-form law families"));
    auto* compare = add_common(
        app.add_subcommand("compare", "assert solver = Lie (= formula) counts"));
    auto* simulate =
        add_common(app.add_subcommand("simulate", "discretized flow + drift CSV"));
    auto* free_flow = add_common(
        app.add_subcommand("free-flow", "structure-theorem invariant check"));

    CLI11_PARSE(app, argc, argv);

    try {
        const Job job = job_from_options(opt, !free_flow->parsed());
        if (solve->parsed()) return cmd_solve(job);
        if (count->parsed()) return cmd_count(job);
        if (closed->parsed()) return cmd_closed_form(job);
        if (compare->parsed()) return cmd_compare(job);
        if (simulate->parsed()) return cmd_simulate(job);
        if (free_flow->parsed()) return cmd_free_flow(job);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitConfig;
}
