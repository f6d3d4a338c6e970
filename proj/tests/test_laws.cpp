#include "conslaw/laws.hpp"
#include "conslaw/scenario.hpp"

#include <doctest.h>

#include <random>

using namespace conslaw;

TEST_CASE("counting formulas on the paper's reference points") {
    CHECK(predicted_count_gf(2, 1, 1) == 1);
    CHECK(predicted_count_gf(2, 2, 2) == 3);
    CHECK(predicted_count_gf(3, 2, 2) == 3);
    CHECK(predicted_count_gf(1, 2, 8) == 21);

    CHECK(predicted_count_mf(2, 1, 1) == 0);
    CHECK(predicted_count_mf(2, 1, 2) == 1);
    CHECK(predicted_count_mf(2, 2, 2) == 1);
    CHECK(predicted_count_mf(1, 2, 8) == 27);
    CHECK(predicted_count_mf(1, 1, 4) == 10); // 4r - 6
    CHECK_THROWS(predicted_count_mf(1, 1, 2));

    CHECK(constructed_count_mf(1, 2, 8) == 27); // 3[(8-6) + 7]
    CHECK(predicted_gap(2, 1, 1) == 1);
    CHECK(predicted_gap(2, 2, 2) == 2);
    CHECK(predicted_gap(3, 2, 2) == 2);
    CHECK(predicted_gap(1, 2, 8) == -6);

    CHECK(predicted_lie_dim_mf(2, 1, 2) == 12);
    CHECK(predicted_lie_dim_mf(1, 1, 4) == 7);
}

TEST_CASE("formula consistency on 100 random draws") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = dim(rng), m = dim(rng), r = dim(rng);
        if (n == 1 && m == 1 && r < 4) continue; // no MF formula there
        const long gf = predicted_count_gf(n, m, r);
        const long mf = predicted_count_mf(n, m, r);
        CHECK(predicted_gap(n, m, r) == gf - mf);
        // gap law: N_GF - N_MF = r exactly when r <= n + m
        if (r <= n + m && !(n == 1 && m == 1)) CHECK(gf - mf == r);
        // Lie dimension and count are consistent with the ambient dimension
        const long D = static_cast<long>(r) * (n + m);
        CHECK(predicted_lie_dim_mf(n, m, r) == 2 * D + 1 - mf);
        // Prop 4.2 constructed families realize the full MF count
        if (!(n == 1 && m == 1)) CHECK(constructed_count_mf(n, m, r) == mf);
    }
}

TEST_CASE("balancedness laws annihilate the Euclidean GF fields") {
    for (Architecture arch :
         {Architecture::linear({2, 2, 2}), Architecture::linear({3, 2, 2}),
          Architecture::linear({2, 3, 2, 2})}) {
        ScenarioConfig cfg;
        cfg.arch = arch;
        Scenario sc = build_scenario(cfg);
        auto fams = balancedness_gf_laws(arch, sc.space);
        CHECK(!fams.empty());
        for (const auto& fam : fams)
            for (const auto& f : sc.fields)
                CHECK(gradient_pairing(fam.realization, f).is_zero());
    }
}

TEST_CASE("relu balancedness (with and without bias) annihilates") {
    for (bool bias : {false, true}) {
        ScenarioConfig cfg;
        cfg.arch = Architecture::relu2(2, 2, 2, bias);
        Scenario sc = build_scenario(cfg);
        auto fams = balancedness_gf_laws(cfg.arch, sc.space);
        CHECK(fams.size() == 2); // one per neuron
        for (const auto& fam : fams)
            for (const auto& f : sc.fields)
                CHECK(gradient_pairing(fam.realization, f).is_zero());
    }
}

TEST_CASE("momentum laws annihilate the surrogate heavy-ball system") {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 2});
    cfg.flow = FlowSpec::heavy_ball(Rational(1));
    Scenario sc = build_scenario(cfg);
    auto fams = pca_momentum_laws(cfg.arch, cfg.flow, sc.space);
    CHECK(fams.size() == 1); // r = 2: one elementary skew
    for (const auto& fam : fams)
        for (const auto& f : sc.fields)
            CHECK(gradient_pairing(fam.realization, f).is_zero());
}

TEST_CASE("momentum laws annihilate the cleared Nesterov system") {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 2});
    cfg.flow = FlowSpec::nesterov();
    Scenario sc = build_scenario(cfg);
    auto fams = pca_momentum_laws(cfg.arch, cfg.flow, sc.space);
    CHECK(fams.size() == 1);
    for (const auto& fam : fams) {
        CHECK(fam.realization.total_degree() >= 3); // t^3 factor
        for (const auto& f : sc.fields)
            CHECK(gradient_pairing(fam.realization, f).is_zero());
    }
}

TEST_CASE("extra momentum family appears when n_{i-1} = n_{i+1} = 1") {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({1, 4, 1});
    cfg.flow = FlowSpec::heavy_ball(Rational(1));
    Scenario sc = build_scenario(cfg);
    auto fams = pca_momentum_laws(cfg.arch, cfg.flow, sc.space);
    // r(r-1)/2 main skews plus r(r-1)/2 extra ones
    CHECK(fams.size() == 12);
    bool has_extra = false;
    for (const auto& fam : fams) {
        if (fam.family == "pca_mf_extra_11") has_extra = true;
        for (const auto& f : sc.fields)
            CHECK(gradient_pairing(fam.realization, f).is_zero());
    }
    CHECK(has_extra);
}

TEST_CASE("NMF laws annihilate the mirror GF system") {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 3}); // (n, m, r) = (2, 3, 2)
    cfg.metric.kind = MetricSpec::Kind::MirrorDiag;
    Scenario sc = build_scenario(cfg);
    auto fams = nmf_gf_laws(2, 3, 2, sc.space);
    CHECK(fams.size() == 2);
    for (const auto& fam : fams) {
        CHECK(fam.realization.total_degree() == 1);
        for (const auto& f : sc.fields)
            CHECK(gradient_pairing(fam.realization, f).is_zero());
    }
}

TEST_CASE("ICNN laws annihilate the hybrid GF system") {
    ScenarioConfig cfg;
    cfg.arch = Architecture::relu2(2, 2, 3, true);
    cfg.metric.kind = MetricSpec::Kind::IcnnHybrid;
    Scenario sc = build_scenario(cfg);
    auto fams = icnn_gf_laws(2, 2, 3, sc.space);
    CHECK(fams.size() == 3);
    for (const auto& fam : fams)
        for (const auto& f : sc.fields)
            CHECK(gradient_pairing(fam.realization, f).is_zero());
}

TEST_CASE("closed_form_laws dispatch matches formula_count where complete") {
    ScenarioConfig nmf;
    nmf.arch = Architecture::linear({2, 2, 3});
    nmf.metric.kind = MetricSpec::Kind::MirrorDiag;
    CHECK(closed_form_laws(nmf).size() == 2);
    CHECK(formula_count(nmf) == 2);

    ScenarioConfig relu_mf;
    relu_mf.arch = Architecture::relu2(2, 2, 2, false);
    relu_mf.flow = FlowSpec::heavy_ball(Rational(1));
    CHECK(closed_form_laws(relu_mf).empty());
    CHECK(formula_count(relu_mf) == 0);
}
