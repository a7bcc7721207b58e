#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <json.hpp>

#include "gft/experiments.hpp"
#include "gft/report.hpp"
#include "gft/schwarzian.hpp"
#include "gft/series.hpp"

using namespace gft;

TEST_CASE("slit family coefficients match the binomial expansion") {
    const TruncatedSeries f = extremal_fk({0.25, 1.0}, 12);
    CHECK(std::abs(f[1] - 1.0) < 1e-15);
    CHECK(std::abs(f[2] - 0.5) < 1e-15);
    CHECK(std::abs(f[3] - 0.1875) < 1e-15);
    for (int n = 1; n <= 12; ++n)
        CHECK(std::abs(f[n] - double(n) * std::pow(0.25, n - 1)) < 1e-12);

    const cplx t = std::polar(1.0, 2.1);
    const TruncatedSeries g = extremal_fk({0.7, t}, 24);
    cplx pw = 1.0;
    for (int n = 1; n <= 24; ++n) {
        CHECK(std::abs(g[n] - double(n) * pw) < 1e-12);
        pw *= t * 0.7;
    }
    CHECK(std::abs(g[2]) == doctest::Approx(2.0 * 0.7).epsilon(1e-14));
}

TEST_CASE("slit family parameter validation") {
    CHECK_THROWS_AS(extremal_fk({1.0, 1.0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(extremal_fk({-0.1, 1.0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(extremal_fk({0.5, cplx(1.0, 1e-5)}, 8), std::invalid_argument);
    CHECK_THROWS_AS(extremal_fk({0.5, 1.0}, 0), std::invalid_argument);
    const TruncatedSeries id = extremal_fk({0.0, 1.0}, 8);
    for (int n = 2; n <= 8; ++n)
        CHECK(std::abs(id[n]) == 0.0);
}

TEST_CASE("slit family Schwarzian matches its closed form") {
    // S = -6 s^2 / (1 - (s z)^2)^2, s = t k
    const double k = 0.35;
    const cplx t = std::polar(1.0, -0.8);
    const cplx s = t * k;
    const TruncatedSeries S = schwarzian(extremal_fk({k, t}, 40)).phi;
    for (int j = 0; j <= S.order(); ++j) {
        cplx want = 0.0;
        if (j % 2 == 0)
            want = -6.0 * (double(j) / 2.0 + 1.0) * std::pow(s, j + 2);
        CHECK(std::abs(S[j] - want) < 1e-10);
    }
}

TEST_CASE("extension field has modulus k and averages out") {
    CHECK(std::abs(mu0_field(0.3, 2.0) - 0.3) < 1e-15);
    for (int j = 0; j < 64; ++j) {
        const cplx z = std::polar(1.7, 0.13 + j * 0.37);
        CHECK(std::abs(std::abs(mu0_field(0.45, z)) - 0.45) < 1e-14);
    }
    // z = 2i: |z|^3/z^3 = 8 / (-8i) = i
    CHECK(std::abs(mu0_field(0.5, cplx(0.0, 2.0)) - cplx(0.0, 0.5)) < 1e-15);

    cplx acc = 0.0;
    for (int j = 0; j < 256; ++j)
        acc += mu0_field(0.4, std::polar(2.0, 2.0 * std::numbers::pi * j / 256.0));
    CHECK(std::abs(acc) / 256.0 < 1e-14);

    CHECK_THROWS_AS(mu0_field(0.3, cplx(0.5, 0.0)), std::domain_error);
    CHECK_THROWS_AS(mu0_field(0.3, cplx(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(mu0_field(-0.1, cplx(2.0, 0.0)), std::domain_error);
}

TEST_CASE("sampled differentials hit the requested norm deterministically") {
    const QuadDifferential a = sample_schwarzian(0.5, 6, 7);
    CHECK(a.phi.order() == 6);
    const double measured = bnorm(a.phi);
    CHECK(measured >= 0.495);
    CHECK(measured <= 0.505);

    const QuadDifferential b = sample_schwarzian(0.5, 6, 7);
    for (int j = 0; j <= 6; ++j)
        CHECK(a.phi[j] == b.phi[j]);

    const QuadDifferential c = sample_schwarzian(0.5, 6, 8);
    bool differs = false;
    for (int j = 0; j <= 6; ++j)
        if (a.phi[j] != c.phi[j]) differs = true;
    CHECK(differs);

    const QuadDifferential zero = sample_schwarzian(0.0, 6, 7);
    for (int j = 0; j <= 6; ++j)
        CHECK(std::abs(zero.phi[j]) == 0.0);

    CHECK_THROWS_AS(sample_schwarzian(-0.1, 6, 7), std::invalid_argument);
    CHECK_THROWS_AS(sample_schwarzian(0.5, -1, 7), std::invalid_argument);
}

TEST_CASE("zero-dilatation experiment certifies every trial") {
    RunConfig cfg;
    cfg.series_order = 64;
    const ExperimentReport rep = theorem1_experiment(0.0, 5, 11, cfg);
    REQUIRE(int(rep.per_trial.size()) == 5);
    for (const TrialRecord& tr : rep.per_trial) {
        CHECK(tr.error.empty());
        CHECK(tr.phi_norm == 0.0);
        CHECK(tr.a2_modulus == 0.0);
        REQUIRE(tr.certificate);
        CHECK(tr.certificate->overall == "certified");
    }
    CHECK(rep.aggregates.fraction_certified == 1.0);
    CHECK(rep.aggregates.fraction_netanyahu_pass == 1.0);
    CHECK(rep.aggregates.fraction_a2_le_half == 1.0);
    CHECK(rep.aggregates.all_a2_within_2k);
    CHECK(rep.aggregates.errored == 0);
    CHECK(rep.aggregates.max_solver_residual < 1e-12);
}

TEST_CASE("quarter-dilatation experiment is reproducible bit for bit") {
    RunConfig cfg;
    const ExperimentReport rep = theorem1_experiment(0.25, 200, 1, cfg);
    const ExperimentReport rerun = theorem1_experiment(0.25, 200, 1, cfg);
    const std::string j1 = rep.to_json();
    const std::string j2 = rerun.to_json();
    CHECK(j1 == j2);
    CHECK(verify_report_hash(j1));

    CHECK(rep.aggregates.errored == 0);
    CHECK(rep.aggregates.max_solver_residual < 1e-8);
    // every sampled norm sits inside [0, 2k], so the ceiling does too
    CHECK(rep.aggregates.fraction_a2_le_half == 1.0);
    CHECK(rep.aggregates.all_a2_within_2k);
    CHECK(rep.aggregates.fraction_netanyahu_pass == 1.0);
    CHECK(rep.aggregates.fraction_lemma2_pass == 1.0);

    for (const TrialRecord& tr : rep.per_trial) {
        CHECK(tr.target_norm <= 0.5);
        CHECK(std::abs(tr.phi_norm - tr.target_norm) < 1e-9);
        REQUIRE(tr.solver_residual);
        CHECK(*tr.solver_residual < 1e-8);
        REQUIRE(tr.certificate);
        // no certified trial may violate the necessary bound
        if (tr.certificate->overall == "certified")
            CHECK(tr.a2_modulus <= 4.0 / 3.0 + 1e-3);
    }

    const auto doc = nlohmann::ordered_json::parse(j1);
    CHECK(doc["trials"] == 200);
    CHECK(doc["per_trial"].size() == 200);
    CHECK(doc["distribution"] == "complex-gaussian-polynomial");
    CHECK(doc["aggregates"].contains("fraction_certified"));
}

TEST_CASE("golden aggregate fractions at dilatation 0.6") {
    RunConfig cfg;
    const ExperimentReport rep = theorem1_experiment(0.6, 200, 1, cfg);
    CHECK(rep.aggregates.errored == 0);
    CHECK(rep.aggregates.all_a2_within_2k);
    // frozen from the first run of this configuration; the draw sequence is
    // fixed by (seed, trial index) so this is stable across platforms
    CHECK(rep.aggregates.fraction_a2_le_half == doctest::Approx(0.41).epsilon(1e-12));
    CHECK(rep.aggregates.fraction_a2_le_half < 1.0);
    CHECK(rep.aggregates.fraction_netanyahu_pass == 1.0);

    // Netanyahu consistency across every emitted certificate
    for (const TrialRecord& tr : rep.per_trial) {
        if (tr.certificate && tr.certificate->overall == "certified")
            CHECK(tr.a2_modulus <= 4.0 / 3.0 + 1e-3);
    }
}

TEST_CASE("experiment input validation") {
    CHECK_THROWS_AS(theorem1_experiment(1.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_experiment(-0.2, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_experiment(0.25, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_experiment(1.0), std::invalid_argument);
}

TEST_CASE("covering experiment at small dilatation") {
    RunConfig cfg;
    cfg.series_order = 256;
    const ClaimReport rep = theorem2_experiment(0.05, cfg);
    double min_ext = 0.0, min_all = 0.0;
    for (const auto& [key, v] : rep.computed) {
        if (key == "min_covering_extremal") min_ext = v;
        if (key == "min_covering") min_all = v;
    }
    CHECK(min_ext == doctest::Approx(1.0 / (1.05 * 1.05)).epsilon(1e-4));
    CHECK(min_all <= min_ext);
    CHECK(rep.verdict == "fail"); // 0.907 < 1, recorded as measured
    CHECK(verify_report_hash(rep.to_json()));
}

TEST_CASE("covering experiment at the quarter dilatation") {
    RunConfig cfg;
    cfg.series_order = 256;
    const ClaimReport rep = theorem2_experiment(0.25, cfg);
    double min_ext = 0.0;
    for (const auto& [key, v] : rep.computed)
        if (key == "min_covering_extremal") min_ext = v;
    CHECK(min_ext == doctest::Approx(0.64).epsilon(1e-3));
    CHECK(rep.verdict == "fail");
}

TEST_CASE("covering experiment at zero dilatation passes") {
    RunConfig cfg;
    cfg.series_order = 64;
    const ClaimReport rep = theorem2_experiment(0.0, cfg);
    for (const auto& [key, v] : rep.computed) {
        if (key == "min_covering")
            CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(rep.verdict == "pass");
}
