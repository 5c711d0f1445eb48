#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeraser/metrics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace qeraser;

namespace {

// Independent 30-digit evaluations, frozen.
constexpr double kA40 = 0.13435474896089018;         // cos(pi/10)^40
constexpr double kA20 = 0.36654433423651521;         // cos(pi/10)^20
constexpr double kAtom2Share = 0.086372875703131572; // cos(pi/10)^2 sin(pi/10)^2
constexpr double kInvSqrt2 = 0.70710678118654752;
constexpr double kDeltaTotalAtOptimum = -0.42264973081037424;  // 1/sqrt(3) - 1
constexpr double kDeltaFieldAtOptimum = 0.07735026918962576;   // 1/sqrt(3) - 1/2
constexpr double kOptimalVisibility = 0.81649658092772603;     // sqrt(6)/3

ExperimentConfig config_gT_N(double gT, int N) {
    ExperimentConfig c;
    c.g_coupling = 1.0;
    c.total_time = gT;
    c.reservoir_size = N;
    return c;
}

ExperimentConfig quarter_turn() { return config_gT_N(std::numbers::pi / 4.0, 1); }

ExperimentConfig random_config(std::mt19937_64& rng, int N) {
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2.0 - 0.05);
    return config_gT_N(angle(rng) * N, N);
}

}  // namespace

TEST_CASE("mode distinguishability") {
    CHECK(distinguishability_s0_field(config_gT_N(1.0, 5), 0) == 1.0);
    CHECK(distinguishability_s0_field(quarter_turn(), 1) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(distinguishability_s0_field(config_gT_N(2.0 * std::numbers::pi, 20), 20) ==
          doctest::Approx(kA40).epsilon(1e-14));
}

TEST_CASE("per-atom distinguishability") {
    CHECK(distinguishability_s0_atom(quarter_turn(), 1, 1) ==
          doctest::Approx(0.5).epsilon(1e-15));
    const ExperimentConfig fig = config_gT_N(2.0 * std::numbers::pi, 20);
    CHECK(distinguishability_s0_atom(fig, 20, 2) ==
          doctest::Approx(kAtom2Share).epsilon(1e-14));
    CHECK_THROWS_AS(distinguishability_s0_atom(fig, 5, 6), std::out_of_range);
    CHECK_THROWS_AS(distinguishability_s0_atom(fig, 5, 0), std::out_of_range);
}

TEST_CASE("path information is conserved") {
    CHECK(total_distinguishability(config_gT_N(1.0, 5), 0) == doctest::Approx(1.0));
    CHECK(total_distinguishability(quarter_turn(), 1) == doctest::Approx(1.0).epsilon(1e-15));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const ExperimentConfig config = random_config(rng, 20);
        for (int n = 0; n <= 20; ++n) {
            CHECK(std::abs(total_distinguishability(config, n) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("mode distinguishability decays strictly with chain length") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const ExperimentConfig config = random_config(rng, 12);
        for (int n = 1; n <= 12; ++n) {
            CHECK(distinguishability_s0_field(config, n) <
                  distinguishability_s0_field(config, n - 1));
        }
    }
}

TEST_CASE("pairwise concurrences") {
    CHECK(concurrence_s0_field(config_gT_N(1.0, 5), 0) == 1.0);
    CHECK(concurrence_s0_atom(quarter_turn(), 1, 1) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(concurrence_s0_field(config_gT_N(2.0 * std::numbers::pi, 20), 20) ==
          doctest::Approx(kA20).epsilon(1e-14));

    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const ExperimentConfig config = random_config(rng, 8);
        for (int n = 0; n <= 8; ++n) {
            const double c_field = concurrence_s0_field(config, n);
            CHECK(std::abs(c_field * c_field - distinguishability_s0_field(config, n)) < 1e-13);
            for (int i = 1; i <= n; ++i) {
                const double c_atom = concurrence_s0_atom(config, n, i);
                CHECK(std::abs(c_atom * c_atom -
                               distinguishability_s0_atom(config, n, i)) < 1e-13);
            }
        }
    }
}

TEST_CASE("multi-qubit relation before any readout") {
    // Squared pairwise concurrences alone saturate the unit budget: the
    // source shows no fringe contrast and no branch bias at any n.
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const ExperimentConfig config = random_config(rng, 10);
        for (int n = 0; n <= 10; ++n) {
            const auto [v, p] = pre_measurement_visibility_predictability(config, n);
            CHECK(v == 0.0);
            CHECK(p == 0.0);
            double budget = std::pow(concurrence_s0_field(config, n), 2) + v * v + p * p;
            for (int i = 1; i <= n; ++i) {
                budget += std::pow(concurrence_s0_atom(config, n, i), 2);
            }
            CHECK(std::abs(budget - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("readout information bound k_sigma") {
    CHECK(k_sigma(quarter_turn(), 1, 1, std::numbers::pi / 4.0) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(k_sigma(quarter_turn(), 1, 1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(k_sigma(quarter_turn(), 1, 1, std::numbers::pi / 3.0) ==
          doctest::Approx(0.25).epsilon(1e-14));

    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> tilt(0.0, std::numbers::pi / 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const ExperimentConfig config = random_config(rng, 6);
        for (int i = 1; i <= 6; ++i) {
            const double d_atom = distinguishability_s0_atom(config, 6, i);
            for (int probe = 0; probe < 20; ++probe) {
                CHECK(k_sigma(config, 6, i, tilt(rng)) <= d_atom + 1e-12);
            }
            CHECK(std::abs(k_sigma(config, 6, i, 0.0) - d_atom) < 1e-12);
            CHECK(std::abs(k_sigma(config, 6, i, std::numbers::pi / 2.0) - d_atom) < 1e-12);
        }
    }
}

TEST_CASE("complementarity report on definite branches") {
    const ComplementarityReport product = complementarity_report({0.1, 0.0}, {0.0, 0.0},
                                                                 {0.7, 0.0});
    CHECK(product.visibility == 0.0);
    CHECK(product.predictability > 0.0);

    const ComplementarityReport definite = complementarity_report({1.0, 0.0}, {0.0, 0.0},
                                                                  {0.0, 0.0});
    CHECK(definite.visibility == 0.0);
    CHECK(definite.concurrence_s0_field == 0.0);
    CHECK(definite.predictability == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("complementarity report for the erased pi/4 outcome") {
    const ComplementarityReport r = complementarity_report(
        {0.35355339059327376, 0.0}, {0.0, -0.35355339059327376}, {0.5, 0.0});
    CHECK(r.visibility == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(r.concurrence_s0_field == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(r.predictability == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(r.relation_residual) < 1e-12);
}

TEST_CASE("complementarity report identity over random triples") {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> coords(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const complex a{coords(rng), coords(rng)};
        const complex b{coords(rng), coords(rng)};
        const complex c{coords(rng), coords(rng)};
        if (std::norm(a) + std::norm(b) + std::norm(c) == 0.0) continue;
        CHECK(std::abs(complementarity_report(a, b, c).relation_residual) < 1e-12);
    }
    CHECK_THROWS_AS(complementarity_report({0, 0}, {0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("path-information changes of a readout") {
    CHECK(delta_d_total(0.0) == doctest::Approx(0.0));
    CHECK(delta_d_total(std::sqrt(2.0 / 3.0)) ==
          doctest::Approx(kDeltaTotalAtOptimum).epsilon(1e-14));
    CHECK(delta_d_field(quarter_turn(), 1, kOptimalVisibility) ==
          doctest::Approx(kDeltaFieldAtOptimum).epsilon(1e-14));
    CHECK_THROWS_AS(delta_d_total(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(delta_d_total(1.1), std::invalid_argument);

    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> vis(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        CHECK(delta_d_total(vis(rng)) <= 0.0);
    }
}
