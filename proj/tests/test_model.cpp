#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeraser/model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace qeraser;

namespace {

// High-precision reference values, evaluated independently at 30 digits.
constexpr double kCosPiOver10 = 0.95105651629515357;
constexpr double kSinPiOver10 = 0.30901699437494742;
constexpr double kGamma20 = 0.93040058632779774;  // sqrt(1 - cos(pi/10)^40)
constexpr double kInvSqrt2 = 0.70710678118654752;

ExperimentConfig config_gT_N(double gT, int N) {
    ExperimentConfig c;
    c.g_coupling = 1.0;
    c.total_time = gT;
    c.reservoir_size = N;
    return c;
}

ExperimentConfig random_config(std::mt19937_64& rng, int N) {
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2.0 - 0.05);
    return config_gT_N(angle(rng) * N, N);
}

}  // namespace

TEST_CASE("interaction coefficients at gT = 2pi, N = 20") {
    const auto [a, b] = interaction_coefficients(config_gT_N(2.0 * std::numbers::pi, 20));
    CHECK(a == doctest::Approx(kCosPiOver10).epsilon(1e-15));
    CHECK(b.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(b.imag() == doctest::Approx(-kSinPiOver10).epsilon(1e-15));
}

TEST_CASE("interaction coefficients at the symmetric point g dt = pi/4") {
    const auto [a, b] = interaction_coefficients(config_gT_N(std::numbers::pi / 4.0, 1));
    CHECK(a == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(std::abs(b) == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(a * a + std::norm(b) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("config validation boundaries") {
    CHECK_THROWS_AS(interaction_coefficients(config_gT_N(2.0 * std::numbers::pi, 4)),
                    std::invalid_argument);  // g dt = pi/2 exactly
    CHECK_THROWS_AS(interaction_coefficients(config_gT_N(0.0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(interaction_coefficients(config_gT_N(-1.0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(interaction_coefficients(config_gT_N(1.0, 0)), std::invalid_argument);
    // Arbitrarily small positive angles stay legal.
    CHECK_NOTHROW(interaction_coefficients(config_gT_N(1e-9, 1)));
    // A decimal-truncated 2*pi still lands on the invalid side at N = 4.
    CHECK_THROWS_AS(interaction_coefficients(config_gT_N(6.2831853, 4)),
                    std::invalid_argument);
}

TEST_CASE("closed-form state at n = 0 is the bare entangled pair") {
    const SingleExcitationState s = closed_form_state(config_gT_N(2.0, 5), 0);
    CHECK(s.n_interacted() == 0);
    CHECK(s.amp_s0_excited.real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(s.amp_photon.real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("closed-form state after one pi/4 crossing") {
    const SingleExcitationState s = closed_form_state(config_gT_N(std::numbers::pi / 4.0, 1), 1);
    REQUIRE(s.n_interacted() == 1);
    CHECK(s.amp_s0_excited.real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(s.amp_photon.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.amp_atom[0].real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.amp_atom[0].imag() == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("closed-form state norm and branch decay over random configs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const ExperimentConfig config = random_config(rng, 10);
        const double a = interaction_coefficients(config).a;
        for (int n = 0; n <= 10; ++n) {
            const SingleExcitationState s = closed_form_state(config, n);
            CHECK(std::abs(s.norm() - 1.0) < 1e-12);
            for (int i = 0; i + 1 < n; ++i) {
                // Each deeper branch is damped by exactly one factor of a.
                CHECK(std::abs(s.amp_atom[i + 1]) ==
                      doctest::Approx(a * std::abs(s.amp_atom[i])).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("closed-form state rejects out-of-range n") {
    const ExperimentConfig config = config_gT_N(2.0, 4);
    CHECK_THROWS_AS(closed_form_state(config, -1), std::out_of_range);
    CHECK_THROWS_AS(closed_form_state(config, 5), std::out_of_range);
}

TEST_CASE("gamma values") {
    CHECK(gamma(config_gT_N(1.0, 3), 0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(gamma(config_gT_N(std::numbers::pi / 4.0, 1), 1) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(gamma(config_gT_N(2.0 * std::numbers::pi, 20), 20) ==
          doctest::Approx(kGamma20).epsilon(1e-14));
}

TEST_CASE("gamma squared matches the summed branch weights") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const ExperimentConfig config = random_config(rng, 12);
        const double a = interaction_coefficients(config).a;
        for (int n = 0; n <= 12; ++n) {
            const SingleExcitationState s = closed_form_state(config, n);
            double branch_weight = 0.0;
            for (const complex& c : s.amp_atom) branch_weight += std::norm(c);
            const double g = gamma(config, n);
            CHECK(std::abs(g * g - 2.0 * branch_weight) < 1e-12);  // branches carry 1/2
            CHECK(std::abs(g * g + std::pow(a, 2.0 * n) - 1.0) < 1e-12);
            CHECK(g >= 0.0);
        }
    }
}
