#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeraser/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace qeraser;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;
constexpr double kPhoton20 = 0.25918598434414830;  // cos(pi/10)^20 / sqrt(2)

ExperimentConfig config_gT_N(double gT, int N) {
    ExperimentConfig c;
    c.g_coupling = 1.0;
    c.total_time = gT;
    c.reservoir_size = N;
    return c;
}

}  // namespace

TEST_CASE("one pi/4 crossing rotates the photon branch") {
    const SingleExcitationState initial = closed_form_state(config_gT_N(1.0, 4), 0);
    const SingleExcitationState after = apply_probe_atom(initial, std::numbers::pi / 4.0);
    REQUIRE(after.n_interacted() == 1);
    CHECK(after.amp_s0_excited.real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(after.amp_photon.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(after.amp_atom[0].imag() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::abs(after.norm() - 1.0) < 1e-12);
}

TEST_CASE("crossing an empty mode only appends a zero branch") {
    SingleExcitationState state;
    state.amp_s0_excited = 1.0;
    state.amp_photon = 0.0;
    const SingleExcitationState after = apply_probe_atom(state, 0.3);
    CHECK(after.amp_s0_excited == state.amp_s0_excited);
    CHECK(std::abs(after.amp_photon) == 0.0);
    REQUIRE(after.n_interacted() == 1);
    CHECK(std::abs(after.amp_atom[0]) == 0.0);
}

TEST_CASE("crossing angle bounds") {
    const SingleExcitationState s = closed_form_state(config_gT_N(1.0, 4), 0);
    CHECK_THROWS_AS(apply_probe_atom(s, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(apply_probe_atom(s, std::numbers::pi / 2.0), std::invalid_argument);
    CHECK_THROWS_AS(apply_probe_atom(s, -0.5), std::invalid_argument);
}

TEST_CASE("stepwise evolution reproduces the closed form") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2.0 - 0.05);
    for (int trial = 0; trial < 80; ++trial) {
        const int N = 5;
        const ExperimentConfig config = config_gT_N(angle(rng) * N, N);
        for (int n = 0; n <= N; ++n) {
            const SingleExcitationState stepped = evolve_to(config, n);
            const SingleExcitationState closed = closed_form_state(config, n);
            CHECK(std::abs(stepped.amp_s0_excited - closed.amp_s0_excited) < 1e-12);
            CHECK(std::abs(stepped.amp_photon - closed.amp_photon) < 1e-12);
            REQUIRE(stepped.n_interacted() == n);
            for (int i = 0; i < n; ++i) {
                CHECK(std::abs(stepped.amp_atom[i] - closed.amp_atom[i]) < 1e-12);
            }
            CHECK(std::abs(stepped.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("full chain at gT = 2pi, N = 20") {
    const SingleExcitationState s = evolve_to(config_gT_N(2.0 * std::numbers::pi, 20), 20);
    CHECK(s.amp_photon.real() == doctest::Approx(kPhoton20).epsilon(1e-13));
    CHECK(s.amp_photon.imag() == 0.0);
}

TEST_CASE("evolve_to range checks") {
    const ExperimentConfig config = config_gT_N(2.0, 4);
    CHECK_THROWS_AS(evolve_to(config, -1), std::out_of_range);
    CHECK_THROWS_AS(evolve_to(config, 5), std::out_of_range);
    CHECK(evolve_to(config, 0).n_interacted() == 0);
}
