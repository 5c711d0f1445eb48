#include "qeraser/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qeraser {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kBoundaryGuard = 1e-8;
}  // namespace

double ExperimentConfig::per_atom_angle() const {
    return g_coupling * total_time / static_cast<double>(reservoir_size);
}

void ExperimentConfig::validate() const {
    if (!(g_coupling > 0.0)) {
        throw std::invalid_argument("ExperimentConfig: coupling must be > 0");
    }
    if (!(total_time > 0.0)) {
        throw std::invalid_argument("ExperimentConfig: total time must be > 0");
    }
    if (reservoir_size < 1) {
        throw std::invalid_argument("ExperimentConfig: reservoir size must be >= 1");
    }
    const double angle = per_atom_angle();
    if (!(angle > 0.0) || angle > kHalfPi - kBoundaryGuard) {
        throw std::invalid_argument(
            "ExperimentConfig: per-atom angle g*T/N = " + std::to_string(angle) +
            " outside (0, pi/2)");
    }
}

double SingleExcitationState::norm() const {
    double s = std::norm(amp_s0_excited) + std::norm(amp_photon);
    for (const complex& c : amp_atom) s += std::norm(c);
    return std::sqrt(s);
}

InteractionCoefficients interaction_coefficients(const ExperimentConfig& config) {
    config.validate();
    const double angle = config.per_atom_angle();
    return {std::cos(angle), complex{0.0, -std::sin(angle)}};
}

namespace {

void check_step_range(const ExperimentConfig& config, int n) {
    if (n < 0 || n > config.reservoir_size) {
        throw std::out_of_range("probe count n = " + std::to_string(n) +
                                " outside [0, N = " +
                                std::to_string(config.reservoir_size) + "]");
    }
}

}  // namespace

SingleExcitationState closed_form_state(const ExperimentConfig& config, int n) {
    check_step_range(config, n);
    const auto [a, b] = interaction_coefficients(config);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    SingleExcitationState state;
    state.amp_s0_excited = inv_sqrt2;
    state.amp_photon = std::pow(a, n) * inv_sqrt2;
    state.amp_atom.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        state.amp_atom.push_back(std::pow(a, i - 1) * b * inv_sqrt2);
    }
    return state;
}

double gamma(const ExperimentConfig& config, int n) {
    check_step_range(config, n);
    const double a = interaction_coefficients(config).a;
    return std::sqrt(std::max(0.0, 1.0 - std::pow(a, 2.0 * n)));
}

}  // namespace qeraser
