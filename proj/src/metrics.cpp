#include "qeraser/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qeraser {

namespace {

void check_range_n(const ExperimentConfig& config, int n) {
    if (n < 0 || n > config.reservoir_size) {
        throw std::out_of_range("metrics: n = " + std::to_string(n) + " outside [0, N]");
    }
}

void check_range_atom(const ExperimentConfig& config, int n, int i) {
    check_range_n(config, n);
    if (i < 1 || i > n) {
        throw std::out_of_range("metrics: atom index i = " + std::to_string(i) +
                                " outside [1, n = " + std::to_string(n) + "]");
    }
}

}  // namespace

double distinguishability_s0_field(const ExperimentConfig& config, int n) {
    check_range_n(config, n);
    return std::pow(interaction_coefficients(config).a, 2.0 * n);
}

double distinguishability_s0_atom(const ExperimentConfig& config, int n, int i) {
    check_range_atom(config, n, i);
    const auto [a, b] = interaction_coefficients(config);
    return std::pow(a, 2.0 * (i - 1)) * std::norm(b);
}

double total_distinguishability(const ExperimentConfig& config, int n) {
    check_range_n(config, n);
    double total = distinguishability_s0_field(config, n);
    for (int i = 1; i <= n; ++i) {
        total += distinguishability_s0_atom(config, n, i);
    }
    return total;
}

double concurrence_s0_field(const ExperimentConfig& config, int n) {
    check_range_n(config, n);
    return std::pow(interaction_coefficients(config).a, n);
}

double concurrence_s0_atom(const ExperimentConfig& config, int n, int i) {
    check_range_atom(config, n, i);
    const auto [a, b] = interaction_coefficients(config);
    return std::pow(a, i - 1) * std::abs(b);
}

std::pair<double, double> pre_measurement_visibility_predictability(
    const ExperimentConfig& config, int n) {
    check_range_n(config, n);
    // Every branch of the chain state carries an orthogonal environment
    // marker, so the source's off-diagonal element is exactly zero and its
    // populations stay balanced at 1/2.
    return {0.0, 0.0};
}

double k_sigma(const ExperimentConfig& config, int n, int i, double theta) {
    return distinguishability_s0_atom(config, n, i) * std::abs(std::cos(2.0 * theta));
}

ComplementarityReport complementarity_report(complex amp_g_photon,
                                             complex amp_g_vac,
                                             complex amp_e_vac) {
    const double wa = std::norm(amp_g_photon);
    const double wb = std::norm(amp_g_vac);
    const double wc = std::norm(amp_e_vac);
    const double norm_sq = wa + wb + wc;
    if (norm_sq <= 0.0) {
        throw std::invalid_argument("complementarity_report: zero-norm amplitude triple");
    }
    ComplementarityReport report;
    report.visibility = 2.0 * std::sqrt(wb * wc) / norm_sq;
    report.concurrence_s0_field = 2.0 * std::sqrt(wa * wc) / norm_sq;
    report.predictability = std::abs(wc - wa - wb) / norm_sq;
    report.relation_residual = report.concurrence_s0_field * report.concurrence_s0_field +
                               report.visibility * report.visibility +
                               report.predictability * report.predictability - 1.0;
    return report;
}

double delta_d_total(double v) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
        throw std::invalid_argument("delta_d_total: visibility " + std::to_string(v) +
                                    " outside [0, 1]");
    }
    return std::sqrt(1.0 - v * v) - 1.0;
}

double delta_d_field(const ExperimentConfig& config, int n, double v) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
        throw std::invalid_argument("delta_d_field: visibility " + std::to_string(v) +
                                    " outside [0, 1]");
    }
    return std::sqrt(1.0 - v * v) - distinguishability_s0_field(config, n);
}

}  // namespace qeraser
