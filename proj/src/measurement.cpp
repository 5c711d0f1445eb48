#include "qeraser/measurement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qeraser {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroProbability = 1e-15;

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

}  // namespace

MeasurementBasis::MeasurementBasis(std::vector<AtomReadout> readouts)
    : readouts_(std::move(readouts)) {
    for (std::size_t idx = 0; idx < readouts_.size(); ++idx) {
        AtomReadout& r = readouts_[idx];
        if (!(r.theta >= 0.0) || !(r.theta <= std::numbers::pi / 2.0)) {
            throw std::invalid_argument("MeasurementBasis: theta[" + std::to_string(idx) +
                                        "] outside [0, pi/2]");
        }
        r.phi = wrap_phase(r.phi);
    }
}

double MeasurementBasis::alpha(int idx) const {
    return std::cos(readouts_.at(static_cast<std::size_t>(idx)).theta);
}

complex MeasurementBasis::beta(int idx) const {
    const AtomReadout& r = readouts_.at(static_cast<std::size_t>(idx));
    return std::polar(std::sin(r.theta), r.phi);
}

AtomReadout MeasurementBasis::orthogonal(int idx) const {
    const AtomReadout& r = readouts_.at(static_cast<std::size_t>(idx));
    return {std::numbers::pi / 2.0 - r.theta, wrap_phase(r.phi + std::numbers::pi)};
}

double single_atom_visibility(const ExperimentConfig& config, int n, int i,
                              double theta, double /*phi*/) {
    // Contrast depends on the readout tilt only; the azimuth rotates the
    // fringe pattern without changing its amplitude.
    const double d_atom = distinguishability_s0_atom(config, n, i);
    const double alpha_sq = std::cos(theta) * std::cos(theta);
    const double beta_sq = std::sin(theta) * std::sin(theta);
    const double norm_sq = alpha_sq * (2.0 - d_atom) + beta_sq * d_atom;
    if (norm_sq <= 0.0) {
        throw std::domain_error("single_atom_visibility: degenerate outcome normalization");
    }
    return 2.0 * std::sqrt(alpha_sq * beta_sq * d_atom) / norm_sq;
}

ProjectionResult project_all(const SingleExcitationState& state,
                             const MeasurementBasis& basis) {
    const int n = state.n_interacted();
    if (basis.size() != n) {
        throw std::invalid_argument("project_all: basis covers " +
                                    std::to_string(basis.size()) + " atoms, state has " +
                                    std::to_string(n));
    }

    // <readout|branch> products, with prefix/suffix alphas so the atom-branch
    // sum stays O(n).
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 1.0);
    std::vector<double> suffix(static_cast<std::size_t>(n) + 1, 1.0);
    for (int i = 0; i < n; ++i) {
        prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] * basis.alpha(i);
    }
    for (int i = n - 1; i >= 0; --i) {
        suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] * basis.alpha(i);
    }
    const double all_alpha = prefix[static_cast<std::size_t>(n)];

    ProjectionResult result;
    result.amp_g_photon = state.amp_photon * all_alpha;
    result.amp_e_vac = state.amp_s0_excited * all_alpha;
    complex absorbed{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double others = prefix[static_cast<std::size_t>(i)] * suffix[static_cast<std::size_t>(i) + 1];
        absorbed += state.amp_atom[static_cast<std::size_t>(i)] * std::conj(basis.beta(i)) * others;
    }
    result.amp_g_vac = absorbed;

    result.norm_sq = std::norm(result.amp_g_photon) + std::norm(result.amp_g_vac) +
                     std::norm(result.amp_e_vac);
    if (result.norm_sq <= kZeroProbability) {
        throw std::invalid_argument("project_all: outcome probability vanishes");
    }
    result.probability = result.norm_sq;
    result.report = complementarity_report(result.amp_g_photon, result.amp_g_vac,
                                           result.amp_e_vac);
    return result;
}

double signed_predictability(const ProjectionResult& result) {
    return (std::norm(result.amp_e_vac) - std::norm(result.amp_g_photon) -
            std::norm(result.amp_g_vac)) /
           result.norm_sq;
}

}  // namespace qeraser
