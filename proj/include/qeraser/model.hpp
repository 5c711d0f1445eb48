#pragma once

#include <complex>
#include <vector>

namespace qeraser {

using complex = std::complex<double>;

// Parameters of the probe-chain experiment: one resonant cavity mode coupled
// in sequence to N identical two-level probe atoms, each for the same slice
// dt = T/N of the total interaction time T.  The dynamics are evaluated in
// the interaction picture at exact resonance, so the mode frequency carries
// no dynamical weight and is kept for bookkeeping only.
struct ExperimentConfig {
    double g_coupling = 1.0;       // vacuum Rabi coupling, rad/time, > 0
    double total_time = 1.0;       // total probe interaction time T, > 0
    int reservoir_size = 1;        // number of probe atoms N, >= 1
    double mode_frequency = 0.0;   // informational only

    // Rotation angle g*dt accumulated by a single probe atom.
    double per_atom_angle() const;

    // Throws std::invalid_argument unless g > 0, T > 0, N >= 1 and
    // 0 < g*dt <= pi/2 - 1e-8.  The upper bound keeps a small margin, so
    // decimal-truncated boundary inputs (2*pi over 4 atoms) stay invalid.
    void validate() const;
};

// Per-step beam-splitter coefficients of the resonant exchange:
// a = cos(g dt) keeps the excitation in the mode, b = -i sin(g dt) moves it
// onto the atom.  a^2 + |b|^2 = 1.
struct InteractionCoefficients {
    double a = 1.0;
    complex b{0.0, 0.0};
};

// Amplitudes of the global pure state after n probe atoms have crossed the
// mode, written in the one-excitation basis:
//
//   amp_s0_excited : source atom excited, mode empty, all probes ground
//   amp_photon     : excitation in the mode
//   amp_atom[i-1]  : excitation on probe atom i (i = 1..n)
//
// The state is normalized by construction.
struct SingleExcitationState {
    complex amp_s0_excited{0.0, 0.0};
    complex amp_photon{0.0, 0.0};
    std::vector<complex> amp_atom;

    int n_interacted() const { return static_cast<int>(amp_atom.size()); }
    double norm() const;
};

// Coefficients (a, b) for one probe crossing.  Throws on invalid config.
InteractionCoefficients interaction_coefficients(const ExperimentConfig& config);

// Closed-form state after n crossings:
//   amp_s0_excited = 1/sqrt(2), amp_photon = a^n/sqrt(2),
//   amp_atom[i-1] = a^(i-1) b / sqrt(2).
// Throws std::out_of_range unless 0 <= n <= N.
SingleExcitationState closed_form_state(const ExperimentConfig& config, int n);

// Weight of the excitation stored collectively on the probe chain,
// Gamma = sqrt(1 - a^(2n)).  Gamma^2 equals the summed atom branch weights.
double gamma(const ExperimentConfig& config, int n);

}  // namespace qeraser
