#pragma once

#include "qeraser/model.hpp"

#include <utility>

namespace qeraser {

// Interference-vs-path bookkeeping of a two-qubit pure state written on the
// branch basis {|g,1>, |g,0>, |e,0>}: fringe contrast (visibility), branch
// bias (predictability, reported as a magnitude) and source-field
// entanglement (concurrence).  For any pure input the three satisfy
// C^2 + V^2 + P^2 = 1; relation_residual records the numerical defect.
struct ComplementarityReport {
    double concurrence_s0_field = 0.0;
    double visibility = 0.0;
    double predictability = 0.0;
    double relation_residual = 0.0;
};

// Path information readable from the mode alone: a^(2n).
double distinguishability_s0_field(const ExperimentConfig& config, int n);

// Path information readable from probe atom i alone: |a^(i-1) b|^2.
// Requires 1 <= i <= n.
double distinguishability_s0_atom(const ExperimentConfig& config, int n, int i);

// Mode plus per-atom shares; identically 1 (the probes only redistribute
// path information, they never destroy it).
double total_distinguishability(const ExperimentConfig& config, int n);

// Pairwise source-mode concurrence a^n and source-atom concurrence
// |a^(i-1) b|.  Squares coincide with the matching distinguishabilities.
double concurrence_s0_field(const ExperimentConfig& config, int n);
double concurrence_s0_atom(const ExperimentConfig& config, int n, int i);

// Fringe contrast and branch bias of the source before any probe readout:
// both vanish identically for every n.
std::pair<double, double> pre_measurement_visibility_predictability(
    const ExperimentConfig& config, int n);

// Path knowledge extractable by measuring probe atom i along the Bloch
// direction tilted by theta: |a^(i-1) b|^2 |cos 2theta|.  Peaks at the
// bare-basis readout (theta = 0 or pi/2) and dies at theta = pi/4.
double k_sigma(const ExperimentConfig& config, int n, int i, double theta);

// Report for the (unnormalized) two-qubit amplitudes
//   amp_g_photon |g,1> + amp_g_vac |g,0> + amp_e_vac |e,0>.
// Throws std::invalid_argument on an all-zero triple.
ComplementarityReport complementarity_report(complex amp_g_photon,
                                             complex amp_g_vac,
                                             complex amp_e_vac);

// Change of the globally available path information caused by a probe
// readout of visibility v: sqrt(1 - v^2) - 1.  Never positive.
double delta_d_total(double v);

// Change of the path information held by the source+mode pair:
// sqrt(1 - v^2) - a^(2n).
double delta_d_field(const ExperimentConfig& config, int n, double v);

}  // namespace qeraser
