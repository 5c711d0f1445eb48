#pragma once

#include "qeraser/metrics.hpp"
#include "qeraser/model.hpp"

#include <vector>

namespace qeraser {

// Readout direction for one probe atom.  The detected state is
//   cos(theta)|g> + e^{i phi} sin(theta)|e>
// with theta in [0, pi/2] (ground amplitude kept real nonnegative, fixing
// the global phase) and phi stored reduced to [0, 2pi).
struct AtomReadout {
    double theta = 0.0;
    double phi = 0.0;
};

// Product readout basis, one direction per interacted probe atom.
class MeasurementBasis {
public:
    MeasurementBasis() = default;
    explicit MeasurementBasis(std::vector<AtomReadout> readouts);

    int size() const { return static_cast<int>(readouts_.size()); }
    const std::vector<AtomReadout>& readouts() const { return readouts_; }

    // Ground/excited amplitudes of readout index idx (0-based).
    double alpha(int idx) const;
    complex beta(int idx) const;

    // Direction orthogonal to readout idx, expressed in the same
    // parameterization: (pi/2 - theta, phi + pi).
    AtomReadout orthogonal(int idx) const;

private:
    std::vector<AtomReadout> readouts_;
};

// Amplitudes of the source+mode pair conditioned on detecting every probe
// atom along its readout direction, on the branch basis
// {|g,1>, |g,0>, |e,0>}, before renormalization.
struct ProjectionResult {
    complex amp_g_photon{0.0, 0.0};  // source ground, photon kept
    complex amp_g_vac{0.0, 0.0};     // source ground, excitation absorbed by probes
    complex amp_e_vac{0.0, 0.0};     // source excited
    double norm_sq = 0.0;            // |A|^2 + |B|^2 + |C|^2
    double probability = 0.0;        // Born weight of this outcome
    ComplementarityReport report;
};

// Fringe contrast of the source after reading out only probe atom i
// (1 <= i <= n) and tracing over the rest of the chain.  Independent of phi.
double single_atom_visibility(const ExperimentConfig& config, int n, int i,
                              double theta, double phi);

// Projects every probe atom of `state` onto its readout direction and
// reports the conditional source+mode amplitudes and their complementarity
// quantities.  Overlaps are taken as conjugated inner products against each
// branch, which stays finite for which-way readouts (theta = pi/2) where
// ratio-style rearrangements blow up.  Throws std::invalid_argument when the
// basis size mismatches the state or the outcome probability vanishes.
ProjectionResult project_all(const SingleExcitationState& state,
                             const MeasurementBasis& basis);

// Signed population imbalance (excited minus ground) of the conditional
// source state; the magnitude is the reported predictability.
double signed_predictability(const ProjectionResult& result);

}  // namespace qeraser
