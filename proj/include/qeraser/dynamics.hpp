#pragma once

#include "qeraser/model.hpp"

namespace qeraser {

// One resonant crossing: rotates the photon branch into a fresh atom branch,
//   amp_photon -> cos(g_dt) * amp_photon,
//   new atom   -> -i sin(g_dt) * amp_photon,
// leaving every existing branch untouched.  Requires 0 < g_dt < pi/2.
SingleExcitationState apply_probe_atom(const SingleExcitationState& state, double g_dt);

// n successive crossings of dt = T/N starting from the bare entangled pair.
// Equals closed_form_state(config, n) componentwise.
SingleExcitationState evolve_to(const ExperimentConfig& config, int n);

}  // namespace qeraser
