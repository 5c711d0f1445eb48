#include "qeraser/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qeraser {

SingleExcitationState apply_probe_atom(const SingleExcitationState& state, double g_dt) {
    if (!(g_dt > 0.0) || !(g_dt < std::numbers::pi / 2.0)) {
        throw std::invalid_argument("apply_probe_atom: g_dt = " + std::to_string(g_dt) +
                                    " outside (0, pi/2)");
    }
    SingleExcitationState next = state;
    next.amp_atom.push_back(complex{0.0, -std::sin(g_dt)} * state.amp_photon);
    next.amp_photon = std::cos(g_dt) * state.amp_photon;
    return next;
}

SingleExcitationState evolve_to(const ExperimentConfig& config, int n) {
    if (n < 0 || n > config.reservoir_size) {
        throw std::out_of_range("evolve_to: n = " + std::to_string(n) +
                                " outside [0, N]");
    }
    SingleExcitationState state = closed_form_state(config, 0);
    const double g_dt = config.per_atom_angle();
    for (int step = 0; step < n; ++step) {
        state = apply_probe_atom(state, g_dt);
    }
    return state;
}

}  // namespace qeraser
