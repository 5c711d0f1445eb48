#pragma once

#include "qeraser/model.hpp"
#include "qeraser/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qeraser {

// Bridges between the closed-form chain state and the dense register, plus
// the randomized closed-form-vs-brute-force comparison suite behind the
// `verify` command.

// Embeds the one-excitation amplitudes into the full register basis.
oracle::DenseState embed(const SingleExcitationState& state);

// build_initial followed by n resonant crossings of dt = T/N.
oracle::DenseState evolve_dense(const ExperimentConfig& config, int n);

struct CrosscheckOptions {
    int max_n = 8;         // largest chain length exercised, <= 12
    int trials = 50;       // random configurations
    std::uint64_t seed = 1;
};

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Runs every comparison and reports one line per check.  Deterministic for a
// fixed option set.
std::vector<CheckResult> run_crosschecks(const CrosscheckOptions& options);

}  // namespace qeraser
