#include "qeraser/crosscheck.hpp"

#include "qeraser/dynamics.hpp"
#include "qeraser/measurement.hpp"
#include "qeraser/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qeraser {

oracle::DenseState embed(const SingleExcitationState& state) {
    oracle::DenseState dense(state.n_interacted());
    dense[std::size_t{1} << dense.mode_bit()] = state.amp_photon;
    dense[std::size_t{1} << dense.source_bit()] = state.amp_s0_excited;
    for (int i = 1; i <= state.n_interacted(); ++i) {
        dense[std::size_t{1} << dense.atom_bit(i)] =
            state.amp_atom[static_cast<std::size_t>(i - 1)];
    }
    return dense;
}

oracle::DenseState evolve_dense(const ExperimentConfig& config, int n) {
    if (n < 0 || n > config.reservoir_size) {
        throw std::out_of_range("evolve_dense: n outside [0, N]");
    }
    oracle::DenseState state = oracle::build_initial(n);
    const double g_dt = config.per_atom_angle();
    for (int k = 1; k <= n; ++k) {
        state = oracle::jc_apply(state, k, g_dt);
    }
    return state;
}

namespace {

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    void record(const std::string& name, double residual, double tolerance) {
        for (CheckResult& check : out_) {
            if (check.name == name) {
                check.max_residual = std::max(check.max_residual, residual);
                check.passed = check.max_residual <= check.tolerance;
                return;
            }
        }
        out_.push_back({name, residual, tolerance, residual <= tolerance});
    }

private:
    std::vector<CheckResult>& out_;
};

std::vector<int> all_atoms(int n) {
    std::vector<int> atoms(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) atoms[static_cast<std::size_t>(i - 1)] = i;
    return atoms;
}

MeasurementBasis random_basis(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> tilt(0.05, std::numbers::pi / 2.0 - 0.05);
    std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);
    std::vector<AtomReadout> readouts(static_cast<std::size_t>(n));
    for (AtomReadout& r : readouts) {
        r.theta = tilt(rng);
        r.phi = azimuth(rng);
    }
    return MeasurementBasis(std::move(readouts));
}

}  // namespace

std::vector<CheckResult> run_crosschecks(const CrosscheckOptions& options) {
    if (options.max_n < 1 || options.max_n > 12) {
        throw std::invalid_argument("crosscheck: max_n outside [1, 12]");
    }
    if (options.trials < 1) {
        throw std::invalid_argument("crosscheck: trials must be >= 1");
    }

    std::vector<CheckResult> results;
    Recorder rec(results);
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2.0 - 0.05);

    const int total_split_trials = std::min(options.trials, 5);
    const int total_split_max_n = std::min(options.max_n, 8);

    for (int trial = 0; trial < options.trials; ++trial) {
        ExperimentConfig config;
        config.g_coupling = 1.0;
        config.reservoir_size = options.max_n;
        config.total_time = angle(rng) * config.reservoir_size;

        for (int n = 0; n <= options.max_n; ++n) {
            const SingleExcitationState closed = closed_form_state(config, n);
            const SingleExcitationState stepped = evolve_to(config, n);
            double step_residual = std::abs(closed.amp_s0_excited - stepped.amp_s0_excited);
            step_residual = std::max(step_residual,
                                     std::abs(closed.amp_photon - stepped.amp_photon));
            for (int i = 0; i < n; ++i) {
                step_residual = std::max(
                    step_residual, std::abs(closed.amp_atom[static_cast<std::size_t>(i)] -
                                            stepped.amp_atom[static_cast<std::size_t>(i)]));
            }
            rec.record("stepwise vs closed form", step_residual, 1e-12);

            const oracle::DenseState dense = evolve_dense(config, n);
            rec.record("excitation sector leakage", dense.off_sector_weight(), 1e-12);

            const oracle::DenseState embedded = embed(closed);
            complex overlap{0.0, 0.0};
            for (std::size_t idx = 0; idx < dense.dim(); ++idx) {
                overlap += std::conj(embedded[idx]) * dense[idx];
            }
            rec.record("dense embedding overlap", std::abs(std::abs(overlap) - 1.0), 1e-12);

            rec.record("conservation of distinguishability",
                       std::abs(total_distinguishability(config, n) - 1.0), 1e-12);

            oracle::SubsystemSet mode_probe;
            mode_probe.mode = true;
            rec.record("mode distinguishability",
                       std::abs(oracle::distinguishability_bruteforce(dense, mode_probe) -
                                distinguishability_s0_field(config, n)),
                       1e-10);

            oracle::SubsystemSet source_mode;
            source_mode.source = true;
            source_mode.mode = true;
            rec.record("mode concurrence",
                       std::abs(oracle::wootters_concurrence(
                                    oracle::partial_trace(dense, source_mode)) -
                                concurrence_s0_field(config, n)),
                       1e-10);

            for (int i = 1; i <= n; ++i) {
                oracle::SubsystemSet atom_probe;
                atom_probe.atoms = {i};
                rec.record("atom distinguishability",
                           std::abs(oracle::distinguishability_bruteforce(dense, atom_probe) -
                                    distinguishability_s0_atom(config, n, i)),
                           1e-10);

                oracle::SubsystemSet source_atom;
                source_atom.source = true;
                source_atom.atoms = {i};
                rec.record("atom concurrence",
                           std::abs(oracle::wootters_concurrence(
                                        oracle::partial_trace(dense, source_atom)) -
                                    concurrence_s0_atom(config, n, i)),
                           1e-10);
            }

            oracle::SubsystemSet source_only;
            source_only.source = true;
            const auto [v_pre, p_pre] = oracle::visibility_predictability_bruteforce(
                oracle::partial_trace(dense, source_only));
            rec.record("pre-measurement visibility", v_pre, 1e-12);
            rec.record("pre-measurement predictability", p_pre, 1e-12);

            if (trial < total_split_trials && n >= 1 && n <= total_split_max_n) {
                oracle::SubsystemSet everything;
                everything.mode = true;
                everything.atoms = all_atoms(n);
                rec.record("total-split distinguishability",
                           std::abs(oracle::distinguishability_bruteforce(dense, everything) -
                                    1.0),
                           1e-10);
            }

            if (n >= 1) {
                const MeasurementBasis basis = random_basis(n, rng);
                const ProjectionResult fast = project_all(closed, basis);
                rec.record("post-measurement complementarity",
                           std::abs(fast.report.relation_residual), 1e-12);

                const auto [post, probability] = oracle::project_bruteforce(dense, basis);
                rec.record("projection probability",
                           std::abs(probability - fast.probability), 1e-10);

                const auto [v_post, p_post] = oracle::visibility_predictability_bruteforce(
                    oracle::partial_trace(post, source_only));
                rec.record("projection visibility",
                           std::abs(v_post - fast.report.visibility), 1e-10);
                rec.record("projection predictability",
                           std::abs(p_post - fast.report.predictability), 1e-10);
                rec.record("projection concurrence",
                           std::abs(oracle::wootters_concurrence(
                                        oracle::partial_trace(post, source_mode)) -
                                    fast.report.concurrence_s0_field),
                           1e-10);
            }
        }
    }
    return results;
}

}  // namespace qeraser
