#include "qeraser/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace qeraser {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRejected = 1e9;  // zero-probability corner sentinel
constexpr double kCertifyStep = 1e-4;
constexpr double kCertifyGain = 1e-8;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Parameter layout: x[0..n-1] = theta_1..theta_n, x[n..2n-2] = phi_2..phi_n.
// phi_1 is pinned at zero; a uniform azimuth shift is an exact degeneracy of
// the objective and would stall the simplex.
struct AngleSpace {
    int n = 0;

    int dimension() const { return 2 * n - 1; }

    void clamp(std::vector<double>& x) const {
        for (int j = 0; j < n; ++j) {
            x[static_cast<std::size_t>(j)] =
                std::clamp(x[static_cast<std::size_t>(j)], 0.0, kHalfPi);
        }
        for (int j = n; j < dimension(); ++j) {
            double& phi = x[static_cast<std::size_t>(j)];
            phi = std::fmod(phi, kTwoPi);
            if (phi < 0.0) phi += kTwoPi;
        }
    }

    MeasurementBasis basis(const std::vector<double>& x) const {
        std::vector<AtomReadout> readouts(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            readouts[static_cast<std::size_t>(j)].theta = x[static_cast<std::size_t>(j)];
            readouts[static_cast<std::size_t>(j)].phi =
                (j == 0) ? 0.0 : x[static_cast<std::size_t>(n + j - 1)];
        }
        return MeasurementBasis(std::move(readouts));
    }
};

class VisibilityObjective {
public:
    VisibilityObjective(const ExperimentConfig& config, int n)
        : space_{n}, state_(closed_form_state(config, n)) {}

    const AngleSpace& space() const { return space_; }

    // Negated visibility; candidate points are projected into the box first.
    double operator()(std::vector<double>& x) const {
        space_.clamp(x);
        try {
            return -project_all(state_, space_.basis(x)).report.visibility;
        } catch (const std::invalid_argument&) {
            return kRejected;
        }
    }

private:
    AngleSpace space_;
    SingleExcitationState state_;
};

struct SimplexPoint {
    std::vector<double> x;
    double f = kRejected;
};

// Nelder-Mead descent with standard reflection/expansion/contraction/shrink
// coefficients, stopping when the simplex value spread closes below tol.
SimplexPoint nelder_mead(const VisibilityObjective& objective, std::vector<double> x0,
                         double theta_step, double phi_step, int max_iterations,
                         double tol) {
    const int dim = objective.space().dimension();
    const int n_theta = objective.space().n;

    std::vector<SimplexPoint> simplex;
    simplex.reserve(static_cast<std::size_t>(dim) + 1);
    {
        SimplexPoint p{std::move(x0), 0.0};
        p.f = objective(p.x);
        simplex.push_back(std::move(p));
    }
    for (int j = 0; j < dim; ++j) {
        SimplexPoint p{simplex.front().x, 0.0};
        const double step = (j < n_theta) ? theta_step : phi_step;
        double& coord = p.x[static_cast<std::size_t>(j)];
        const double upper = (j < n_theta) ? kHalfPi : kTwoPi;
        coord += (coord + step <= upper) ? step : -step;
        p.f = objective(p.x);
        simplex.push_back(std::move(p));
    }

    auto by_value = [](const SimplexPoint& a, const SimplexPoint& b) { return a.f < b.f; };
    std::sort(simplex.begin(), simplex.end(), by_value);

    for (int iter = 0; iter < max_iterations; ++iter) {
        if (simplex.back().f - simplex.front().f < tol) break;

        std::vector<double> centroid(static_cast<std::size_t>(dim), 0.0);
        for (std::size_t v = 0; v + 1 < simplex.size(); ++v) {
            for (int j = 0; j < dim; ++j) {
                centroid[static_cast<std::size_t>(j)] += simplex[v].x[static_cast<std::size_t>(j)];
            }
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double coeff) {
            SimplexPoint p;
            p.x.resize(static_cast<std::size_t>(dim));
            const std::vector<double>& worst = simplex.back().x;
            for (int j = 0; j < dim; ++j) {
                p.x[static_cast<std::size_t>(j)] =
                    centroid[static_cast<std::size_t>(j)] +
                    coeff * (centroid[static_cast<std::size_t>(j)] - worst[static_cast<std::size_t>(j)]);
            }
            p.f = objective(p.x);
            return p;
        };

        SimplexPoint reflected = blend(1.0);
        if (reflected.f < simplex.front().f) {
            SimplexPoint expanded = blend(2.0);
            simplex.back() = (expanded.f < reflected.f) ? std::move(expanded)
                                                        : std::move(reflected);
        } else if (reflected.f < simplex[simplex.size() - 2].f) {
            simplex.back() = std::move(reflected);
        } else {
            const bool outside = reflected.f < simplex.back().f;
            SimplexPoint contracted = blend(outside ? 0.5 : -0.5);
            if (contracted.f < std::min(reflected.f, simplex.back().f)) {
                simplex.back() = std::move(contracted);
            } else {
                // Shrink toward the current best vertex.
                for (std::size_t v = 1; v < simplex.size(); ++v) {
                    for (int j = 0; j < dim; ++j) {
                        simplex[v].x[static_cast<std::size_t>(j)] =
                            0.5 * (simplex[v].x[static_cast<std::size_t>(j)] +
                                   simplex.front().x[static_cast<std::size_t>(j)]);
                    }
                    simplex[v].f = objective(simplex[v].x);
                }
            }
        }
        std::sort(simplex.begin(), simplex.end(), by_value);
    }
    return simplex.front();
}

}  // namespace

EraserSolution maximize_visibility(const ExperimentConfig& config, int n,
                                   const OptimizationOptions& options) {
    config.validate();
    if (n < 1 || n > config.reservoir_size) {
        throw std::out_of_range("maximize_visibility: n = " + std::to_string(n) +
                                " outside [1, N]");
    }
    if (options.starts < 1 || options.max_iterations < 1) {
        throw std::invalid_argument("maximize_visibility: starts and iterations must be >= 1");
    }

    const VisibilityObjective objective(config, n);
    const int dim = objective.space().dimension();

    SimplexPoint best;
    for (int start = 0; start < options.starts; ++start) {
        std::vector<double> x0(static_cast<std::size_t>(dim), 0.0);
        if (start == 0) {
            // Deterministic center start: balanced tilt, aligned azimuths.
            for (int j = 0; j < n; ++j) x0[static_cast<std::size_t>(j)] = std::numbers::pi / 4.0;
        } else {
            std::mt19937_64 rng(splitmix64(options.seed ^
                                           splitmix64(static_cast<std::uint64_t>(n) * 1000003ull +
                                                      static_cast<std::uint64_t>(start))));
            std::uniform_real_distribution<double> tilt(0.02, kHalfPi - 0.02);
            std::uniform_real_distribution<double> azimuth(0.0, kTwoPi);
            for (int j = 0; j < n; ++j) x0[static_cast<std::size_t>(j)] = tilt(rng);
            for (int j = n; j < dim; ++j) x0[static_cast<std::size_t>(j)] = azimuth(rng);
        }
        SimplexPoint candidate = nelder_mead(objective, std::move(x0), 0.2, 0.8,
                                             options.max_iterations,
                                             options.objective_tolerance);
        if (candidate.f < best.f ||
            (candidate.f == best.f && candidate.x < best.x)) {
            best = std::move(candidate);
        }
    }

    // Tight local restart sharpens the argmax well past the coarse stage,
    // then every coordinate is probed; any +-1e-4 step may not buy a 1e-8
    // visibility gain, otherwise descent resumes from the better point.
    for (int round = 0; round < 6; ++round) {
        best = nelder_mead(objective, best.x, 1e-3, 4e-3, 800, 1e-14);
        bool improved = false;
        for (int j = 0; j < dim && !improved; ++j) {
            for (double delta : {kCertifyStep, -kCertifyStep}) {
                std::vector<double> probe = best.x;
                probe[static_cast<std::size_t>(j)] += delta;
                const double f_probe = objective(probe);
                if (f_probe < best.f - kCertifyGain) {
                    best = SimplexPoint{std::move(probe), f_probe};
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) break;
    }

    std::vector<double> x = best.x;
    objective.space().clamp(x);
    const MeasurementBasis basis = objective.space().basis(x);
    const ProjectionResult projection = project_all(closed_form_state(config, n), basis);

    EraserSolution solution;
    solution.basis = basis;
    solution.visibility = projection.report.visibility;
    solution.predictability = signed_predictability(projection);
    solution.concurrence = projection.report.concurrence_s0_field;
    solution.delta_d_total = delta_d_total(solution.visibility);
    solution.delta_d_field = delta_d_field(config, n, solution.visibility);
    return solution;
}

std::vector<EraserSolution> sweep(const ExperimentConfig& config, int n_max,
                                  const OptimizationOptions& options) {
    config.validate();
    if (n_max < 0 || n_max > config.reservoir_size) {
        throw std::out_of_range("sweep: n_max outside [0, N]");
    }
    std::vector<EraserSolution> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);

    EraserSolution baseline;  // untouched chain: full source-mode entanglement
    baseline.visibility = 0.0;
    baseline.predictability = 0.0;
    baseline.concurrence = 1.0;
    baseline.delta_d_total = 0.0;
    baseline.delta_d_field = 0.0;
    rows.push_back(std::move(baseline));

    for (int n = 1; n <= n_max; ++n) {
        rows.push_back(maximize_visibility(config, n, options));
    }
    return rows;
}

}  // namespace qeraser
