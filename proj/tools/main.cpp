// Command-line front end: closed-form chain simulation, visibility-maximizing
// readout search, and the brute-force verification suite.

#include "qeraser/crosscheck.hpp"
#include "qeraser/dynamics.hpp"
#include "qeraser/metrics.hpp"
#include "qeraser/optimize.hpp"

#include "svg_plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qeraser;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string join_g12(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += g12(values[i]);
    }
    return out;
}

struct CommonFlags {
    double gT = 2.0 * std::numbers::pi;  // defaults match the N = 20 sweep
    int N = 20;
    std::uint64_t seed = 0;
    std::string config_path;
};

// Flags beat the config file, the config file beats the defaults.
void apply_config_file(const CLI::App* cmd, CommonFlags& flags) {
    if (flags.config_path.empty()) return;
    std::ifstream in(flags.config_path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + flags.config_path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config file must hold a JSON object");
    }
    if (doc.contains("gT") && cmd->count("--gT") == 0) flags.gT = doc.at("gT").get<double>();
    if (doc.contains("N") && cmd->count("--N") == 0) flags.N = doc.at("N").get<int>();
    if (doc.contains("seed") && cmd->count("--seed") == 0) {
        flags.seed = doc.at("seed").get<std::uint64_t>();
    }
}

ExperimentConfig make_config(const CommonFlags& flags) {
    ExperimentConfig config;
    config.g_coupling = 1.0;
    config.total_time = flags.gT;
    config.reservoir_size = flags.N;
    config.validate();
    return config;
}

int run_simulate(const CLI::App* cmd, CommonFlags& flags, const std::string& format) {
    apply_config_file(cmd, flags);
    const ExperimentConfig config = make_config(flags);
    const double a = interaction_coefficients(config).a;

    json rows = json::array();
    if (format == "csv") {
        std::cout << "n,a,d_s0_field,d_s0_atoms_sum,c_s0_field,conservation_residual\n";
    }
    for (int n = 0; n <= config.reservoir_size; ++n) {
        const double d_field = distinguishability_s0_field(config, n);
        double d_atoms = 0.0;
        std::vector<double> per_atom;
        per_atom.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            per_atom.push_back(distinguishability_s0_atom(config, n, i));
            d_atoms += per_atom.back();
        }
        const double residual = d_field + d_atoms - 1.0;
        const double c_field = concurrence_s0_field(config, n);
        if (format == "csv") {
            std::cout << n << ',' << g12(a) << ',' << g12(d_field) << ',' << g12(d_atoms)
                      << ',' << g12(c_field) << ',' << g12(residual) << '\n';
        } else {
            rows.push_back({{"n", n},
                            {"a", a},
                            {"d_s0_field", d_field},
                            {"d_s0_atom", per_atom},
                            {"d_s0_atoms_sum", d_atoms},
                            {"c_s0_field", c_field},
                            {"conservation_residual", residual}});
        }
    }
    if (format == "json") {
        json doc{{"gT", flags.gT}, {"N", flags.N}, {"rows", rows}};
        std::cout << doc.dump(2) << '\n';
    }
    return kExitOk;
}

int run_optimize(const CLI::App* cmd, CommonFlags& flags, const std::string& format,
                 int single_n, int n_max, const std::string& plot_path) {
    apply_config_file(cmd, flags);
    const ExperimentConfig config = make_config(flags);

    OptimizationOptions options;
    options.seed = flags.seed;

    std::vector<std::pair<int, EraserSolution>> rows;
    if (cmd->count("--n") > 0) {
        rows.emplace_back(single_n, maximize_visibility(config, single_n, options));
    } else {
        const int top = (cmd->count("--n-max") > 0) ? n_max : config.reservoir_size;
        const std::vector<EraserSolution> table = sweep(config, top, options);
        for (int n = 0; n <= top; ++n) {
            rows.emplace_back(n, table[static_cast<std::size_t>(n)]);
        }
    }

    json json_rows = json::array();
    if (format == "csv") {
        std::cout << "n,visibility,predictability,concurrence,delta_d_total,"
                     "delta_d_field,delta_d_reservoir,theta,phi\n";
    }
    for (const auto& [n, solution] : rows) {
        const double delta_d_reservoir = solution.delta_d_total - solution.delta_d_field;
        std::vector<double> thetas, phis;
        for (const AtomReadout& r : solution.basis.readouts()) {
            thetas.push_back(r.theta);
            phis.push_back(r.phi);
        }
        if (format == "csv") {
            std::cout << n << ',' << g12(solution.visibility) << ','
                      << g12(solution.predictability) << ',' << g12(solution.concurrence)
                      << ',' << g12(solution.delta_d_total) << ','
                      << g12(solution.delta_d_field) << ',' << g12(delta_d_reservoir) << ','
                      << join_g12(thetas) << ',' << join_g12(phis) << '\n';
        } else {
            json_rows.push_back({{"n", n},
                                 {"visibility", solution.visibility},
                                 {"predictability", solution.predictability},
                                 {"concurrence", solution.concurrence},
                                 {"delta_d_total", solution.delta_d_total},
                                 {"delta_d_field", solution.delta_d_field},
                                 {"delta_d_reservoir", delta_d_reservoir},
                                 {"theta", thetas},
                                 {"phi", phis}});
        }
    }
    if (format == "json") {
        json doc{{"gT", flags.gT}, {"N", flags.N}, {"seed", flags.seed}, {"rows", json_rows}};
        std::cout << doc.dump(2) << '\n';
    }

    if (!plot_path.empty()) {
        plot::Series v{"visibility", "#2b6cb0", {}};
        plot::Series p{"predictability", "#c9a227", {}};
        plot::Series c{"concurrence", "#7b2d8b", {}};
        plot::Series dt{"delta_d_total", "#c9a227", {}};
        plot::Series df{"delta_d_field", "#7b2d8b", {}};
        plot::Series dr{"delta_d_reservoir", "#2b6cb0", {}};
        for (const auto& [n, solution] : rows) {
            const double x = static_cast<double>(n);
            v.points.emplace_back(x, solution.visibility);
            p.points.emplace_back(x, solution.predictability);
            c.points.emplace_back(x, solution.concurrence);
            dt.points.emplace_back(x, solution.delta_d_total);
            df.points.emplace_back(x, solution.delta_d_field);
            dr.points.emplace_back(x, solution.delta_d_total - solution.delta_d_field);
        }
        if (!plot::write_svg(plot_path, "conditional source-mode quantities vs n", {c, v, p},
                             "path-information change vs n", {df, dr, dt})) {
            throw std::invalid_argument("cannot write plot file: " + plot_path);
        }
    }
    return kExitOk;
}

int run_verify(int max_n, int trials, std::uint64_t seed) {
    CrosscheckOptions options;
    options.max_n = max_n;
    options.trials = trials;
    options.seed = seed;
    const std::vector<CheckResult> checks = run_crosschecks(options);

    bool all_passed = true;
    std::size_t widest = 0;
    for (const CheckResult& check : checks) widest = std::max(widest, check.name.size());
    for (const CheckResult& check : checks) {
        all_passed = all_passed && check.passed;
        std::printf("%-*s  max residual %.3e  (tol %.0e)  %s\n", static_cast<int>(widest),
                    check.name.c_str(), check.max_residual, check.tolerance,
                    check.passed ? "PASS" : "FAIL");
    }
    std::printf("%s: %zu checks\n", all_passed ? "OK" : "FAILED", checks.size());
    return all_passed ? kExitOk : kExitDomain;
}

int run(int argc, char** argv) {
    CLI::App app{"Resonant probe-chain simulator: path-information bookkeeping and "
                 "visibility-maximizing probe readouts"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string format = "csv";
    int single_n = 1;
    int n_max = 20;
    std::string plot_path;
    int verify_max_n = 8;
    int verify_trials = 50;
    std::uint64_t verify_seed = 1;

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Closed-form path-information shares for n = 0..N");
    simulate->add_option("--gT", flags.gT, "coupling-time product g*T");
    simulate->add_option("--N", flags.N, "number of probe atoms");
    simulate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--config", flags.config_path, "JSON config file");

    CLI::App* optimize = app.add_subcommand(
        "optimize", "Visibility-maximizing probe readouts per chain length");
    optimize->add_option("--gT", flags.gT, "coupling-time product g*T");
    optimize->add_option("--N", flags.N, "number of probe atoms");
    optimize->add_option("--n", single_n, "optimize a single chain length");
    optimize->add_option("--n-max", n_max, "sweep chain lengths 0..n-max");
    optimize->add_option("--seed", flags.seed, "search seed");
    optimize->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    optimize->add_option("--plot", plot_path, "write an SVG of the sweep");
    optimize->add_option("--config", flags.config_path, "JSON config file");

    CLI::App* verify = app.add_subcommand(
        "verify", "Brute-force statevector cross-checks of every closed form");
    verify->add_option("--max-n", verify_max_n, "largest chain length (oracle cap 12)")
        ->check(CLI::Range(1, 12));
    verify->add_option("--trials", verify_trials, "random configurations")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (simulate->parsed()) return run_simulate(simulate, flags, format);
    if (optimize->parsed()) return run_optimize(optimize, flags, format, single_n, n_max, plot_path);
    return run_verify(verify_max_n, verify_trials, verify_seed);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
