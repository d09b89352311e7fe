#include "duffing/engines.hpp"
#include "duffing/errors.hpp"
#include "duffing/nondim.hpp"
#include "duffing/oscillator.hpp"
#include "duffing/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace duffing;

// Trims ASCII whitespace from both ends.
std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// key=value config file for the sweep subcommand; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError(path + ":" + std::to_string(lineno) +
                              ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

double to_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used == value.size()) return v;
    } catch (...) {
    }
    throw DomainError("config key '" + key + "': bad number '" + value + "'");
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw DomainError("config key '" + key + "': bad boolean '" + value + "'");
}

std::vector<Method> parse_method_list(const std::string& list) {
    std::vector<Method> methods;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto m = parse_method(token);
        if (!m) throw DomainError("unknown method '" + token + "'");
        if (*m == Method::Exact) continue;  // exact column is always emitted
        methods.push_back(*m);
    }
    return methods;
}

int run_sweep_command(const SweepConfig& cfg) {
    const SweepTable table = run_sweep(cfg);

    if (cfg.out_path.empty()) {
        write_csv(table, std::cout);
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw DomainError("cannot open output file " + cfg.out_path);
        write_csv(table, out);
    }
    if (!cfg.svg_path.empty()) {
        std::ofstream svg(cfg.svg_path);
        if (!svg) throw DomainError("cannot open SVG file " + cfg.svg_path);
        write_svg(table, svg);
    }
    return all_rows_errored(table) ? 3 : 0;
}

void run_coeffs(int order) {
    const SeriesSolution lp = lp_series(order);
    std::printf("Lindstedt-Poincare gamma coefficients (T = 2 pi / sqrt(sum gamma_j lambda^j)):\n");
    for (int j = 0; j <= order; ++j)
        std::printf("  gamma_%d = %s\n", j, rational_string(lp.exact_coeffs[j]).c_str());

    const SeriesSolution alp = alp_series(order);
    std::printf("\nAlternative LP w coefficients (omega^2 = 1 + sum w_j lambda^j):\n");
    for (int n = 1; n <= order; ++n) {
        std::printf("  w_%d = %s", n, rational_string(alp.exact_coeffs[n - 1]).c_str());
        if (n > 1) std::printf(" * omega^-%d", 2 * (n - 1));
        std::printf("\n");
    }
}

void run_limits(int order) {
    std::printf("lim_{lambda -> inf} sqrt(lambda) T (order %d engines):\n", order);
    std::printf("  exact  %.7f\n", estimate_limit(Method::Exact, order));
    std::printf("  alp    %.7f\n", estimate_limit(Method::ALP, order));
    std::printf("  vlp    %.7f\n", estimate_limit(Method::VLP, order));
    const double lp_tail =
        std::sqrt(1e6) * period_by_method(Method::LP, 1e6, order).value;
    std::printf("  lp     -> 0 (sqrt(lambda) T = %.3e at lambda = 1e6)\n", lp_tail);
}

void run_trajectory(double lambda, double t_end, double tol, const std::string& path) {
    const DuffingParams params{lambda};
    const Trajectory traj = integrate_trajectory(params, t_end, tol);
    std::ofstream out;
    std::ostream* os = &std::cout;
    if (!path.empty()) {
        out.open(path);
        if (!out) throw DomainError("cannot open output file " + path);
        os = &out;
    }
    *os << "t,x,xdot,energy\n";
    char buf[160];
    for (const TrajectorySample& s : traj.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t, s.x, s.xdot,
                      energy(s.x, s.xdot, params));
        *os << buf;
    }
}

void run_physical(const PhysicalOscillator& osc, const std::string& method_name_str,
                  int order) {
    const auto method = parse_method(method_name_str);
    if (!method) throw DomainError("unknown method '" + method_name_str + "'");
    const NondimResult nd = to_dimensionless(osc);
    const double t_dimless = period_by_method(*method, nd.lambda, order).value;
    std::printf("lambda  = %.12g\n", nd.lambda);
    std::printf("omega0  = %.12g rad/time\n", nd.omega0);
    std::printf("T       = %.12g (dimensionless, %s)\n", t_dimless,
                method_name_str.c_str());
    std::printf("T'      = %.12g time units\n", t_dimless / nd.omega0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secular-free perturbation methods for the Duffing oscillator"};
    app.require_subcommand(1);

    // sweep
    SweepConfig cfg;
    bool use_log = true;
    std::string methods_csv = "lp,alp,vlp";
    std::string config_path;
    auto* sweep = app.add_subcommand(
        "sweep", "Compare engine periods against the exact one on a lambda grid");
    auto* opt_lmin = sweep->add_option("--lambda-min", cfg.lambda_min,
                                       "grid start (> -1)")
                         ->capture_default_str();
    auto* opt_lmax =
        sweep->add_option("--lambda-max", cfg.lambda_max, "grid end")
            ->capture_default_str();
    auto* opt_points = sweep->add_option("--points", cfg.points, "grid size (>= 2)")
                           ->capture_default_str();
    auto* opt_log = sweep->add_flag("--log,!--linear", use_log,
                                    "log-spaced grid (default)");
    auto* opt_order = sweep->add_option("--order", cfg.order, "perturbation order N")
                          ->capture_default_str();
    auto* opt_methods = sweep->add_option("--methods", methods_csv,
                                          "comma list: lp,alp,vlp,exact")
                            ->capture_default_str();
    auto* opt_out =
        sweep->add_option("--out", cfg.out_path, "CSV output file (default stdout)");
    auto* opt_svg =
        sweep->add_option("--svg", cfg.svg_path, "also write a log-log error chart");
    sweep->add_option("--config", config_path,
                      "key=value file; command-line flags take precedence");

    // coeffs
    int coeffs_order = 3;
    auto* coeffs =
        app.add_subcommand("coeffs", "Print exact gamma / w coefficient tables");
    coeffs->add_option("--order", coeffs_order, "perturbation order N")
        ->capture_default_str();

    // limits
    int limits_order = 3;
    auto* limits = app.add_subcommand(
        "limits", "Large-coupling limits of sqrt(lambda) T for each method");
    limits->add_option("--order", limits_order, "perturbation order N")
        ->capture_default_str();

    // trajectory
    double traj_lambda = 1.0, traj_t_end = 20.0, traj_tol = 1e-10;
    std::string traj_out;
    auto* traj = app.add_subcommand("trajectory",
                                    "Dump the reference ODE trajectory as CSV");
    traj->add_option("--lambda", traj_lambda, "coupling (> -1)")
        ->capture_default_str();
    traj->add_option("--t-end", traj_t_end, "integration end time")
        ->capture_default_str();
    traj->add_option("--tol", traj_tol, "local error per unit step")
        ->capture_default_str();
    traj->add_option("--out", traj_out, "CSV output file (default stdout)");

    // physical
    PhysicalOscillator osc;
    std::string phys_method = "exact";
    int phys_order = 3;
    double q0 = 0.0, v0 = 0.0;
    auto* phys = app.add_subcommand(
        "physical", "Period of a dimensional quartic oscillator m, v2, v4, A");
    phys->add_option("--mass", osc.mass, "particle mass")->capture_default_str();
    phys->add_option("--v2", osc.v2, "quadratic potential coefficient")
        ->capture_default_str();
    phys->add_option("--v4", osc.v4, "quartic potential coefficient")
        ->capture_default_str();
    auto* amp_opt = phys->add_option("--amplitude", osc.amplitude,
                                     "turning-point amplitude");
    auto* q0_opt =
        phys->add_option("--q0", q0, "initial position (alternative to --amplitude)");
    auto* v0_opt =
        phys->add_option("--v0", v0, "initial velocity (alternative to --amplitude)");
    q0_opt->excludes(amp_opt);
    v0_opt->excludes(amp_opt);
    phys->add_option("--method", phys_method, "period source: exact|lp|alp|vlp")
        ->capture_default_str();
    phys->add_option("--order", phys_order, "perturbation order N")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) {
            if (!config_path.empty()) {
                // Config supplies only the values not already given as flags.
                for (auto& [key, value] : read_config_file(config_path)) {
                    if (key == "lambda-min" && !*opt_lmin)
                        cfg.lambda_min = to_real(key, value);
                    else if (key == "lambda-max" && !*opt_lmax)
                        cfg.lambda_max = to_real(key, value);
                    else if (key == "points" && !*opt_points)
                        cfg.points = static_cast<int>(to_real(key, value));
                    else if (key == "log" && !*opt_log)
                        use_log = to_bool(key, value);
                    else if (key == "order" && !*opt_order)
                        cfg.order = static_cast<int>(to_real(key, value));
                    else if (key == "methods" && !*opt_methods)
                        methods_csv = value;
                    else if (key == "out" && !*opt_out)
                        cfg.out_path = value;
                    else if (key == "svg" && !*opt_svg)
                        cfg.svg_path = value;
                    else if (key != "lambda-min" && key != "lambda-max" &&
                             key != "points" && key != "log" && key != "order" &&
                             key != "methods" && key != "out" && key != "svg")
                        throw DomainError("unknown config key '" + key + "'");
                }
            }
            cfg.spacing = use_log ? Spacing::Log : Spacing::Linear;
            cfg.methods = parse_method_list(methods_csv);
            return run_sweep_command(cfg);
        }
        if (coeffs->parsed()) {
            run_coeffs(coeffs_order);
        } else if (limits->parsed()) {
            run_limits(limits_order);
        } else if (traj->parsed()) {
            run_trajectory(traj_lambda, traj_t_end, traj_tol, traj_out);
        } else if (phys->parsed()) {
            if (*q0_opt || *v0_opt)
                osc.amplitude = amplitude_from_state(osc.mass, osc.v2, osc.v4, q0, v0);
            run_physical(osc, phys_method, phys_order);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
