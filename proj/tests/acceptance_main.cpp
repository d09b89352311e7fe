// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not tuned at runtime.

#include "duffing/engines.hpp"
#include "duffing/errors.hpp"
#include "duffing/nondim.hpp"
#include "duffing/oscillator.hpp"
#include "duffing/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace duffing;
using std::numbers::pi;

namespace {

int failures = 0;

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "      " << what << "\n";
        }
    }
    void require_close(double value, double expected, double tol,
                       const std::string& what) {
        require(std::isfinite(value) && std::abs(value - expected) <= tol,
                what + ": got " + std::to_string(value) + ", want " +
                    std::to_string(expected) + " +/- " + std::to_string(tol));
    }
};

void criterion(int id, const std::string& label,
               const std::function<void(Checker&)>& body) {
    Checker c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << "      unexpected exception: " << e.what() << "\n";
    }
    std::printf("%s  criterion %2d: %s\n", c.ok ? "PASS" : "FAIL", id, label.c_str());
    if (!c.ok) {
        std::fputs(c.detail.str().c_str(), stdout);
        ++failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main() {
    criterion(1, "exact LP coefficients through third order", [](Checker& c) {
        const auto t0 = std::chrono::steady_clock::now();
        const SeriesSolution lp = lp_series(3);
        c.require(lp.exact_coeffs[1] == Rational(3, 4), "gamma_1 != 3/4");
        c.require(lp.exact_coeffs[2] == Rational(-3, 128), "gamma_2 != -3/128");
        c.require(lp.exact_coeffs[3] == Rational(9, 512), "gamma_3 != 9/512");
        c.require(seconds_since(t0) < 1.0, "runtime exceeded 1 s");
    });

    criterion(2, "ALP coefficients at omega = 1 and 2", [](Checker& c) {
        for (double omega : {1.0, 2.0}) {
            const std::vector<double> w = alp_coefficients(3, omega);
            c.require_close(w[0], 0.75, 1e-14, "w_1(omega)");
            c.require_close(w[1], -3.0 / (128.0 * omega * omega), 1e-14,
                            "w_2(omega)");
            c.require_close(w[2], 0.0, 1e-14, "w_3(omega)");
        }
    });

    criterion(3, "PMS point of the third-order VLP sum", [](Checker& c) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            auto partial_sum = [lambda](double alpha) {
                const SeriesSolution sol = vlp_series(3, alpha, lambda);
                double sum = 0.0;
                for (const Rational& g : sol.exact_coeffs) sum += to_double(g);
                return sum;
            };
            const double root =
                pms_root(partial_sum, {0.0, std::sqrt(3.0 * lambda) + 2.0});
            c.require_close(root, std::sqrt(3.0 * lambda) / 2.0, 1e-8,
                            "alpha*(lambda=" + std::to_string(lambda) + ")");
        }
    });

    criterion(4, "generic engines match the closed forms at N = 3", [](Checker& c) {
        for (int i = 0; i < 50; ++i) {
            const double lambda = 100.0 * i / 49.0;
            const double t_lp = lp_period(lambda, 3).value;
            const double t_alp = alp_frequency(lambda, 3).value;
            const double t_vlp = vlp_period(lambda, 3).value;
            c.require(std::abs(t_lp - closed_form_period(Method::LP, lambda).value) <
                          1e-10 * t_lp,
                      "LP mismatch at lambda = " + std::to_string(lambda));
            c.require(std::abs(t_alp - closed_form_period(Method::ALP, lambda).value) <
                          1e-10 * t_alp,
                      "ALP mismatch at lambda = " + std::to_string(lambda));
            c.require(std::abs(t_vlp - closed_form_period(Method::VLP, lambda).value) <
                          1e-10 * t_vlp,
                      "VLP mismatch at lambda = " + std::to_string(lambda));
        }
    });

    criterion(5, "every method returns 2 pi at lambda = 0", [](Checker& c) {
        c.require_close(exact_period({0.0}).value, 2.0 * pi, 1e-12, "exact");
        c.require_close(lp_period(0.0, 3).value, 2.0 * pi, 1e-12, "LP");
        c.require_close(alp_frequency(0.0, 3).value, 2.0 * pi, 1e-12, "ALP");
        c.require_close(vlp_period(0.0, 3).value, 2.0 * pi, 1e-12, "VLP");
    });

    criterion(6, "large-coupling limits of sqrt(lambda) T", [](Checker& c) {
        const auto t0 = std::chrono::steady_clock::now();
        c.require_close(estimate_limit(Method::Exact, 3), 7.4162987, 1e-5, "exact");
        c.require_close(estimate_limit(Method::VLP, 3), 7.4112410, 1e-5, "VLP");
        c.require_close(estimate_limit(Method::ALP, 3), 7.4185905, 1e-5, "ALP");
        const double lp_tail = std::sqrt(1e6) * lp_period(1e6, 3).value;
        c.require(lp_tail < 0.01, "sqrt(lambda) T_LP at lambda = 1e6 not < 0.01");
        c.require(seconds_since(t0) < 1.0, "runtime exceeded 1 s");
    });

    criterion(7, "third-order error ordering ALP < VLP < LP", [](Checker& c) {
        for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
            const double t_exact = exact_period({lambda}).value;
            const double e_lp = std::abs(lp_period(lambda, 3).value - t_exact);
            const double e_alp = std::abs(alp_frequency(lambda, 3).value - t_exact);
            const double e_vlp = std::abs(vlp_period(lambda, 3).value - t_exact);
            c.require(e_alp < e_vlp && e_vlp < e_lp,
                      "ordering violated at lambda = " + std::to_string(lambda));
        }
        // Frozen from four mutually independent recomputations (AGM, direct
        // quadrature of the period integral, and the closed forms).
        c.require_close(exact_period({1.0}).value, 4.768022029, 1e-8, "T_exact(1)");
        c.require_close(lp_period(1.0, 3).value, 4.757613079, 1e-8, "T_LP(1)");
        c.require_close(vlp_period(1.0, 3).value, 4.767921285, 1e-7, "T_VLP(1)");
        c.require_close(alp_frequency(1.0, 3).value, 4.768064191, 1e-8, "T_ALP(1)");
    });

    criterion(8, "secular terms: present in naive x1, absent elsewhere", [](Checker& c) {
        const SeriesSolution naive = naive_series(1);
        c.require(naive.solutions[1].coefficient(1, 1, Trig::Sin) == Rational(-3, 8),
                  "t sin(t) coefficient of naive x1 is not -3/8");
        const SeriesSolution lp = lp_series(5);
        const SeriesSolution alp = alp_series(5);
        const SeriesSolution vlp = vlp_series(5, 0.9, 1.5);
        for (const SeriesSolution* sol : {&lp, &alp, &vlp})
            for (const TrigSeries& x : sol->solutions)
                c.require(!x.has_secular_term(),
                          method_name(sol->method) + " solution has a t-power");
    });

    criterion(9, "ODE oracle: period agreement and energy conservation", [](Checker& c) {
        for (int i = 0; i < 20; ++i) {
            const double lambda = 0.01 * std::pow(100.0 / 0.01, i / 19.0);
            const double diff = std::abs(numeric_period({lambda}, 1e-10).value -
                                         exact_period({lambda}).value);
            c.require(diff < 1e-6,
                      "period mismatch at lambda = " + std::to_string(lambda));
        }
        for (double lambda : {0.5, 1.0, 5.0}) {
            const double t_period = exact_period({lambda}).value;
            const Trajectory traj =
                integrate_trajectory({lambda}, 10.0 * t_period, 1e-10);
            const double e0 = 0.5 + 0.25 * lambda;
            double drift = 0.0;
            for (const TrajectorySample& s : traj.samples)
                drift = std::max(drift, std::abs(energy(s.x, s.xdot, {lambda}) - e0));
            c.require(drift < 1e-8,
                      "energy drift at lambda = " + std::to_string(lambda));
        }
    });

    criterion(10, "VLP reduction at alpha = 0 and odd-gamma vanishing", [](Checker& c) {
        const SeriesSolution lp = lp_series(3);
        for (double lambda : {0.5, 1.0, 2.0}) {
            const SeriesSolution vlp0 = vlp_series(3, 0.0, lambda);
            const Rational lam(lambda);
            Rational lam_pow(1);
            for (int j = 0; j <= 3; ++j) {
                c.require(vlp0.exact_coeffs[j] == lp.exact_coeffs[j] * lam_pow,
                          "vlp(alpha=0) gamma_" + std::to_string(j) +
                              " differs from LP at lambda = " + std::to_string(lambda));
                lam_pow *= lam;
            }
            const SeriesSolution at_pms =
                vlp_series(3, std::sqrt(3.0 * lambda) / 2.0, lambda);
            c.require(std::abs(to_double(at_pms.exact_coeffs[1])) < 1e-12,
                      "gamma_1 not ~0 at the PMS point");
            c.require(std::abs(to_double(at_pms.exact_coeffs[3])) < 1e-12,
                      "gamma_3 not ~0 at the PMS point");
        }
    });

    criterion(11, "dimensional reduction pipeline", [](Checker& c) {
        const PhysicalOscillator osc{2.0, 8.0, 1.0, 2.0};
        const NondimResult r = to_dimensionless(osc);
        c.require_close(r.lambda, 0.5, 1e-15, "lambda");
        c.require_close(r.omega0, 2.0, 1e-15, "omega0");
        const double expected = exact_period({0.5}).value / 2.0;
        c.require_close(physical_period(osc, Method::Exact, 3), expected,
                        1e-12 * expected, "physical period");
        const double t_base = physical_period(osc, Method::Exact, 3);
        for (double scale : {0.25, 7.0}) {
            const PhysicalOscillator scaled{osc.mass * scale, osc.v2 * scale,
                                            osc.v4 * scale, osc.amplitude};
            c.require(std::abs(physical_period(scaled, Method::Exact, 3) - t_base) <
                          1e-12 * t_base,
                      "joint-scaling invariance broken at c = " +
                          std::to_string(scale));
        }
    });

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
