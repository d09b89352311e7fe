#include "duffing/oscillator.hpp"

#include "duffing/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace duffing {

void validate(const DuffingParams& p) {
    if (!(p.lambda > -1.0))
        throw DomainError("lambda must exceed -1, got " + std::to_string(p.lambda));
}

double energy(double x, double xdot, const DuffingParams& p) {
    return 0.5 * xdot * xdot + 0.5 * x * x + 0.25 * p.lambda * x * x * x * x;
}

double agm(double a, double b, int* iterations) {
    int iters = 0;
    while (std::abs(a - b) > 1e-15 * std::max(a, 1.0) && iters < 60) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        ++iters;
    }
    if (iterations) *iterations = iters;
    return 0.5 * (a + b);
}

double complete_elliptic_k(double m) {
    if (!(m < 1.0)) throw DomainError("complete_elliptic_k requires m < 1");
    return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

PeriodEstimate exact_period(const DuffingParams& p) {
    validate(p);
    const double m = p.lambda / (2.0 * (1.0 + p.lambda));
    PeriodEstimate est;
    est.value = 4.0 * complete_elliptic_k(m) / std::sqrt(1.0 + p.lambda);
    est.method = Method::Exact;
    est.order = 0;
    est.lambda = p.lambda;
    return est;
}

namespace {

using State = std::array<double, 2>;  // {x, xdot}

// Dormand-Prince 5(4) pair with the standard quartic interpolant.
struct Dopri5 {
    double lambda;

    State rhs(const State& y) const {
        return State{y[1], -y[0] - lambda * y[0] * y[0] * y[0]};
    }

    double t = 0.0;
    State y{1.0, 0.0};
    State k1;  // FSAL slope at (t, y)

    // Last accepted step, for dense output.
    double t_prev = 0.0;
    double h_prev = 0.0;
    std::array<State, 5> rcont{};

    void start() { k1 = rhs(y); }

    // Tries one step of size h; on success advances (t, y), stores the
    // interpolant and returns true.  `err_ratio` receives err/h for the
    // step-size controller either way.
    bool try_step(double h, double tol, double& err_ratio) {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        // b - b* (embedded 4th order), e7 = -1/40.
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
        // Dense-output weights.
        static constexpr double d1 = -12715105075.0 / 11282082432.0;
        static constexpr double d3 = 87487479700.0 / 32700410799.0;
        static constexpr double d4 = -10690763975.0 / 1880347072.0;
        static constexpr double d5 = 701980252875.0 / 199316789632.0;
        static constexpr double d6 = -1453857185.0 / 822651844.0;
        static constexpr double d7 = 69997945.0 / 29380423.0;

        auto axpy = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State out = y;
            for (const auto& [c, k] : terms)
                for (int i = 0; i < 2; ++i) out[i] += h * c * (*k)[i];
            return out;
        };

        const State k2 = rhs(axpy({{a21, &k1}}));
        const State k3 = rhs(axpy({{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        State ynew;
        for (int i = 0; i < 2; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                  b6 * k6[i]);
        const State k7 = rhs(ynew);

        double err2 = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err2 += (e / sc) * (e / sc);
        }
        const double err = std::sqrt(0.5 * err2);
        err_ratio = err / h;
        if (err_ratio > 1.0) return false;

        for (int i = 0; i < 2; ++i) {
            const double ydiff = ynew[i] - y[i];
            const double bspl = h * k1[i] - ydiff;
            rcont[0][i] = y[i];
            rcont[1][i] = ydiff;
            rcont[2][i] = bspl;
            rcont[3][i] = ydiff - h * k7[i] - bspl;
            rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                               d6 * k6[i] + d7 * k7[i]);
        }
        t_prev = t;
        h_prev = h;
        t += h;
        y = ynew;
        k1 = k7;  // FSAL
        return true;
    }

    // Continuous extension on the last accepted step, theta in [0, 1].
    State interpolate(double theta) const {
        State out;
        const double th1 = 1.0 - theta;
        for (int i = 0; i < 2; ++i)
            out[i] = rcont[0][i] +
                     theta * (rcont[1][i] +
                              th1 * (rcont[2][i] +
                                     theta * (rcont[3][i] + th1 * rcont[4][i])));
        return out;
    }
};

constexpr long kMaxSteps = 20'000'000;

// Drives the stepper to t_end, invoking `on_step` after every accepted step.
// on_step may return false to stop early.
template <typename Callback>
void integrate(Dopri5& stepper, double t_end, double tol, Callback&& on_step) {
    stepper.start();
    const double eps = std::numeric_limits<double>::epsilon();
    const double t_edge = 32.0 * eps * std::max(1.0, std::abs(t_end));
    double h = 0.01 / std::sqrt(1.0 + std::abs(stepper.lambda));
    long steps = 0;
    while (t_end - stepper.t > t_edge) {
        if (h < 32.0 * eps * std::max(1.0, std::abs(stepper.t)))
            throw ToleranceNotMet("step size underflow at t = " +
                                  std::to_string(stepper.t));
        if (++steps > kMaxSteps)
            throw ToleranceNotMet("step budget exhausted before t_end");

        const double h_step = std::min(h, t_end - stepper.t);
        double err_ratio = 0.0;
        const bool accepted = stepper.try_step(h_step, tol, err_ratio);
        const double factor =
            err_ratio > 0.0 ? 0.9 * std::pow(1.0 / err_ratio, 0.25) : 5.0;
        h = h_step * std::clamp(factor, 0.2, 5.0);
        if (accepted && !on_step()) return;
    }
}

}  // namespace

Trajectory integrate_trajectory(const DuffingParams& p, double t_end, double tol) {
    validate(p);
    if (!(t_end > 0.0)) throw DomainError("t_end must be positive");
    if (!(tol >= 1e-14 && tol <= 1e-3))
        throw DomainError("tol must lie in [1e-14, 1e-3]");

    Trajectory traj;
    traj.tolerance = tol;
    traj.samples.push_back({0.0, 1.0, 0.0});

    Dopri5 stepper{p.lambda};
    integrate(stepper, t_end, tol, [&] {
        traj.samples.push_back({stepper.t, stepper.y[0], stepper.y[1]});
        return true;
    });
    return traj;
}

PeriodEstimate numeric_period(const DuffingParams& p, double tol) {
    validate(p);
    const double tol_int = std::clamp(tol, 1e-14, 1e-3);

    // The quarter period is at most K(m)/sqrt(1+lambda) <= (pi/2)/sqrt(1+lambda)
    // for m <= 1/2; pad the search horizon generously.
    const double t_max = 2.0 * std::numbers::pi / std::sqrt(1.0 + p.lambda) + 1.0;

    Dopri5 stepper{p.lambda};
    double crossing = -1.0;
    integrate(stepper, t_max, tol_int, [&] {
        if (stepper.y[0] > 0.0) return true;
        // x reached zero inside the last step: bisect the dense output.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 80 && (hi - lo) * stepper.h_prev > tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            (stepper.interpolate(mid)[0] > 0.0 ? lo : hi) = mid;
        }
        crossing = stepper.t_prev + 0.5 * (lo + hi) * stepper.h_prev;
        return false;
    });
    if (crossing < 0.0)
        throw DomainError("no zero crossing found; motion not periodic?");

    PeriodEstimate est;
    est.value = 4.0 * crossing;
    est.method = Method::Exact;
    est.order = 0;
    est.lambda = p.lambda;
    return est;
}

}  // namespace duffing
