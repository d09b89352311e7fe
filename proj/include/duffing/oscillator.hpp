#pragma once

#include "duffing/types.hpp"

#include <vector>

namespace duffing {

/// The dimensionless oscillator x'' + x = -lambda x^3, x(0) = 1, x'(0) = 0.
/// Motion is periodic for every lambda > -1 at these initial conditions.
struct DuffingParams {
    double lambda = 0.0;
};

/// Throws DomainError unless lambda > -1.
void validate(const DuffingParams& p);

/// Conserved energy  E = xdot^2/2 + x^2/2 + lambda x^4/4.
/// Equals 1/2 + lambda/4 on the canonical trajectory.
double energy(double x, double xdot, const DuffingParams& p);

/// Arithmetic-geometric mean of a, b > 0.  Quadratic convergence; if
/// `iterations` is non-null it receives the number of averaging steps taken.
double agm(double a, double b, int* iterations = nullptr);

/// Complete elliptic integral K(m) = integral_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta)
/// in the parameter convention (m = k^2), evaluated as pi / (2 agm(1, sqrt(1-m))).
/// Valid for m < 1 (including negative m).
double complete_elliptic_k(double m);

/// Exact period T = 4 K(m) / sqrt(1 + lambda) with m = lambda / (2 (1 + lambda)).
/// Note m < 1/2 for every lambda > -1.  Absolute accuracy ~1e-13 for lambda <= 1e8.
PeriodEstimate exact_period(const DuffingParams& p);

struct TrajectorySample {
    double t;
    double x;
    double xdot;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;  // t strictly increasing, starts at (0, 1, 0)
    double tolerance = 0.0;                 // requested local error per unit step
};

/// Reference solution by an adaptive embedded Dormand-Prince 5(4) pair with
/// continuous (dense) output; local error per unit step <= tol, mixed
/// absolute/relative with both set to tol.  Samples are the accepted steps.
/// Throws DomainError for bad arguments and ToleranceNotMet on step underflow.
Trajectory integrate_trajectory(const DuffingParams& p, double t_end, double tol);

/// Independent period oracle: integrate from (1, 0) to the first downward
/// zero crossing of x, bisect the dense output for the crossing time t* to
/// accuracy tol, and return T = 4 t* (quarter-period symmetry of the even
/// potential started at a turning point).
PeriodEstimate numeric_period(const DuffingParams& p, double tol);

}  // namespace duffing
