#pragma once

// Test-only oracles, deliberately independent of the library implementation:
// the exact period is re-derived here by adaptive quadrature of the energy
// integral instead of the AGM elliptic evaluation.

#include <cmath>
#include <numbers>

namespace oracles {

template <typename F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-13) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// T(lambda) = 2 / sqrt(1 + lambda) * integral_0^pi dtheta /
///             sqrt(1 - lambda sin^2(theta) / (2 (1 + lambda)))
inline double period_by_quadrature(double lambda) {
    const double m = lambda / (2.0 * (1.0 + lambda));
    auto integrand = [m](double theta) {
        const double s = std::sin(theta);
        return 1.0 / std::sqrt(1.0 - m * s * s);
    };
    return 2.0 / std::sqrt(1.0 + lambda) *
           integrate(integrand, 0.0, std::numbers::pi);
}

/// The large-coupling limit 2 sqrt(2) integral_0^pi dtheta / sqrt(1 + cos^2).
inline double scaled_limit_by_quadrature() {
    auto integrand = [](double theta) {
        const double c = std::cos(theta);
        return 1.0 / std::sqrt(1.0 + c * c);
    };
    return 2.0 * std::sqrt(2.0) * integrate(integrand, 0.0, std::numbers::pi);
}

}  // namespace oracles
