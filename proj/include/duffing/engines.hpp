#pragma once

#include "duffing/trig_series.hpp"
#include "duffing/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace duffing {

/// Highest perturbation order supported by the engines.  Exact arithmetic
/// keeps every order correct; the cap only bounds term growth and runtimes.
inline constexpr int kMaxOrder = 8;

/// Per-order output of one expansion method.
///
/// `solutions` holds x_0 .. x_N; the independent variable is t for the naive
/// expansion, s = sqrt(gamma) t for LP/VLP and u = omega t for ALP.  For ALP
/// the stored series are the rescaled x_n * omega^(2n), which makes every
/// coefficient an exact rational.
///
/// `exact_coeffs` holds the method's coefficient sequence in exact rational
/// form: gamma_0..gamma_N for LP, gamma_0..gamma_N evaluated at the dyadic
/// images of (alpha, lambda) for VLP, and the scaled w-coefficients
/// w_n * omega^(2(n-1)) for ALP.  Empty for the naive expansion.
struct SeriesSolution {
    Method method = Method::Naive;
    int order = 0;
    std::vector<TrigSeries> solutions;
    std::vector<Rational> exact_coeffs;
    std::optional<double> alpha;  // VLP only
    std::optional<double> omega;  // ALP only, after the self-consistent solve

    /// exact_coeffs as doubles.
    std::vector<double> coeff_values() const;
};

/// Straightforward expansion in powers of lambda; secular terms accumulate
/// (this method exists to exhibit them, it defines no period).  0 <= N <= 8.
SeriesSolution naive_series(int N);

/// Lindstedt-Poincare: rescale time by sqrt(gamma), expand gamma in lambda,
/// pick each gamma_n to cancel the resonant forcing.  All gamma_n are exact
/// rationals; gamma_0 = 1.  1 <= N <= 8.
SeriesSolution lp_series(int N);

/// T = 2 pi / sqrt(sum_j gamma_j lambda^j); throws NegativeGamma when the
/// truncated sum is not positive.
PeriodEstimate lp_period(double lambda, int N);

/// ALP recursion in rescaled time with x_0 = cos(omega t); coefficients are
/// exact rationals once the powers of omega^-2 are factored out.
SeriesSolution alp_series(int N);

/// w_1..w_N evaluated at a given omega > 0:  w_n = what_n * omega^(-2(n-1)).
std::vector<double> alp_coefficients(int N, double omega);

/// Solves the truncated self-consistency  omega^2 = 1 + sum w_j(omega) lambda^j
/// by damped fixed point seeded at sqrt(1 + 3 lambda / 4), with a bisection
/// fallback on [1, 2 sqrt(1+lambda)]; returns T = 2 pi / omega.
PeriodEstimate alp_frequency(double lambda, int N);

/// Variational LP at fixed (alpha, lambda): gamma_0 = 1 + alpha^2, the
/// order-n forcing carries + alpha^2 x_{n-1} and an overall 1/gamma_0.  The
/// recursion runs in exact rational arithmetic at the dyadic images of the
/// inputs, so resonance cancellation and secular-freedom are exact.
SeriesSolution vlp_series(int N, double alpha, double lambda);

/// Stationary point of `evaluator` located by a sign change of its
/// central-difference derivative on a scanned grid, refined by bisection to
/// 1e-10.  With several sign changes, the smallest positive one wins.
/// Throws NoStationaryPoint if the bracket contains none.
double pms_root(const std::function<double(double)>& evaluator,
                std::pair<double, double> bracket);

/// Principle of minimal sensitivity applied to the truncated gamma sum:
/// alpha* = pms_root over alpha -> sum_j gamma_j(alpha, lambda), then
/// T = 2 pi / sqrt(sum gamma_j(alpha*, lambda)).  Requires lambda >= 0.
PeriodEstimate vlp_period(double lambda, int N);

/// The closed third-order period formulas, used as an independent oracle
/// against the generic engines at N = 3.
PeriodEstimate closed_form_period(Method method, double lambda);

/// Dispatch to the engine for `method` (Exact routes to exact_period; Naive
/// has no period and throws DomainError).
PeriodEstimate period_by_method(Method method, double lambda, int N);

}  // namespace duffing
