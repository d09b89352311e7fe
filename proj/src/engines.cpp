#include "duffing/engines.hpp"

#include "duffing/errors.hpp"
#include "duffing/oscillator.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

namespace duffing {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_order(int N, int lowest) {
    if (N < lowest || N > kMaxOrder)
        throw DomainError("order N must lie in [" + std::to_string(lowest) + ", " +
                          std::to_string(kMaxOrder) + "], got " + std::to_string(N));
}

// Order-m coefficient of x^3 for x = sum_j x_j eps^j:
//   (x^3)_m = sum_{j=0}^{m} sum_{k=0}^{j} x_k x_{j-k} x_{m-j}
TrigSeries cube_convolution(const std::vector<TrigSeries>& x, int m) {
    TrigSeries out;
    for (int j = 0; j <= m; ++j)
        for (int k = 0; k <= j; ++k) out += x[k] * (x[j - k] * x[m - j]);
    return out;
}

// Picks the counterterm coefficient that cancels the resonant cos(u) part of
// g, i.e. c with resonant_part(g + c cos u) = 0.  The recursions only ever
// produce cosine series, so no sin(u) resonance can appear.
Rational cancel_resonance(const TrigSeries& g) {
    const ResonantPart res = resonant_part(g);
    assert(res.sin1 == 0 && "perturbation forcing must be a pure cosine series");
    return -res.cos1;
}

}  // namespace

std::vector<double> SeriesSolution::coeff_values() const {
    std::vector<double> out;
    out.reserve(exact_coeffs.size());
    for (const Rational& c : exact_coeffs) out.push_back(to_double(c));
    return out;
}

SeriesSolution naive_series(int N) {
    check_order(N, 0);
    SeriesSolution sol;
    sol.method = Method::Naive;
    sol.order = N;
    sol.solutions.push_back(TrigSeries::cosine(1));
    for (int n = 1; n <= N; ++n) {
        const TrigSeries f = -cube_convolution(sol.solutions, n - 1);
        sol.solutions.push_back(solve_driven(f, /*allow_secular=*/true));
    }
    return sol;
}

SeriesSolution lp_series(int N) {
    check_order(N, 1);
    SeriesSolution sol;
    sol.method = Method::LP;
    sol.order = N;
    sol.solutions.push_back(TrigSeries::cosine(1));
    sol.exact_coeffs.push_back(Rational(1));  // gamma_0
    for (int n = 1; n <= N; ++n) {
        TrigSeries g = -cube_convolution(sol.solutions, n - 1);
        for (int j = 1; j < n; ++j)
            g -= sol.solutions[n - j].second_derivative().scaled(sol.exact_coeffs[j]);
        const Rational gamma_n = cancel_resonance(g);
        // -gamma_n x0'' = +gamma_n cos(s)
        const TrigSeries f = g + TrigSeries::cosine(1, gamma_n);
        sol.solutions.push_back(solve_driven(f, /*allow_secular=*/false));
        sol.exact_coeffs.push_back(gamma_n);
    }
    return sol;
}

PeriodEstimate lp_period(double lambda, int N) {
    const SeriesSolution sol = lp_series(N);
    // Exact Horner evaluation at the dyadic image of lambda.
    const Rational lam(lambda);
    Rational sum(0);
    for (int j = N; j >= 0; --j) sum = sum * lam + sol.exact_coeffs[j];
    const double gamma_sum = to_double(sum);
    if (!(gamma_sum > 0.0))
        throw NegativeGamma("truncated gamma sum is not positive at lambda = " +
                                std::to_string(lambda) + " (sum = " +
                                std::to_string(gamma_sum) + ")",
                            lambda, gamma_sum);
    PeriodEstimate est;
    est.value = kTwoPi / std::sqrt(gamma_sum);
    est.method = Method::LP;
    est.order = N;
    est.lambda = lambda;
    est.gamma_sum = gamma_sum;
    return est;
}

SeriesSolution alp_series(int N) {
    check_order(N, 1);
    // Rescaled recursion: with y_n = x_n omega^(2n) and what_n = w_n omega^(2(n-1)),
    // every power of omega cancels and the equations become
    //   y_n'' + y_n = -(y^3)_{n-1} + sum_{j=1}^{n} what_j y_{n-j},   y_0 = cos(u).
    SeriesSolution sol;
    sol.method = Method::ALP;
    sol.order = N;
    sol.solutions.push_back(TrigSeries::cosine(1));
    for (int n = 1; n <= N; ++n) {
        TrigSeries g = -cube_convolution(sol.solutions, n - 1);
        for (int j = 1; j < n; ++j)
            g += sol.solutions[n - j].scaled(sol.exact_coeffs[j - 1]);
        const Rational w_n = cancel_resonance(g);
        const TrigSeries f = g + TrigSeries::cosine(1, w_n);
        sol.solutions.push_back(solve_driven(f, /*allow_secular=*/false));
        sol.exact_coeffs.push_back(w_n);  // exact_coeffs[n-1] = what_n
    }
    return sol;
}

std::vector<double> alp_coefficients(int N, double omega) {
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    const SeriesSolution sol = alp_series(N);
    std::vector<double> w(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n)
        w[n - 1] = to_double(sol.exact_coeffs[n - 1]) *
                   std::pow(omega, -2.0 * (n - 1));
    return w;
}

PeriodEstimate alp_frequency(double lambda, int N) {
    check_order(N, 1);
    if (!(lambda > -1.0)) throw DomainError("lambda must exceed -1");
    const SeriesSolution sol = alp_series(N);
    const std::vector<double> what = sol.coeff_values();

    // omega^2 = 1 + sum_{j=1}^{N} what_j omega^(-2(j-1)) lambda^j
    auto series_sum = [&](double omega) {
        double sum = 0.0;
        double lam_pow = 1.0;
        const double inv = 1.0 / (omega * omega);
        double inv_pow = 1.0;
        for (int j = 1; j <= N; ++j) {
            lam_pow *= lambda;
            sum += what[j - 1] * inv_pow * lam_pow;
            inv_pow *= inv;
        }
        return sum;
    };

    constexpr double kTol = 1e-12;
    double omega = std::sqrt(1.0 + 0.75 * lambda);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const double radicand = 1.0 + series_sum(omega);
        if (!(radicand > 0.0) || !std::isfinite(radicand)) break;
        const double next = 0.3 * omega + 0.7 * std::sqrt(radicand);
        const double delta = std::abs(next - omega);
        omega = next;
        if (delta < kTol) {
            converged = true;
            break;
        }
    }

    if (!converged) {
        // Bisection fallback on g(omega) = omega^2 - 1 - sum.
        auto g = [&](double w) { return w * w - 1.0 - series_sum(w); };
        double lo = 1.0, hi = 2.0 * std::sqrt(1.0 + lambda);
        if (hi < lo) std::swap(lo, hi);
        const double g_lo = g(lo), g_hi = g(hi);
        if (!(g_lo * g_hi < 0.0))
            throw NoRoot("no sign change of the truncated frequency relation on [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]",
                         g_lo, g_hi);
        for (int it = 0; it < 200 && hi - lo > kTol; ++it) {
            const double mid = 0.5 * (lo + hi);
            (g(lo) * g(mid) <= 0.0 ? hi : lo) = mid;
        }
        omega = 0.5 * (lo + hi);
    }

    PeriodEstimate est;
    est.value = kTwoPi / omega;
    est.method = Method::ALP;
    est.order = N;
    est.lambda = lambda;
    est.omega = omega;
    return est;
}

SeriesSolution vlp_series(int N, double alpha, double lambda) {
    check_order(N, 1);
    const Rational alpha_sq = Rational(alpha) * Rational(alpha);
    const Rational lam(lambda);
    const Rational gamma0 = Rational(1) + alpha_sq;
    const Rational inv_gamma0 = Rational(1) / gamma0;

    SeriesSolution sol;
    sol.method = Method::VLP;
    sol.order = N;
    sol.alpha = alpha;
    sol.solutions.push_back(TrigSeries::cosine(1));
    sol.exact_coeffs.push_back(gamma0);
    for (int n = 1; n <= N; ++n) {
        TrigSeries g = cube_convolution(sol.solutions, n - 1).scaled(-lam);
        for (int j = 1; j < n; ++j)
            g -= sol.solutions[n - j].second_derivative().scaled(sol.exact_coeffs[j]);
        g += sol.solutions[n - 1].scaled(alpha_sq);
        const Rational gamma_n = cancel_resonance(g);
        const TrigSeries f = (g + TrigSeries::cosine(1, gamma_n)).scaled(inv_gamma0);
        sol.solutions.push_back(solve_driven(f, /*allow_secular=*/false));
        sol.exact_coeffs.push_back(gamma_n);
    }
    return sol;
}

namespace {

// Truncated delta-series summed at delta = 1: P(alpha) = sum_j gamma_j.
double vlp_gamma_sum(int N, double alpha, double lambda) {
    const SeriesSolution sol = vlp_series(N, alpha, lambda);
    Rational sum(0);
    for (const Rational& c : sol.exact_coeffs) sum += c;
    return to_double(sum);
}

}  // namespace

double pms_root(const std::function<double(double)>& evaluator,
                std::pair<double, double> bracket) {
    const double lo = std::min(bracket.first, bracket.second);
    const double hi = std::max(bracket.first, bracket.second);
    if (!(hi > lo)) throw DomainError("pms_root: empty bracket");

    // Sign of the central-difference derivative.
    auto dsign = [&](double a) {
        const double h = 1e-5 * std::max(1.0, std::abs(a));
        const double d = evaluator(a + h) - evaluator(a - h);
        return (d > 0.0) - (d < 0.0);
    };

    constexpr int kGrid = 128;
    constexpr double kRefine = 1e-10;
    const double step = (hi - lo) / kGrid;

    int s_prev = dsign(lo);
    double a_prev = lo;
    for (int i = 1; i <= kGrid; ++i) {
        const double a = lo + i * step;
        const int s = dsign(a);
        if (s_prev == 0 && a_prev > 0.0) return a_prev;  // exact zero at a node
        if (s_prev * s < 0) {
            double x0 = a_prev, x1 = a;
            int s0 = s_prev;
            while (x1 - x0 > kRefine) {
                const double mid = 0.5 * (x0 + x1);
                const int sm = dsign(mid);
                if (sm == 0) return mid;
                (sm == s0 ? x0 : x1) = mid;
            }
            const double root = 0.5 * (x0 + x1);
            if (root > 0.0) return root;  // smallest positive stationary point
        }
        s_prev = s;
        a_prev = a;
    }
    throw NoStationaryPoint("no sign change of dP/dalpha in [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
}

PeriodEstimate vlp_period(double lambda, int N) {
    check_order(N, 1);
    if (!(lambda >= 0.0))
        throw DomainError("vlp_period requires lambda >= 0 (PMS point is non-real "
                          "for negative coupling)");

    double alpha_star = 0.0;
    if (lambda > 0.0) {
        // gamma_{2j+1} absorbs the alpha dependence; the truncated sum is
        // stationary at the PMS point near sqrt(3 lambda)/2.
        const std::pair<double, double> bracket{0.0, std::sqrt(3.0 * lambda) + 2.0};
        alpha_star = pms_root(
            [&](double a) { return vlp_gamma_sum(N, a, lambda); }, bracket);
    }
    // At lambda = 0 the partial sums are alpha-independent (gamma_1 = -alpha^2
    // cancels gamma_0 - 1 and all higher orders vanish), so alpha* = 0.

    const double gamma_sum = vlp_gamma_sum(N, alpha_star, lambda);
    if (!(gamma_sum > 0.0))
        throw NegativeGamma("optimized gamma sum is not positive at lambda = " +
                                std::to_string(lambda),
                            lambda, gamma_sum);

    PeriodEstimate est;
    est.value = kTwoPi / std::sqrt(gamma_sum);
    est.method = Method::VLP;
    est.order = N;
    est.lambda = lambda;
    est.alpha = alpha_star;
    est.gamma_sum = gamma_sum;
    return est;
}

PeriodEstimate closed_form_period(Method method, double lambda) {
    PeriodEstimate est;
    est.method = method;
    est.order = 3;
    est.lambda = lambda;
    switch (method) {
        case Method::LP: {
            const double r =
                ((9.0 * lambda - 12.0) * lambda + 384.0) * lambda + 512.0;
            if (!(r > 0.0)) throw DomainError("LP radicand not positive");
            est.value = 32.0 * std::sqrt(2.0) * std::numbers::pi / std::sqrt(r);
            return est;
        }
        case Method::ALP: {
            const double s = (30.0 * lambda + 96.0) * lambda + 64.0;
            if (!(s >= 0.0)) throw DomainError("ALP inner radicand negative");
            const double inner = std::sqrt(s) + 2.0 * (3.0 * lambda + 4.0);
            if (!(inner > 0.0)) throw DomainError("ALP radicand not positive");
            const double omega = std::sqrt(inner) / 4.0;
            est.value = kTwoPi / omega;
            est.omega = omega;
            return est;
        }
        case Method::VLP: {
            const double r =
                ((207.0 * lambda + 852.0) * lambda + 1152.0) * lambda + 512.0;
            if (!(r > 0.0)) throw DomainError("VLP radicand not positive");
            est.value = 8.0 * std::sqrt(2.0) * std::numbers::pi *
                        (3.0 * lambda + 4.0) / std::sqrt(r);
            return est;
        }
        case Method::Naive:
        case Method::Exact:
            break;
    }
    throw DomainError("closed_form_period: only LP, ALP and VLP have closed "
                      "third-order formulas");
}

PeriodEstimate period_by_method(Method method, double lambda, int N) {
    switch (method) {
        case Method::Exact:
            return exact_period(DuffingParams{lambda});
        case Method::LP:
            return lp_period(lambda, N);
        case Method::ALP:
            return alp_frequency(lambda, N);
        case Method::VLP:
            return vlp_period(lambda, N);
        case Method::Naive:
            break;
    }
    throw DomainError("the naive expansion defines no period");
}

}  // namespace duffing
