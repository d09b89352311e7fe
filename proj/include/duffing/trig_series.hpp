#pragma once

#include "duffing/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace duffing {

enum class Trig { Cos, Sin };

/// Identity of one basis function c * t^p * cos(k u) / sin(k u) inside a
/// TrigSeries.  The series has a single independent variable; the t^p factor
/// multiplies the trig factor in that same variable (secular terms).
struct TrigKey {
    int tpower = 0;    // p >= 0
    int harmonic = 0;  // k >= 0
    Trig kind = Trig::Cos;

    friend auto operator<=>(const TrigKey&, const TrigKey&) = default;
};

/// Finite trigonometric polynomial with exact rational coefficients and
/// optional powers of the independent variable:
///
///     f(u) = sum of  c * u^p * cos(k u)   and   c * u^p * sin(k u)
///
/// Canonical form: no zero coefficients stored, terms keyed and ordered by
/// (tpower, harmonic, kind), and sin(0 u) never stored (identically zero).
/// The type is closed under addition, multiplication (product-to-sum
/// identities) and differentiation, so entire perturbation recursions can be
/// carried out without any floating-point rounding.
class TrigSeries {
public:
    TrigSeries() = default;

    /// c * t^p * cos(k u) or sin(k u).  A sin(0 u) term collapses to zero.
    static TrigSeries term(Rational coeff, int tpower, int harmonic, Trig kind);
    /// cos(k u)
    static TrigSeries cosine(int harmonic, Rational coeff = Rational(1));
    /// sin(k u)
    static TrigSeries sine(int harmonic, Rational coeff = Rational(1));
    /// plain constant c = c * cos(0 u)
    static TrigSeries constant(Rational c);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<TrigKey, Rational>& terms() const { return terms_; }

    /// Coefficient of a basis function (zero when absent).
    Rational coefficient(int tpower, int harmonic, Trig kind) const;

    /// Largest t-power present (0 for the empty series).
    int max_tpower() const;
    /// Largest harmonic present (0 for the empty series).
    int max_harmonic() const;
    bool has_secular_term() const { return max_tpower() > 0; }

    TrigSeries& operator+=(const TrigSeries& other);
    TrigSeries& operator-=(const TrigSeries& other);
    friend TrigSeries operator+(TrigSeries a, const TrigSeries& b) { return a += b; }
    friend TrigSeries operator-(TrigSeries a, const TrigSeries& b) { return a -= b; }
    TrigSeries operator-() const;

    /// Exact product via cos.cos = [cos(k1-k2)+cos(k1+k2)]/2 and friends;
    /// t-powers add.
    friend TrigSeries operator*(const TrigSeries& a, const TrigSeries& b);

    TrigSeries scaled(const Rational& c) const;

    /// Exact derivative with respect to the independent variable; the t^p
    /// factor is a power of that same variable, so the product rule applies:
    /// d/du [t^p cos(k u)] = p t^(p-1) cos(k u) - k t^p sin(k u).
    TrigSeries derivative() const;
    TrigSeries second_derivative() const { return derivative().derivative(); }

    /// Numeric evaluation at u (t = u).
    double evaluate(double u) const;

    /// Exact value at u = 0: only t^0 cos(k u) terms survive.
    Rational value_at_zero() const;

    friend bool operator==(const TrigSeries& a, const TrigSeries& b) = default;

    /// Deterministic text form, terms in key order, each printed as
    /// "num/den * t^p * cos(k u)" (t^p omitted when p = 0), joined by " + ".
    /// The empty series prints as "0".
    std::string str() const;

private:
    void add_term(const TrigKey& key, const Rational& coeff);

    std::map<TrigKey, Rational> terms_;

    friend TrigSeries solve_driven(const TrigSeries&, bool);
};

/// Coefficients of the resonant pair (cos u, sin u) at t-power zero: the
/// components of a forcing that integrate to secular terms.
struct ResonantPart {
    Rational cos1;
    Rational sin1;
    bool is_zero() const { return cos1 == 0 && sin1 == 0; }
};

ResonantPart resonant_part(const TrigSeries& f);

/// Unique solution of  y'' + y = f,  y(0) = 0, y'(0) = 0, by undetermined
/// coefficients.  Forcing terms t^p cos(k u) / t^p sin(k u) are handled for
/// any k; a resonant harmonic (k = 1) raises the ansatz degree to p + 1 and
/// produces secular output.  With allow_secular = false a nonzero
/// resonant_part(f) throws ResonantForcing instead.
TrigSeries solve_driven(const TrigSeries& f, bool allow_secular);

}  // namespace duffing
