#include "duffing/trig_series.hpp"

#include "duffing/errors.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace duffing {

namespace {

// Append one (possibly non-normalized) product term into an accumulator map.
// Handles cos(-k) = cos(k), sin(-k) = -sin(k) and drops sin(0 u).
void emit(std::map<TrigKey, Rational>& acc, int tpower, int harmonic, Trig kind,
          Rational coeff) {
    if (coeff == 0) return;
    if (harmonic < 0) {
        harmonic = -harmonic;
        if (kind == Trig::Sin) coeff = -coeff;
    }
    if (kind == Trig::Sin && harmonic == 0) return;
    TrigKey key{tpower, harmonic, kind};
    auto it = acc.find(key);
    if (it == acc.end()) {
        acc.emplace(key, std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    }
}

}  // namespace

TrigSeries TrigSeries::term(Rational coeff, int tpower, int harmonic, Trig kind) {
    assert(tpower >= 0 && harmonic >= 0);
    TrigSeries s;
    emit(s.terms_, tpower, harmonic, kind, std::move(coeff));
    return s;
}

TrigSeries TrigSeries::cosine(int harmonic, Rational coeff) {
    return term(std::move(coeff), 0, harmonic, Trig::Cos);
}

TrigSeries TrigSeries::sine(int harmonic, Rational coeff) {
    return term(std::move(coeff), 0, harmonic, Trig::Sin);
}

TrigSeries TrigSeries::constant(Rational c) {
    return term(std::move(c), 0, 0, Trig::Cos);
}

Rational TrigSeries::coefficient(int tpower, int harmonic, Trig kind) const {
    auto it = terms_.find(TrigKey{tpower, harmonic, kind});
    return it == terms_.end() ? Rational(0) : it->second;
}

int TrigSeries::max_tpower() const {
    int p = 0;
    for (const auto& [key, c] : terms_) p = std::max(p, key.tpower);
    return p;
}

int TrigSeries::max_harmonic() const {
    int k = 0;
    for (const auto& [key, c] : terms_) k = std::max(k, key.harmonic);
    return k;
}

void TrigSeries::add_term(const TrigKey& key, const Rational& coeff) {
    emit(terms_, key.tpower, key.harmonic, key.kind, coeff);
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

TrigSeries& TrigSeries::operator-=(const TrigSeries& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

TrigSeries TrigSeries::operator-() const {
    TrigSeries out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

TrigSeries TrigSeries::scaled(const Rational& c) const {
    TrigSeries out;
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

TrigSeries operator*(const TrigSeries& a, const TrigSeries& b) {
    TrigSeries out;
    const Rational half(1, 2);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const Rational c = ca * cb * half;
            const int p = ka.tpower + kb.tpower;
            const int sum = ka.harmonic + kb.harmonic;
            const int dif = ka.harmonic - kb.harmonic;
            if (ka.kind == Trig::Cos && kb.kind == Trig::Cos) {
                // cos cos = [cos(dif) + cos(sum)] / 2
                emit(out.terms_, p, dif, Trig::Cos, c);
                emit(out.terms_, p, sum, Trig::Cos, c);
            } else if (ka.kind == Trig::Sin && kb.kind == Trig::Sin) {
                // sin sin = [cos(dif) - cos(sum)] / 2
                emit(out.terms_, p, dif, Trig::Cos, c);
                emit(out.terms_, p, sum, Trig::Cos, -c);
            } else if (ka.kind == Trig::Sin) {
                // sin(k1) cos(k2) = [sin(sum) + sin(dif)] / 2
                emit(out.terms_, p, sum, Trig::Sin, c);
                emit(out.terms_, p, dif, Trig::Sin, c);
            } else {
                // cos(k1) sin(k2) = [sin(sum) - sin(dif)] / 2
                emit(out.terms_, p, sum, Trig::Sin, c);
                emit(out.terms_, p, dif, Trig::Sin, -c);
            }
        }
    }
    return out;
}

TrigSeries TrigSeries::derivative() const {
    TrigSeries out;
    for (const auto& [key, c] : terms_) {
        if (key.tpower > 0)
            emit(out.terms_, key.tpower - 1, key.harmonic, key.kind, c * key.tpower);
        if (key.harmonic > 0) {
            if (key.kind == Trig::Cos)
                emit(out.terms_, key.tpower, key.harmonic, Trig::Sin, -c * key.harmonic);
            else
                emit(out.terms_, key.tpower, key.harmonic, Trig::Cos, c * key.harmonic);
        }
    }
    return out;
}

double TrigSeries::evaluate(double u) const {
    double sum = 0.0;
    for (const auto& [key, c] : terms_) {
        const double angle = static_cast<double>(key.harmonic) * u;
        const double trig = key.kind == Trig::Cos ? std::cos(angle) : std::sin(angle);
        sum += to_double(c) * std::pow(u, key.tpower) * trig;
    }
    return sum;
}

Rational TrigSeries::value_at_zero() const {
    Rational v(0);
    for (const auto& [key, c] : terms_)
        if (key.tpower == 0 && key.kind == Trig::Cos) v += c;
    return v;
}

std::string TrigSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_string(c);
        if (key.tpower > 0) os << " * t^" << key.tpower;
        os << (key.kind == Trig::Cos ? " * cos(" : " * sin(") << key.harmonic << " u)";
    }
    return os.str();
}

ResonantPart resonant_part(const TrigSeries& f) {
    return ResonantPart{f.coefficient(0, 1, Trig::Cos), f.coefficient(0, 1, Trig::Sin)};
}

namespace {

// Exact Gaussian elimination; the systems built below are nonsingular by
// construction (L restricted to the ansatz space is invertible).
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("solve_driven: singular ansatz system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

// Particular solution of y'' + y = (forcing terms at one harmonic k).
// Ansatz: t^q cos/sin(k u) with q <= P for k != 1, and 1 <= q <= P + 1 for
// the resonant harmonic (the q = 0 pair spans the kernel of L).
TrigSeries solve_one_harmonic(int k, const std::vector<std::pair<TrigKey, Rational>>& terms) {
    int pmax = 0;
    for (const auto& [key, c] : terms) pmax = std::max(pmax, key.tpower);

    std::vector<TrigKey> domain;
    const int qlo = (k == 1) ? 1 : 0;
    const int qhi = (k == 1) ? pmax + 1 : pmax;
    for (int q = qlo; q <= qhi; ++q) {
        domain.push_back(TrigKey{q, k, Trig::Cos});
        if (k > 0) domain.push_back(TrigKey{q, k, Trig::Sin});
    }

    // Codomain: same harmonic, t-powers 0..pmax.
    std::vector<TrigKey> codomain;
    for (int q = 0; q <= pmax; ++q) {
        codomain.push_back(TrigKey{q, k, Trig::Cos});
        if (k > 0) codomain.push_back(TrigKey{q, k, Trig::Sin});
    }
    assert(domain.size() == codomain.size());

    const std::size_t n = domain.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        TrigSeries e = TrigSeries::term(Rational(1), domain[j].tpower, domain[j].harmonic,
                                        domain[j].kind);
        TrigSeries image = e.second_derivative() + e;
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = image.coefficient(codomain[i].tpower, codomain[i].harmonic,
                                        codomain[i].kind);
    }

    std::vector<Rational> rhs(n, Rational(0));
    for (const auto& [key, c] : terms)
        for (std::size_t i = 0; i < n; ++i)
            if (codomain[i] == key) rhs[i] = c;

    const std::vector<Rational> x = solve_linear(std::move(m), std::move(rhs));

    TrigSeries y;
    for (std::size_t j = 0; j < n; ++j)
        y += TrigSeries::term(x[j], domain[j].tpower, domain[j].harmonic, domain[j].kind);
    return y;
}

}  // namespace

TrigSeries solve_driven(const TrigSeries& f, bool allow_secular) {
    if (!allow_secular) {
        const ResonantPart res = resonant_part(f);
        if (!res.is_zero())
            throw ResonantForcing("solve_driven: resonant forcing cos1=" +
                                  rational_string(res.cos1) + " sin1=" +
                                  rational_string(res.sin1));
    }

    // Split the forcing by harmonic and solve each block independently.
    std::map<int, std::vector<std::pair<TrigKey, Rational>>> by_harmonic;
    for (const auto& [key, c] : f.terms()) by_harmonic[key.harmonic].emplace_back(key, c);

    TrigSeries y;
    for (const auto& [k, terms] : by_harmonic) y += solve_one_harmonic(k, terms);

    // Homogeneous piece fixes y(0) = 0, y'(0) = 0.
    const Rational a = -y.value_at_zero();
    const Rational b = -y.derivative().value_at_zero();
    y += TrigSeries::cosine(1, a);
    y += TrigSeries::sine(1, b);
    return y;
}

}  // namespace duffing
