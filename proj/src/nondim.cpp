#include "duffing/nondim.hpp"

#include "duffing/engines.hpp"
#include "duffing/errors.hpp"

#include <cmath>
#include <string>

namespace duffing {

NondimResult to_dimensionless(const PhysicalOscillator& p) {
    if (!(p.mass > 0.0)) throw DomainError("mass must be positive");
    if (!(p.v2 > 0.0)) throw DomainError("v2 must be positive");
    if (!(p.amplitude > 0.0)) throw DomainError("amplitude must be positive");
    NondimResult r;
    r.lambda = p.v4 * p.amplitude * p.amplitude / p.v2;
    if (!(r.lambda > -1.0))
        throw DomainError("lambda = v4 A^2 / v2 = " + std::to_string(r.lambda) +
                          " <= -1: motion is not periodic at this amplitude");
    r.omega0 = std::sqrt(p.v2 / p.mass);
    r.phi = 0.0;  // caller starts at the turning point
    return r;
}

double physical_period(const PhysicalOscillator& p, Method source, int N) {
    const NondimResult r = to_dimensionless(p);
    return period_by_method(source, r.lambda, N).value / r.omega0;
}

double amplitude_from_state(double mass, double v2, double v4, double q0, double v0) {
    if (!(mass > 0.0) || !(v2 > 0.0))
        throw DomainError("mass and v2 must be positive");
    const double e = 0.5 * mass * v0 * v0 + 0.5 * v2 * q0 * q0 +
                     0.25 * v4 * q0 * q0 * q0 * q0;
    if (!(e > 0.0)) throw DomainError("state has no positive energy");
    if (v4 == 0.0) return std::sqrt(2.0 * e / v2);

    // Quadratic in z = A^2: (v4/4) z^2 + (v2/2) z - e = 0.  The root below is
    // the unique positive one for v4 > 0 and the inner turning point for a
    // soft spring (v4 < 0).
    const double disc = 0.25 * v2 * v2 + v4 * e;
    if (disc < 0.0) throw DomainError("no turning point: motion is unbounded");
    const double z = (-0.5 * v2 + std::sqrt(disc)) / (0.5 * v4);
    if (!(z > 0.0)) throw DomainError("no turning point: motion is unbounded");
    return std::sqrt(z);
}

}  // namespace duffing
