#pragma once

#include "duffing/types.hpp"

namespace duffing {

/// A particle of mass m in V(q) = (v2/2) q^2 + (v4/4) q^4, released from rest
/// at amplitude A (a turning point).
struct PhysicalOscillator {
    double mass = 1.0;       // > 0
    double v2 = 1.0;         // > 0, energy / length^2
    double v4 = 0.0;         // energy / length^4
    double amplitude = 1.0;  // > 0, length
};

struct NondimResult {
    double lambda = 0.0;  // v4 A^2 / v2, must exceed -1
    double omega0 = 0.0;  // sqrt(v2 / m), rad / time
    double phi = 0.0;     // phase; 0 when starting at the turning point
};

/// Maps to the dimensionless oscillator via s = omega0 t + phi, x = q / A.
/// Throws DomainError if the parameters are invalid or lambda <= -1.
NondimResult to_dimensionless(const PhysicalOscillator& p);

/// Dimensionless period T(lambda) from the selected source, mapped back to
/// the caller's time units: T' = T / omega0.
double physical_period(const PhysicalOscillator& p, Method source, int N);

/// Turning-point amplitude for arbitrary initial state (q0, v0), from energy
/// conservation: v2 A^2/2 + v4 A^4/4 = m v0^2/2 + v2 q0^2/2 + v4 q0^4/4.
/// Returns the innermost positive turning point; throws DomainError when the
/// motion is unbounded (no positive root).
double amplitude_from_state(double mass, double v2, double v4, double q0, double v0);

}  // namespace duffing
