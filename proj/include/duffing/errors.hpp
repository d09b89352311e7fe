#pragma once

#include <stdexcept>
#include <string>

namespace duffing {

/// Argument outside the validity domain of an operation (e.g. lambda <= -1).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// solve_driven was asked for a bounded solution but the forcing contains a
/// resonant cos(u)/sin(u) component.
class ResonantForcing : public std::runtime_error {
public:
    explicit ResonantForcing(const std::string& msg) : std::runtime_error(msg) {}
};

/// The adaptive integrator could not meet the requested local error.
class ToleranceNotMet : public std::runtime_error {
public:
    explicit ToleranceNotMet(const std::string& msg) : std::runtime_error(msg) {}
};

/// Truncated gamma partial sum is non-positive; the period formula breaks down.
class NegativeGamma : public std::runtime_error {
public:
    NegativeGamma(const std::string& msg, double lambda, double partial_sum)
        : std::runtime_error(msg), lambda(lambda), partial_sum(partial_sum) {}
    double lambda;
    double partial_sum;
};

/// A bracketing root search found no sign change.
class NoRoot : public std::runtime_error {
public:
    NoRoot(const std::string& msg, double g_lo, double g_hi)
        : std::runtime_error(msg), g_lo(g_lo), g_hi(g_hi) {}
    double g_lo;
    double g_hi;
};

/// PMS scan found no stationary point inside the bracket.
class NoStationaryPoint : public std::runtime_error {
public:
    explicit NoStationaryPoint(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace duffing
