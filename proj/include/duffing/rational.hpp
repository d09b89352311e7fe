#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace duffing {

/// Exact rational with arbitrary-precision integer parts.  Always kept in
/// lowest terms with a positive denominator; construction from a double is
/// exact (every finite double is a dyadic rational).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical "num/den" text form, denominator always shown ("3/4", "-1/32", "2/1").
inline std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace duffing
