#pragma once

#include <optional>
#include <string>

namespace duffing {

/// Period sources: the four expansion engines plus the exact elliptic result.
enum class Method { Naive, LP, ALP, VLP, Exact };

std::string method_name(Method m);

/// Parse "lp", "alp", "vlp", "exact", "naive" (case-insensitive).
std::optional<Method> parse_method(const std::string& name);

/// A period value together with where it came from.
struct PeriodEstimate {
    double value = 0.0;  // > 0
    Method method = Method::Exact;
    int order = 0;       // truncation order N (0 for exact)
    double lambda = 0.0;

    // Method-specific diagnostics.
    std::optional<double> alpha;      // VLP: PMS point
    std::optional<double> omega;      // ALP: self-consistent frequency
    std::optional<double> gamma_sum;  // LP/VLP: truncated gamma at (lambda[, alpha])
};

}  // namespace duffing
