#include "duffing/types.hpp"

#include <algorithm>
#include <cctype>

namespace duffing {

std::string method_name(Method m) {
    switch (m) {
        case Method::Naive: return "naive";
        case Method::LP: return "lp";
        case Method::ALP: return "alp";
        case Method::VLP: return "vlp";
        case Method::Exact: return "exact";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == "naive") return Method::Naive;
    if (s == "lp") return Method::LP;
    if (s == "alp") return Method::ALP;
    if (s == "vlp") return Method::VLP;
    if (s == "exact") return Method::Exact;
    return std::nullopt;
}

}  // namespace duffing
