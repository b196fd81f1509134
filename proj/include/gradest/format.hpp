#pragma once

#include <cstdio>
#include <span>
#include <string>

namespace gradest {

/// Formats a double at 17 significant digits ("%.17g"), enough to round-trip
/// any finite value. All numeric text output in the library goes through this.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Joins values with a separator, each at 17 significant digits.
inline std::string join_g17(std::span<const double> values, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(sep);
        out += fmt_g17(values[i]);
    }
    return out;
}

} // namespace gradest
