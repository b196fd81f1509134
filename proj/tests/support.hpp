#pragma once

#include <cmath>
#include <random>

#include "gradest/gradest.hpp"

namespace testsup {

/// |a - b| relative to |b|, or absolute when b is zero.
inline double rel_err(double a, double b) {
    double d = std::abs(a - b);
    return b != 0.0 ? d / std::abs(b) : d;
}

inline double rel_err(const gradest::Vec& a, const gradest::Vec& b) {
    double bn = b.norm();
    double d = (a - b).norm();
    return bn != 0.0 ? d / bn : d;
}

/// Deterministic draw in [lo, hi) through the library's own uniform bits, so
/// test inputs are identical on every platform.
inline double rand_in(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * gradest::uniform01(gen);
}

inline gradest::Vec rand_point2(std::mt19937_64& gen, double lo, double hi) {
    return {rand_in(gen, lo, hi), rand_in(gen, lo, hi)};
}

inline gradest::Vec rand_point3(std::mt19937_64& gen, double lo, double hi) {
    return {rand_in(gen, lo, hi), rand_in(gen, lo, hi), rand_in(gen, lo, hi)};
}

} // namespace testsup
