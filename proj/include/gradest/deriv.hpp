#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "gradest/errors.hpp"
#include "gradest/field.hpp"
#include "gradest/vec.hpp"

namespace gradest {

/// How a directional derivative is taken. `none` marks estimates that never
/// differentiate (probe-sum normal estimation); the deriv functions below
/// accept only the first three.
enum class DerivKind { central, complex, complex_line_avg, none };

inline const char* to_string(DerivKind k) {
    switch (k) {
    case DerivKind::central: return "central";
    case DerivKind::complex: return "complex";
    case DerivKind::complex_line_avg: return "complex-line-avg";
    case DerivKind::none: return "none";
    }
    return "?";
}

inline DerivKind deriv_kind_from_string(const std::string& s) {
    if (s == "central") return DerivKind::central;
    if (s == "complex") return DerivKind::complex;
    if (s == "complex-line-avg") return DerivKind::complex_line_avg;
    if (s == "none") return DerivKind::none;
    throw std::invalid_argument("unknown derivative kind '" + s + "'");
}

/// Step sizes reflecting each formula's error structure: central difference
/// balances truncation against roundoff near 1e-6; the complex step has no
/// roundoff floor, so the step can be far below representable spacing.
inline double default_h(DerivKind k) {
    switch (k) {
    case DerivKind::central: return 1e-6;
    case DerivKind::complex:
    case DerivKind::complex_line_avg: return 1e-100;
    case DerivKind::none: break;
    }
    throw std::invalid_argument("derivative kind 'none' has no step size");
}

/// d/dt F(p0 + n t) at t = 0, by one of the formulas below.
struct DerivEstimate {
    double value;
    UnitVector direction;
    double h;
    DerivKind kind;
};

namespace detail {
inline void check_h(double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("step size h must be positive and finite, got " + fmt_g17(h));
}
inline double checked_value(double v, const char* what) {
    if (!std::isfinite(v))
        throw EvaluationError(std::string(what) + " produced a non-finite value");
    return v;
}
} // namespace detail

/// (F(p0 + n h) - F(p0 - n h)) / (2h).
///
/// Both probes go through offset() with the same expression shape, which
/// makes the odd symmetry exact: flipping n negates the value bit-for-bit.
inline DerivEstimate central_diff(const ScalarField& field, const Vec& p0, const UnitVector& n,
                                  double h) {
    detail::check_h(h);
    double fp = field.eval_real(offset(p0, n, h));
    double fm = field.eval_real(offset(p0, n, -h));
    double v = detail::checked_value((fp - fm) / (2.0 * h), "central difference");
    return {v, n, h, DerivKind::central};
}

/// Im F(p0 + n i h) / h, coordinate j of the probe being (p0_j, h n_j).
///
/// No subtraction of nearby values occurs, so there is no cancellation and
/// the step can be arbitrarily small; on polynomials the result is exact to
/// roundoff for any h.
inline DerivEstimate complex_step(const ScalarField& field, const Vec& p0, const UnitVector& n,
                                  double h) {
    detail::check_h(h);
    double v = detail::checked_value(field.eval_complex(complex_offset(p0, n, h)).imag() / h,
                                     "complex step");
    return {v, n, h, DerivKind::complex};
}

/// Signed average over the two opposing line directions:
/// (Im F(p0 + n i h) - Im F(p0 - n i h)) / (2h).
///
/// Any field whose complex extension satisfies F(conj z) = conj F(z) (every
/// real-coefficient formula does) gives the two rays imaginary parts that
/// are exact negatives, so a plain sum of them is identically zero; the
/// difference is the combination in which the rays reinforce. For such
/// fields this equals the single-ray complex step; it differs only when the
/// complex extension breaks conjugate symmetry.
inline DerivEstimate complex_step_line_avg(const ScalarField& field, const Vec& p0,
                                           const UnitVector& n, double h) {
    detail::check_h(h);
    double ip = field.eval_complex(complex_offset(p0, n, h)).imag();
    double im = field.eval_complex(complex_offset(p0, n, -h)).imag();
    double v = detail::checked_value((ip - im) / (2.0 * h), "complex line average");
    return {v, n, h, DerivKind::complex_line_avg};
}

/// Dispatch over the three derivative formulas.
inline DerivEstimate directional_derivative(const ScalarField& field, const Vec& p0,
                                            const UnitVector& n, DerivKind kind, double h) {
    switch (kind) {
    case DerivKind::central: return central_diff(field, p0, n, h);
    case DerivKind::complex: return complex_step(field, p0, n, h);
    case DerivKind::complex_line_avg: return complex_step_line_avg(field, p0, n, h);
    case DerivKind::none: break;
    }
    throw std::invalid_argument("derivative kind 'none' cannot produce a directional derivative");
}

} // namespace gradest
