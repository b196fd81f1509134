#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "gradest/deriv.hpp"
#include "gradest/errors.hpp"
#include "gradest/field.hpp"
#include "gradest/format.hpp"
#include "gradest/vec.hpp"

namespace gradest {

/// count values from start to stop inclusive, evenly spaced in log scale
/// (a geometric progression). Endpoints are pinned exactly; count = 1
/// yields just start (and requires start == stop).
inline std::vector<double> log_spaced(double start, double stop, int count) {
    if (count < 1) throw std::invalid_argument("need count >= 1");
    if (!(start > 0.0) || !(stop > 0.0))
        throw std::invalid_argument("log spacing needs positive endpoints, got " + fmt_g17(start) +
                                    " and " + fmt_g17(stop));
    if (count == 1) {
        if (start != stop)
            throw std::invalid_argument("count=1 needs equal endpoints");
        return {start};
    }
    std::vector<double> v(static_cast<std::size_t>(count));
    double la = std::log(start), lb = std::log(stop);
    for (int i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (count - 1));
    v.front() = start;
    v.back() = stop;
    return v;
}

/// count values from start to stop inclusive, evenly spaced arithmetically,
/// endpoints pinned exactly.
inline std::vector<double> lin_spaced(double start, double stop, int count) {
    if (count < 1) throw std::invalid_argument("need count >= 1");
    if (count == 1) {
        if (start != stop)
            throw std::invalid_argument("count=1 needs equal endpoints");
        return {start};
    }
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
    v.front() = start;
    v.back() = stop;
    return v;
}

/// One step-size benchmark row. rel_error is NaN when the true directional
/// derivative is exactly zero.
struct HSweepRow {
    double h;
    DerivKind kind;
    double estimate;
    double abs_error;
    double rel_error;
};

/// Benchmarks the given derivative kinds along direction n at p0 over a list
/// of step sizes, against the analytic directional derivative grad F . n.
/// Rows are ordered h-major (all kinds for the first h, then the next h),
/// deterministically.
inline std::vector<HSweepRow> h_sweep(const ScalarField& field, const Vec& p0, const UnitVector& n,
                                      const std::vector<double>& h_values,
                                      const std::vector<DerivKind>& kinds) {
    if (!field.has_gradient())
        throw FieldCapabilityError("field " + field.name() +
                                   " has no analytic gradient to benchmark against");
    if (h_values.empty()) throw std::invalid_argument("h sweep needs at least one step size");
    if (kinds.empty()) throw std::invalid_argument("h sweep needs at least one derivative kind");
    double truth = dot(field.gradient(p0), n.vec());
    std::vector<HSweepRow> rows;
    rows.reserve(h_values.size() * kinds.size());
    for (double h : h_values) {
        for (DerivKind kind : kinds) {
            double est = directional_derivative(field, p0, n, kind, h).value;
            double abs_err = std::abs(est - truth);
            double rel_err = truth != 0.0 ? abs_err / std::abs(truth)
                                          : std::numeric_limits<double>::quiet_NaN();
            rows.push_back({h, kind, est, abs_err, rel_err});
        }
    }
    return rows;
}

/// CSV: h, kind, estimate, abs_error, rel_error; floats at 17 significant
/// digits, LF line endings.
inline void write_sweep_csv(const std::vector<HSweepRow>& rows, std::ostream& out) {
    out << "h,kind,estimate,abs_error,rel_error\n";
    for (const auto& r : rows)
        out << fmt_g17(r.h) << ',' << to_string(r.kind) << ',' << fmt_g17(r.estimate) << ','
            << fmt_g17(r.abs_error) << ',' << fmt_g17(r.rel_error) << '\n';
}

} // namespace gradest
