#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradest/deriv.hpp"
#include "gradest/directions.hpp"
#include "gradest/field.hpp"
#include "gradest/frames.hpp"
#include "gradest/rng.hpp"
#include "gradest/rotation.hpp"
#include "gradest/vec.hpp"

namespace gradest {

enum class Method { single_axis, multi_axis, multi_vector, hart };

inline const char* to_string(Method m) {
    switch (m) {
    case Method::single_axis: return "single-axis";
    case Method::multi_axis: return "multi-axis";
    case Method::multi_vector: return "multi-vector";
    case Method::hart: return "hart";
    }
    return "?";
}

inline Method method_from_string(const std::string& s) {
    if (s == "single-axis") return Method::single_axis;
    if (s == "multi-axis") return Method::multi_axis;
    if (s == "multi-vector") return Method::multi_vector;
    if (s == "hart") return Method::hart;
    throw std::invalid_argument("unknown method '" + s + "'");
}

/// Estimated gradient plus the bookkeeping needed to interpret it.
///
/// h is the derivative step size; for hart it holds the probe radius (the
/// only spatial scale that method has). k counts directional samples taken.
/// normalization is the factor by which the raw accumulated sum exceeds the
/// returned vector (1 when the sum is returned as-is). degenerate flags a
/// zero vector (norm < 1e-300), returned as-is; turning estimates into unit
/// directions is the caller's concern.
struct GradientEstimate {
    Vec vector;
    Method method;
    DerivKind deriv_kind;
    double h;
    std::size_t k;
    double normalization;
    bool degenerate;
};

namespace detail {

inline GradientEstimate finish(Vec v, Method m, DerivKind dk, double h, std::size_t k,
                               double normalization) {
    bool degenerate = v.norm() < degenerate_norm;
    return {v, m, dk, h, k, normalization, degenerate};
}

inline void check_probe_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("probe radius must be positive and finite, got " + fmt_g17(r));
}

} // namespace detail

/// One frame, one gradient: sum of d_j n_j over the frame's axes, where d_j
/// is the directional derivative along axis j. normalization = 1.
inline GradientEstimate single_axis(const ScalarField& field, const Vec& p0,
                                    const OrthonormalFrame& frame, DerivKind kind, double h) {
    detail::check_same_dim(field.dim(), frame.dim());
    Vec acc = Vec::zero(field.dim());
    for (const auto& axis : frame) {
        double d = directional_derivative(field, p0, axis, kind, h).value;
        acc = acc + d * axis.vec();
    }
    return detail::finish(acc, Method::single_axis, kind, h, static_cast<std::size_t>(frame.dim()),
                          1.0);
}

/// Average of single-axis estimates over many frames. normalization is the
/// frame count; the raw (unaveraged) frame sum is vector * normalization.
inline GradientEstimate multi_axis(const ScalarField& field, const Vec& p0,
                                   const std::vector<OrthonormalFrame>& frames, DerivKind kind,
                                   double h) {
    if (frames.empty()) throw std::invalid_argument("multi-axis needs at least one frame");
    Vec acc = Vec::zero(field.dim());
    std::size_t k = 0;
    for (const auto& frame : frames) {
        GradientEstimate e = single_axis(field, p0, frame, kind, h);
        acc = acc + e.vector;
        k += e.k;
    }
    double count = static_cast<double>(frames.size());
    return detail::finish(acc / count, Method::multi_axis, kind, h, k, count);
}

/// Projection sum over a direction set: (n/K) sum of d_k n_k.
/// normalization = K/n.
///
/// With the central difference on an antipodal-closed set, each pair is
/// evaluated once and reused with flipped sign; our generated sets store
/// antipodes as exact bitwise negations, so the reuse equals the skipped
/// evaluation bit-for-bit while halving field calls.
inline GradientEstimate multi_vector(const ScalarField& field, const Vec& p0,
                                     const DirectionSet& s, DerivKind kind, double h) {
    detail::check_same_dim(field.dim(), s.dim());
    const std::size_t K = s.size();
    std::vector<double> d(K, 0.0);
    std::vector<bool> have(K, false);
    for (std::size_t i = 0; i < K; ++i) {
        if (have[i]) continue;
        d[i] = directional_derivative(field, p0, s[i], kind, h).value;
        have[i] = true;
        if (kind == DerivKind::central) {
            int a = s.antipode_of(i);
            if (a >= 0 && !have[static_cast<std::size_t>(a)]) {
                d[static_cast<std::size_t>(a)] = -d[i];
                have[static_cast<std::size_t>(a)] = true;
            }
        }
    }
    Vec acc = Vec::zero(field.dim());
    for (std::size_t i = 0; i < K; ++i) acc = acc + d[i] * s[i].vec();
    double n_over_K = static_cast<double>(field.dim()) / static_cast<double>(K);
    double normalization = static_cast<double>(K) / static_cast<double>(field.dim());
    return detail::finish(acc * n_over_K, Method::multi_vector, kind, h, K, normalization);
}

/// Probe-sum normal estimation for indicator fields: sum of
/// F(p0 + radius n_k) n_k. Field values weight the directions directly; no
/// derivative is taken (deriv_kind = none), tangential contributions cancel
/// across the set, and the result points toward increasing F (outward for
/// the +1-outside convention). normalization = 1.
inline GradientEstimate hart_multisample(const ScalarField& field, const Vec& p0,
                                         const DirectionSet& s, double probe_radius) {
    detail::check_same_dim(field.dim(), s.dim());
    detail::check_probe_radius(probe_radius);
    Vec acc = Vec::zero(field.dim());
    for (const auto& n : s) acc = acc + field.eval_real(offset(p0, n, probe_radius)) * n.vec();
    return detail::finish(acc, Method::hart, DerivKind::none, probe_radius, s.size(), 1.0);
}

/// Full description of one estimation strategy.
///
/// h = 0 means "use the default for the derivative kind". Direction sources:
/// axis methods consume frames (given directly, or extracted from the
/// direction set when frames is empty); multi-vector and hart consume the
/// direction set. When seed is set, the source is re-rotated per query point
/// by a Haar rotation derived from (seed, point_index), which decorrelates
/// neighboring samples in grid sweeps without breaking reproducibility.
struct EstimatorConfig {
    Method method = Method::single_axis;
    DerivKind deriv_kind = DerivKind::complex;
    double h = 0.0;
    std::optional<DirectionSet> directions;
    std::vector<OrthonormalFrame> frames;
    double probe_radius = 1.0;
    std::optional<std::uint64_t> seed;
};

inline GradientEstimate estimate(const ScalarField& field, const Vec& p0,
                                 const EstimatorConfig& cfg, std::uint64_t point_index = 0) {
    double h = cfg.h;
    if (cfg.method != Method::hart) {
        if (h == 0.0)
            h = default_h(cfg.deriv_kind);
        else if (!(h > 0.0) || !std::isfinite(h))
            throw std::invalid_argument("step size h must be positive and finite, got " +
                                        fmt_g17(h));
    }

    std::optional<RotationMatrix> rot;
    std::optional<std::uint64_t> rot_seed;
    if (cfg.seed) {
        rot_seed = derive_seed(*cfg.seed, point_index);
        rot = random_rotation(field.dim(), *rot_seed);
    }

    if (cfg.method == Method::multi_vector || cfg.method == Method::hart) {
        if (!cfg.directions)
            throw std::invalid_argument(std::string(to_string(cfg.method)) +
                                        " needs a direction set");
        const DirectionSet& base = *cfg.directions;
        if (cfg.method == Method::multi_vector) {
            if (!rot) return multi_vector(field, p0, base, cfg.deriv_kind, h);
            return multi_vector(field, p0, rotate_set(base, *rot, rot_seed), cfg.deriv_kind, h);
        }
        if (!rot) return hart_multisample(field, p0, base, cfg.probe_radius);
        return hart_multisample(field, p0, rotate_set(base, *rot, rot_seed), cfg.probe_radius);
    }

    std::vector<OrthonormalFrame> frames = cfg.frames;
    if (frames.empty()) {
        if (!cfg.directions)
            throw std::invalid_argument(std::string(to_string(cfg.method)) +
                                        " needs frames or a direction set to extract them from");
        frames = find_orthonormal_frames(*cfg.directions);
        if (frames.empty())
            throw std::invalid_argument("direction set " + cfg.directions->source() +
                                        " contains no orthonormal frames");
    }
    if (rot)
        for (auto& f : frames) f = rotate_frame(f, *rot);

    if (cfg.method == Method::single_axis) {
        if (frames.size() != 1)
            throw std::invalid_argument("single-axis needs exactly one frame, got " +
                                        std::to_string(frames.size()) +
                                        " (use multi-axis to average over several)");
        return single_axis(field, p0, frames.front(), cfg.deriv_kind, h);
    }
    return multi_axis(field, p0, frames, cfg.deriv_kind, h);
}

} // namespace gradest
