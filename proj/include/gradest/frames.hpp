#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradest/directions.hpp"
#include "gradest/rotation.hpp"
#include "gradest/vec.hpp"

namespace gradest {

/// n mutually perpendicular unit directions spanning n-D space: the direction
/// source that yields one complete gradient from n line derivatives.
class OrthonormalFrame {
public:
    explicit OrthonormalFrame(std::vector<UnitVector> axes, double tol = 1e-12)
        : axes_(std::move(axes)) {
        if (axes_.empty()) throw std::invalid_argument("frame must have at least one axis");
        int n = axes_.front().dim();
        if (static_cast<int>(axes_.size()) != n)
            throw std::invalid_argument("frame in dimension " + std::to_string(n) + " needs " +
                                        std::to_string(n) + " axes, got " +
                                        std::to_string(axes_.size()));
        for (const auto& a : axes_)
            if (a.dim() != n) throw std::invalid_argument("frame mixes dimensions");
        for (std::size_t i = 0; i < axes_.size(); ++i)
            for (std::size_t j = i + 1; j < axes_.size(); ++j) {
                double d = dot(axes_[i].vec(), axes_[j].vec());
                if (!(std::abs(d) <= tol))
                    throw std::invalid_argument("frame axes not orthogonal (dot " + fmt_g17(d) +
                                                ")");
            }
    }

    int dim() const { return static_cast<int>(axes_.size()); }
    const UnitVector& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
    auto begin() const { return axes_.begin(); }
    auto end() const { return axes_.end(); }

private:
    std::vector<UnitVector> axes_;
};

/// The coordinate axes e_1..e_n.
inline OrthonormalFrame canonical_frame(int dim) {
    detail::check_dim(dim);
    std::vector<UnitVector> axes;
    for (int i = 0; i < dim; ++i) {
        Vec v = Vec::zero(dim);
        v[i] = 1.0;
        axes.emplace_back(v);
    }
    return OrthonormalFrame(std::move(axes));
}

inline OrthonormalFrame rotate_frame(const OrthonormalFrame& f, const RotationMatrix& r) {
    std::vector<UnitVector> axes;
    axes.reserve(static_cast<std::size_t>(f.dim()));
    for (const auto& a : f) axes.push_back(r.apply(a));
    return OrthonormalFrame(std::move(axes));
}

/// Haar-random frame: the canonical frame under a seed-determined random
/// rotation.
inline OrthonormalFrame random_frame(int dim, std::uint64_t seed) {
    return rotate_frame(canonical_frame(dim), random_rotation(dim, seed));
}

namespace detail {

/// Line representative of +-v: the member whose first nonzero coordinate is
/// positive. Negation is exact, so both members of an antipodal pair map to
/// identical bits.
inline UnitVector line_representative(const UnitVector& v) {
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] > 0.0) return v;
        if (v[i] < 0.0) return v.negated();
    }
    return v;
}

} // namespace detail

/// Collapses antipodal pairs to one representative per line and removes
/// near-duplicates (dot >= 1 - 1e-12), preserving first-occurrence order.
inline std::vector<UnitVector> collapse_to_lines(const DirectionSet& s) {
    std::vector<UnitVector> lines;
    for (const auto& v : s) {
        UnitVector rep = detail::line_representative(v);
        bool seen = false;
        for (const auto& have : lines)
            if (dot(have.vec(), rep.vec()) >= 1.0 - 1e-12) {
                seen = true;
                break;
            }
        if (!seen) lines.push_back(rep);
    }
    return lines;
}

namespace detail {

inline bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

inline OrthonormalFrame make_sorted_frame(std::vector<UnitVector> axes, double tol) {
    std::sort(axes.begin(), axes.end(),
              [](const UnitVector& a, const UnitVector& b) { return lex_less(a.vec(), b.vec()); });
    return OrthonormalFrame(std::move(axes), std::max(tol, 1e-12));
}

} // namespace detail

/// Exhaustive search for all maximal mutually-orthogonal direction subsets
/// of full dimension, after collapsing antipodes to lines. Axes within a
/// frame and frames in the result are in lexicographic coordinate order, so
/// the output is canonical. An empty result is meaningful: it says the set
/// cannot drive frame-based estimation.
inline std::vector<OrthonormalFrame> find_orthonormal_frames(const DirectionSet& s,
                                                             double tol = 1e-9) {
    if (!(tol >= 0.0)) throw std::invalid_argument("orthogonality tolerance must be >= 0");
    std::vector<UnitVector> lines = collapse_to_lines(s);
    std::vector<OrthonormalFrame> frames;
    auto ortho = [&](std::size_t a, std::size_t b) {
        return std::abs(dot(lines[a].vec(), lines[b].vec())) <= tol;
    };
    if (s.dim() == 1) {
        for (const auto& line : lines) frames.push_back(OrthonormalFrame({line}));
    } else if (s.dim() == 2) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                if (ortho(i, j)) frames.push_back(detail::make_sorted_frame({lines[i], lines[j]}, tol));
    } else {
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                if (!ortho(i, j)) continue;
                for (std::size_t k = j + 1; k < lines.size(); ++k)
                    if (ortho(i, k) && ortho(j, k))
                        frames.push_back(
                            detail::make_sorted_frame({lines[i], lines[j], lines[k]}, tol));
            }
    }
    std::sort(frames.begin(), frames.end(), [](const OrthonormalFrame& a, const OrthonormalFrame& b) {
        for (int i = 0; i < a.dim(); ++i) {
            if (detail::lex_less(a.axis(i).vec(), b.axis(i).vec())) return true;
            if (detail::lex_less(b.axis(i).vec(), a.axis(i).vec())) return false;
        }
        return false;
    });
    return frames;
}

/// Health and structure metrics for a direction set. line_count counts
/// antipode-collapsed directions; orthogonal_pairs counts line pairs within
/// the tolerance of perpendicular; frame_count is the exhaustive-search
/// result. min_pairwise_angle_deg is NaN for single-vector sets.
struct SetReport {
    std::string source;
    int dim = 0;
    std::size_t vector_count = 0;
    double max_unit_residual = 0.0;
    double vector_sum_norm = 0.0;
    double centroid_norm = 0.0;
    double min_pairwise_angle_deg = std::numeric_limits<double>::quiet_NaN();
    bool antipodal_closed = false;
    std::size_t line_count = 0;
    std::size_t orthogonal_pairs = 0;
    std::size_t frame_count = 0;
};

inline SetReport validate_set(const DirectionSet& s, double tol = 1e-9) {
    SetReport r;
    r.source = s.source();
    r.dim = s.dim();
    r.vector_count = s.size();
    Vec sum = Vec::zero(s.dim());
    for (const auto& v : s) {
        r.max_unit_residual = std::max(r.max_unit_residual, std::abs(v.vec().norm() - 1.0));
        sum = sum + v.vec();
    }
    r.vector_sum_norm = sum.norm();
    r.centroid_norm = (sum / static_cast<double>(s.size())).norm();
    double min_angle = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            double d = std::clamp(dot(s[i].vec(), s[j].vec()), -1.0, 1.0);
            double angle = std::acos(d) * 180.0 / std::numbers::pi;
            if (std::isnan(min_angle) || angle < min_angle) min_angle = angle;
        }
    r.min_pairwise_angle_deg = min_angle;
    r.antipodal_closed = s.antipodal_closed();
    std::vector<UnitVector> lines = collapse_to_lines(s);
    r.line_count = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (std::abs(dot(lines[i].vec(), lines[j].vec())) <= tol) ++r.orthogonal_pairs;
    r.frame_count = find_orthonormal_frames(s, tol).size();
    return r;
}

} // namespace gradest
