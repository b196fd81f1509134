#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gradest/errors.hpp"
#include "gradest/estimators.hpp"
#include "gradest/field.hpp"
#include "gradest/format.hpp"
#include "gradest/vec.hpp"

namespace gradest {

/// Alignment of two nonzero vectors as the dot product of their unit forms,
/// clamped to [-1, 1] against roundoff. 1 is perfect agreement, -1 exactly
/// opposite.
inline double cos_error(const Vec& est, const Vec& truth) {
    double en = est.norm(), tn = truth.norm();
    if (!(en >= degenerate_norm))
        throw DegenerateGradientError("cos_error: estimate is (near) zero, norm " + fmt_g17(en));
    if (!(tn >= degenerate_norm))
        throw DegenerateGradientError("cos_error: ground truth is (near) zero, norm " +
                                      fmt_g17(tn));
    return std::clamp(dot(est / en, truth / tn), -1.0, 1.0);
}

inline double cos_error(const GradientEstimate& est, const Vec& truth) {
    return cos_error(est.vector, truth);
}

/// One pixel of an error map. epsilon = (cos_theta + 1)/2 maps alignment to
/// [0,1]. Degenerate samples (oracle inside the exclusion radius, or either
/// vector below 1e-300, or a failed evaluation) carry the rendering
/// sentinel: epsilon 0, cos_theta -1, est_norm 0.
struct ErrorSample {
    Vec point;
    double cos_theta;
    double epsilon;
    double est_norm;
    bool degenerate;
};

struct Bounds2D {
    double xmin, xmax, ymin, ymax;

    Bounds2D(double x0, double x1, double y0, double y1) : xmin(x0), xmax(x1), ymin(y0), ymax(y1) {
        if (!(xmin < xmax) || !(ymin < ymax))
            throw std::invalid_argument("bounds must satisfy xmin < xmax and ymin < ymax, got [" +
                                        fmt_g17(xmin) + "," + fmt_g17(xmax) + "]x[" +
                                        fmt_g17(ymin) + "," + fmt_g17(ymax) + "]");
    }
};

/// Row-major pixel grid of error samples; row 0 runs along the ymax edge
/// (image top), matching the PGM writer's top-first row order.
class ErrorGrid {
public:
    ErrorGrid(Bounds2D bounds, int width, int height, std::vector<ErrorSample> samples)
        : bounds_(bounds), width_(width), height_(height), samples_(std::move(samples)) {
        if (width_ < 1 || height_ < 1)
            throw std::invalid_argument("grid needs width >= 1 and height >= 1");
        if (samples_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_))
            throw std::invalid_argument("grid sample count does not match width x height");
    }

    const Bounds2D& bounds() const { return bounds_; }
    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<ErrorSample>& samples() const { return samples_; }
    const ErrorSample& at(int row, int col) const {
        return samples_[static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
                        static_cast<std::size_t>(col)];
    }

private:
    Bounds2D bounds_;
    int width_, height_;
    std::vector<ErrorSample> samples_;
};

namespace detail {

inline ErrorSample degenerate_sample(const Vec& p) { return {p, -1.0, 0.0, 0.0, true}; }

inline ErrorSample error_sample_at(const ScalarField& field, const EstimatorConfig& cfg,
                                   const Vec& p, std::uint64_t index, double exclusion_radius) {
    try {
        Vec truth = field.gradient(p);
        if (truth.norm() < exclusion_radius) return degenerate_sample(p);
        GradientEstimate est = estimate(field, p, cfg, index);
        if (est.degenerate) return degenerate_sample(p);
        double c = cos_error(est.vector, truth);
        return {p, c, (c + 1.0) / 2.0, est.vector.norm(), false};
    } catch (const EvaluationError&) {
        // non-finite field or oracle value at this pixel (singular point)
        return degenerate_sample(p);
    } catch (const DegenerateGradientError&) {
        return degenerate_sample(p);
    }
}

} // namespace detail

/// Compares the configured estimator against the field's analytic gradient
/// at every pixel center of a width x height grid over bounds. Pixels where
/// the oracle norm falls below exclusion_radius are marked degenerate
/// rather than scored. Per-pixel work is independent; parallel=true fans
/// rows out over hardware threads and is sample-for-sample identical to the
/// serial path because each pixel's randomness is derived from (seed, pixel
/// index), never from execution order.
inline ErrorGrid error_map(const ScalarField& field, const EstimatorConfig& cfg, Bounds2D bounds,
                           int width, int height, double exclusion_radius = 1e-6,
                           bool parallel = false) {
    if (!field.has_gradient())
        throw FieldCapabilityError("field " + field.name() +
                                   " has no analytic gradient to map errors against");
    detail::check_same_dim(field.dim(), 2);
    if (width < 1 || height < 1)
        throw std::invalid_argument("error map needs width >= 1 and height >= 1");
    if (!(exclusion_radius >= 0.0))
        throw std::invalid_argument("exclusion radius must be >= 0");

    const double dx = (bounds.xmax - bounds.xmin) / width;
    const double dy = (bounds.ymax - bounds.ymin) / height;
    auto pixel_center = [&](int row, int col) {
        return Vec(bounds.xmin + (col + 0.5) * dx, bounds.ymax - (row + 0.5) * dy);
    };

    std::vector<ErrorSample> samples(
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
        detail::degenerate_sample(Vec(0.0, 0.0)));
    auto fill_rows = [&](int row_begin, int row_end) {
        for (int r = row_begin; r < row_end; ++r)
            for (int c = 0; c < width; ++c) {
                std::uint64_t index = static_cast<std::uint64_t>(r) *
                                          static_cast<std::uint64_t>(width) +
                                      static_cast<std::uint64_t>(c);
                samples[index] =
                    detail::error_sample_at(field, cfg, pixel_center(r, c), index,
                                            exclusion_radius);
            }
    };

    if (!parallel || height == 1) {
        fill_rows(0, height);
    } else {
        unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                              static_cast<unsigned>(height));
        if (workers < 2) {
            fill_rows(0, height);
        } else {
            std::vector<std::future<void>> tasks;
            int chunk = (height + static_cast<int>(workers) - 1) / static_cast<int>(workers);
            for (int start = 0; start < height; start += chunk)
                tasks.push_back(std::async(std::launch::async, fill_rows, start,
                                           std::min(start + chunk, height)));
            for (auto& t : tasks) t.get();
        }
    }
    return ErrorGrid(bounds, width, height, std::move(samples));
}

/// Scalar summary of a grid; degenerate pixels are counted but excluded
/// from every statistic. Quantiles are nearest-rank (no interpolation);
/// angle errors are acos(cos_theta) in degrees.
struct ErrorStats {
    std::size_t sample_count = 0;
    std::size_t degenerate_count = 0;
    double min_epsilon = 0.0;
    double mean_epsilon = 0.0;
    double median_epsilon = 0.0;
    double angle_p50_deg = 0.0;
    double angle_p90_deg = 0.0;
    double angle_p99_deg = 0.0;
    double angle_max_deg = 0.0;
};

inline ErrorStats error_stats(const ErrorGrid& grid) {
    std::vector<double> eps, angles;
    ErrorStats st;
    for (const auto& s : grid.samples()) {
        if (s.degenerate) {
            ++st.degenerate_count;
            continue;
        }
        eps.push_back(s.epsilon);
        angles.push_back(std::acos(std::clamp(s.cos_theta, -1.0, 1.0)) * 180.0 /
                         std::numbers::pi);
    }
    if (eps.empty())
        throw DegenerateGradientError("error grid has no non-degenerate samples to summarize");
    std::sort(eps.begin(), eps.end());
    std::sort(angles.begin(), angles.end());
    auto rank = [](const std::vector<double>& v, double q) {
        std::size_t idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
        return v[std::max<std::size_t>(idx, 1) - 1];
    };
    st.sample_count = eps.size();
    st.min_epsilon = eps.front();
    double sum = 0.0;
    for (double e : eps) sum += e;
    st.mean_epsilon = sum / static_cast<double>(eps.size());
    st.median_epsilon = rank(eps, 0.5);
    st.angle_p50_deg = rank(angles, 0.5);
    st.angle_p90_deg = rank(angles, 0.9);
    st.angle_p99_deg = rank(angles, 0.99);
    st.angle_max_deg = angles.back();
    return st;
}

/// Per-pixel CSV: x, y, cos_theta, epsilon, est_norm, degenerate, one row
/// per sample in grid (row-major) order, floats at 17 significant digits,
/// LF line endings.
inline void write_grid_csv(const ErrorGrid& grid, std::ostream& out) {
    out << "x,y,cos_theta,epsilon,est_norm,degenerate\n";
    for (const auto& s : grid.samples())
        out << fmt_g17(s.point[0]) << ',' << fmt_g17(s.point[1]) << ',' << fmt_g17(s.cos_theta)
            << ',' << fmt_g17(s.epsilon) << ',' << fmt_g17(s.est_norm) << ','
            << (s.degenerate ? 1 : 0) << '\n';
}

} // namespace gradest
