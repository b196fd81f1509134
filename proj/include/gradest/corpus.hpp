#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "gradest/field.hpp"
#include "gradest/vec.hpp"

namespace gradest {

using FieldParams = std::map<std::string, double>;

namespace detail {

/// Pulls named parameters out of a FieldParams map and rejects leftovers, so
/// a typo like radius=1 fails loudly instead of silently using a default.
class ParamReader {
public:
    ParamReader(std::string field_name, const FieldParams& params)
        : field_(std::move(field_name)), params_(params) {}

    double require(const std::string& key) {
        auto it = params_.find(key);
        if (it == params_.end())
            throw std::invalid_argument("field " + field_ + " requires parameter '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    double get_or(const std::string& key, double fallback) {
        auto it = params_.find(key);
        if (it == params_.end()) return fallback;
        used_.insert(key);
        return it->second;
    }

    void finish() const {
        for (const auto& [key, value] : params_) {
            (void)value;
            if (!used_.contains(key))
                throw std::invalid_argument("field " + field_ + " does not take parameter '" +
                                            key + "'");
        }
    }

private:
    std::string field_;
    const FieldParams& params_;
    std::set<std::string> used_;
};

/// s^a for complex s and real a > 0. std::pow on a zero complex base is not
/// reliably 0 across libm implementations, so that case is pinned by hand.
inline std::complex<double> cpow_pos(std::complex<double> s, double a) {
    if (s.real() == 0.0 && s.imag() == 0.0) return {0.0, 0.0};
    return std::pow(s, a);
}

} // namespace detail

/// Fixed catalog of test fields addressable by name.
///
/// Smooth entries (quadratic1d, circle0..circle3, sphere3d) carry complex
/// evaluation and an analytic gradient. Indicator entries (halfplane2d,
/// disk2d, mandelbrot2d) return +1 outside the shape and -1 inside and carry
/// neither. All fields are defined on the whole plane or space; callers pick
/// the evaluation region.
///
/// Parameters are required unless stated:
///   quadratic1d(a,b,c)       a x^2 + b x + c on the line
///   circle0(r)               x^2 + y^2 - r^2
///   circle1(r)               (x^2 + y^2)/r^2 - 1
///   circle2(r)               sqrt(x^2 + y^2) - r
///   circle3(r,a)             (x^2 + y^2)^a - r^(2a), a > 0
///   sphere3d(r)              x^2 + y^2 + z^2 - r^2
///   halfplane2d              sign of y
///   disk2d(r)                +1 iff x^2 + y^2 >= r^2
///   mandelbrot2d(max_iter)   escape-time indicator, max_iter defaults to 256
inline ScalarField corpus_field(const std::string& name, const FieldParams& params = {}) {
    detail::ParamReader pr(name, params);

    if (name == "quadratic1d") {
        double a = pr.require("a"), b = pr.require("b"), c = pr.require("c");
        pr.finish();
        auto f = ScalarField::from_complex(name, 1, [a, b, c](const CVec& p) {
            std::complex<double> x = p[0];
            return a * x * x + b * x + c;
        });
        f.with_gradient([a, b](const Vec& p) { return Vec(2.0 * a * p[0] + b); });
        return f;
    }

    if (name == "circle0") {
        double r = pr.require("r");
        pr.finish();
        double r2 = r * r;
        auto f = ScalarField::from_complex(name, 2, [r2](const CVec& p) {
            return p[0] * p[0] + p[1] * p[1] - r2;
        });
        f.with_gradient([](const Vec& p) { return Vec(2.0 * p[0], 2.0 * p[1]); });
        return f;
    }

    if (name == "circle1") {
        double r = pr.require("r");
        pr.finish();
        double r2 = r * r;
        auto f = ScalarField::from_complex(name, 2, [r2](const CVec& p) {
            return (p[0] * p[0] + p[1] * p[1]) / r2 - 1.0;
        });
        f.with_gradient([r2](const Vec& p) { return Vec(2.0 * p[0] / r2, 2.0 * p[1] / r2); });
        return f;
    }

    if (name == "circle2") {
        double r = pr.require("r");
        pr.finish();
        auto f = ScalarField::from_complex(name, 2, [r](const CVec& p) {
            return std::sqrt(p[0] * p[0] + p[1] * p[1]) - r;
        });
        f.with_gradient([](const Vec& p) {
            double len = std::sqrt(p[0] * p[0] + p[1] * p[1]);
            return Vec(p[0] / len, p[1] / len);
        });
        return f;
    }

    if (name == "circle3") {
        double r = pr.require("r"), a = pr.require("a");
        pr.finish();
        if (!(a > 0.0))
            throw std::invalid_argument("field circle3 requires a > 0, got a=" + fmt_g17(a));
        double offset = std::pow(r * r, a);
        auto f = ScalarField::from_complex(name, 2, [a, offset](const CVec& p) {
            return detail::cpow_pos(p[0] * p[0] + p[1] * p[1], a) - offset;
        });
        f.with_gradient([a](const Vec& p) {
            double s = p[0] * p[0] + p[1] * p[1];
            double scale = 2.0 * a * std::pow(s, a - 1.0);
            return Vec(scale * p[0], scale * p[1]);
        });
        return f;
    }

    if (name == "sphere3d") {
        double r = pr.require("r");
        pr.finish();
        double r2 = r * r;
        auto f = ScalarField::from_complex(name, 3, [r2](const CVec& p) {
            return p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - r2;
        });
        f.with_gradient([](const Vec& p) { return Vec(2.0 * p[0], 2.0 * p[1], 2.0 * p[2]); });
        return f;
    }

    if (name == "halfplane2d") {
        pr.finish();
        return ScalarField(name, 2, [](const Vec& p) { return p[1] >= 0.0 ? 1.0 : -1.0; });
    }

    if (name == "disk2d") {
        double r = pr.require("r");
        pr.finish();
        double r2 = r * r;
        return ScalarField(name, 2, [r2](const Vec& p) {
            return p[0] * p[0] + p[1] * p[1] >= r2 ? 1.0 : -1.0;
        });
    }

    if (name == "mandelbrot2d") {
        double raw = pr.get_or("max_iter", 256.0);
        pr.finish();
        if (!(raw >= 1.0) || raw != std::floor(raw))
            throw std::invalid_argument("field mandelbrot2d requires integer max_iter >= 1, got " +
                                        fmt_g17(raw));
        int max_iter = static_cast<int>(raw);
        return ScalarField(name, 2, [max_iter](const Vec& p) {
            // escape-time test with radius 2: +1 once |z| leaves the disk,
            // -1 if it never does within max_iter steps
            double cr = p[0], ci = p[1];
            double zr = 0.0, zi = 0.0;
            for (int i = 0; i < max_iter; ++i) {
                double zr2 = zr * zr, zi2 = zi * zi;
                if (zr2 + zi2 > 4.0) return 1.0;
                double next_r = zr2 - zi2 + cr;
                zi = 2.0 * zr * zi + ci;
                zr = next_r;
            }
            return -1.0;
        });
    }

    throw std::invalid_argument("unknown field name '" + name + "'");
}

/// exp(x) sin(y): a smooth non-polynomial field used in step-size studies,
/// where finite differences hit the usual truncation/roundoff tradeoff but
/// the complex step does not.
inline ScalarField expsin_field() {
    auto f = ScalarField::from_complex("expsin2d", 2, [](const CVec& p) {
        return std::exp(p[0]) * std::sin(p[1]);
    });
    f.with_gradient([](const Vec& p) {
        double e = std::exp(p[0]);
        return Vec(e * std::sin(p[1]), e * std::cos(p[1]));
    });
    return f;
}

/// Analytic gradient scaled to unit length: the common ground truth that all
/// same-boundary implicit forms share regardless of gradient magnitude.
inline Vec unit_gradient(const ScalarField& field, const Vec& p) {
    return field.gradient(p).normalized();
}

} // namespace gradest
