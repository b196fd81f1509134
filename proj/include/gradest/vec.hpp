#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include "gradest/errors.hpp"
#include "gradest/format.hpp"

namespace gradest {

inline constexpr int max_dim = 3;

/// Norms below this are treated as "no direction here" wherever a direction
/// is required.
inline constexpr double degenerate_norm = 1e-300;

namespace detail {
inline void check_dim(int n) {
    if (n < 1 || n > max_dim)
        throw std::invalid_argument("dimension must be 1, 2, or 3, got " + std::to_string(n));
}
inline void check_same_dim(int a, int b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}
} // namespace detail

/// Real coordinate vector in 1, 2, or 3 dimensions. Doubles as a point and a
/// displacement; a plain value type with no hidden state.
class Vec {
public:
    explicit Vec(double x) : c_{x, 0, 0}, n_(1) {}
    Vec(double x, double y) : c_{x, y, 0}, n_(2) {}
    Vec(double x, double y, double z) : c_{x, y, z}, n_(3) {}

    static Vec zero(int dim) {
        detail::check_dim(dim);
        Vec v(0.0);
        v.n_ = dim;
        return v;
    }

    static Vec from(std::span<const double> coords) {
        detail::check_dim(static_cast<int>(coords.size()));
        Vec v(0.0);
        v.n_ = static_cast<int>(coords.size());
        for (int i = 0; i < v.n_; ++i) v.c_[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i)];
        return v;
    }

    int dim() const { return n_; }
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    std::span<const double> coords() const { return {c_.data(), static_cast<std::size_t>(n_)}; }

    double norm_squared() const {
        double s = 0;
        for (int i = 0; i < n_; ++i) s += c_[static_cast<std::size_t>(i)] * c_[static_cast<std::size_t>(i)];
        return s;
    }
    double norm() const { return std::sqrt(norm_squared()); }

    /// Scales to unit length. Throws DegenerateGradientError when there is no
    /// direction to preserve (norm < 1e-300).
    Vec normalized() const {
        double n = norm();
        if (!(n >= degenerate_norm))
            throw DegenerateGradientError("cannot normalize near-zero vector (" + join_g17(coords()) +
                                          ")");
        Vec v = *this;
        for (int i = 0; i < n_; ++i) v.c_[static_cast<std::size_t>(i)] /= n;
        return v;
    }

    bool operator==(const Vec& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        detail::check_same_dim(a.n_, b.n_);
        Vec r = a;
        for (int i = 0; i < a.n_; ++i) r.c_[static_cast<std::size_t>(i)] += b.c_[static_cast<std::size_t>(i)];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        detail::check_same_dim(a.n_, b.n_);
        Vec r = a;
        for (int i = 0; i < a.n_; ++i) r.c_[static_cast<std::size_t>(i)] -= b.c_[static_cast<std::size_t>(i)];
        return r;
    }
    friend Vec operator*(const Vec& a, double s) {
        Vec r = a;
        for (int i = 0; i < a.n_; ++i) r.c_[static_cast<std::size_t>(i)] *= s;
        return r;
    }
    friend Vec operator*(double s, const Vec& a) { return a * s; }
    friend Vec operator/(const Vec& a, double s) {
        Vec r = a;
        for (int i = 0; i < a.n_; ++i) r.c_[static_cast<std::size_t>(i)] /= s;
        return r;
    }
    friend Vec operator-(const Vec& a) { return a * -1.0; }

    friend double dot(const Vec& a, const Vec& b) {
        detail::check_same_dim(a.n_, b.n_);
        double s = 0;
        for (int i = 0; i < a.n_; ++i) s += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(i)];
        return s;
    }

    bool all_finite() const {
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(c_[static_cast<std::size_t>(i)])) return false;
        return true;
    }

private:
    std::array<double, max_dim> c_;
    int n_;
};

inline std::string to_string(const Vec& v) { return "(" + join_g17(v.coords()) + ")"; }

/// Complex-lifted coordinate vector: the argument type of complex-step probes.
class CVec {
public:
    explicit CVec(std::complex<double> x) : c_{x, 0, 0}, n_(1) {}
    CVec(std::complex<double> x, std::complex<double> y) : c_{x, y, 0}, n_(2) {}
    CVec(std::complex<double> x, std::complex<double> y, std::complex<double> z)
        : c_{x, y, z}, n_(3) {}

    /// Lifts a real point: zero imaginary part in every coordinate.
    static CVec from_real(const Vec& p) {
        CVec v(std::complex<double>(0));
        v.n_ = p.dim();
        for (int i = 0; i < p.dim(); ++i) v.c_[static_cast<std::size_t>(i)] = p[i];
        return v;
    }

    int dim() const { return n_; }
    std::complex<double> operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::complex<double>& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

private:
    std::array<std::complex<double>, max_dim> c_;
    int n_;
};

/// A direction: unit-length within 1e-12, validated at construction.
class UnitVector {
public:
    explicit UnitVector(const Vec& v) : v_(v) {
        double n = v.norm();
        if (!(std::abs(n - 1.0) <= 1e-12))
            throw std::invalid_argument("not unit length (norm " + fmt_g17(n) + "): " +
                                        to_string(v));
    }

    /// Scales an arbitrary nonzero vector to unit length.
    static UnitVector normalize(const Vec& v) {
        double n = v.norm();
        if (!(n >= degenerate_norm))
            throw std::invalid_argument("cannot derive a direction from near-zero vector " +
                                        to_string(v));
        return UnitVector(v / n, unchecked{});
    }

    int dim() const { return v_.dim(); }
    double operator[](int i) const { return v_[i]; }
    const Vec& vec() const { return v_; }

    /// Exact negation; stays unit length bit-for-bit.
    UnitVector negated() const { return UnitVector(-v_, unchecked{}); }

    bool operator==(const UnitVector& o) const { return v_ == o.v_; }

private:
    struct unchecked {};
    UnitVector(const Vec& v, unchecked) : v_(v) {}
    Vec v_;
};

/// p + t * n, coordinate-wise fl(p_j + n_j * t). Both central-difference
/// probes use this one expression shape so that offset(p, n, -t) and
/// offset(p, -n, t) are bit-identical (rounding is sign-symmetric).
inline Vec offset(const Vec& p, const UnitVector& n, double t) {
    detail::check_same_dim(p.dim(), n.dim());
    Vec r = p;
    for (int i = 0; i < p.dim(); ++i) r[i] = p[i] + n[i] * t;
    return r;
}

/// Complex-step probe argument: coordinate j is (p_j, n_j * h).
inline CVec complex_offset(const Vec& p, const UnitVector& n, double h) {
    detail::check_same_dim(p.dim(), n.dim());
    CVec r = CVec::from_real(p);
    for (int i = 0; i < p.dim(); ++i) r[i] = {p[i], n[i] * h};
    return r;
}

} // namespace gradest
