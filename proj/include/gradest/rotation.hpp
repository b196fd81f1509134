#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "gradest/directions.hpp"
#include "gradest/rng.hpp"
#include "gradest/vec.hpp"

namespace gradest {

/// Proper rotation (orthonormal, determinant +1) in 2 or 3 dimensions.
/// Every construction path is validated to 1e-12, including the named
/// factories; they produce matrices orthonormal to roundoff anyway, so the
/// check only ever fires on a genuinely bad hand-built matrix.
class RotationMatrix {
public:
    RotationMatrix(int dim, const std::array<std::array<double, 3>, 3>& entries)
        : m_(entries), n_(dim) {
        if (n_ != 2 && n_ != 3)
            throw std::invalid_argument("rotations support dimension 2 or 3, got " +
                                        std::to_string(n_));
        validate();
    }

    static RotationMatrix identity(int dim) {
        std::array<std::array<double, 3>, 3> e{};
        for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
        return RotationMatrix(dim, e);
    }

    /// Counterclockwise rotation of the plane by angle radians.
    static RotationMatrix planar(double angle) {
        double c = std::cos(angle), s = std::sin(angle);
        return RotationMatrix(2, {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}});
    }

    /// Rotation encoded by the unit quaternion (w, x, y, z).
    static RotationMatrix from_unit_quaternion(double w, double x, double y, double z) {
        std::array<std::array<double, 3>, 3> e = {{
            {1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)},
            {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)},
            {2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)},
        }};
        return RotationMatrix(3, e);
    }

    int dim() const { return n_; }
    double at(int r, int c) const { return m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    Vec apply(const Vec& v) const {
        detail::check_same_dim(n_, v.dim());
        Vec out = Vec::zero(n_);
        for (int r = 0; r < n_; ++r) {
            double s = 0;
            for (int c = 0; c < n_; ++c) s += at(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    UnitVector apply(const UnitVector& v) const { return UnitVector(apply(v.vec())); }

private:
    void validate() const {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                double s = 0;
                for (int k = 0; k < n_; ++k) s += at(k, i) * at(k, j);
                double want = i == j ? 1.0 : 0.0;
                if (!(std::abs(s - want) <= 1e-12))
                    throw std::invalid_argument("matrix is not orthonormal (column dot " +
                                                fmt_g17(s) + " at " + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
            }
        }
        double det = n_ == 2 ? at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0)
                             : at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        if (!(std::abs(det - 1.0) <= 1e-12))
            throw std::invalid_argument("matrix determinant " + fmt_g17(det) +
                                        " is not +1 (reflection or scaling)");
    }

    std::array<std::array<double, 3>, 3> m_;
    int n_;
};

/// Rotation drawn from the rotation-invariant (Haar) distribution,
/// deterministically from the seed. 2D draws one uniform angle; 3D draws a
/// uniform unit quaternion from three uniform variates. Draw order is fixed,
/// so identical seeds give identical matrices on every platform.
inline RotationMatrix random_rotation(int dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    if (dim == 2) {
        double angle = 2.0 * std::numbers::pi * uniform01(gen);
        return RotationMatrix::planar(angle);
    }
    if (dim == 3) {
        double u1 = uniform01(gen);
        double u2 = uniform01(gen);
        double u3 = uniform01(gen);
        double a = 2.0 * std::numbers::pi * u2;
        double b = 2.0 * std::numbers::pi * u3;
        double s1 = std::sqrt(1.0 - u1), s2 = std::sqrt(u1);
        return RotationMatrix::from_unit_quaternion(s2 * std::cos(b), s1 * std::sin(a),
                                                    s1 * std::cos(a), s2 * std::sin(b));
    }
    throw std::invalid_argument("random rotations support dimension 2 or 3, got " +
                                std::to_string(dim));
}

/// Applies r to every vector. Pairwise dot products, antipodal structure,
/// and all set invariants carry over (exact negations rotate to exact
/// negations). The optional seed is recorded in the provenance string of
/// the result when the rotation came from random_rotation.
inline DirectionSet rotate_set(const DirectionSet& s, const RotationMatrix& r,
                               std::optional<std::uint64_t> seed = std::nullopt) {
    detail::check_same_dim(s.dim(), r.dim());
    std::vector<UnitVector> vs;
    vs.reserve(s.size());
    for (const auto& v : s) vs.push_back(r.apply(v));
    std::string source = "rotated(" + s.source() +
                         (seed ? ",seed=" + std::to_string(*seed) : std::string()) + ")";
    return DirectionSet(std::move(vs), std::move(source));
}

} // namespace gradest
