#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gradest/vec.hpp"

namespace gradest {

enum class PolygonSpan { half, full };

inline const char* to_string(PolygonSpan s) { return s == PolygonSpan::half ? "half" : "full"; }

inline PolygonSpan polygon_span_from_string(const std::string& s) {
    if (s == "half") return PolygonSpan::half;
    if (s == "full") return PolygonSpan::full;
    throw std::invalid_argument("unknown polygon span '" + s + "' (expected half or full)");
}

/// Ordered collection of distinct unit directions sharing one dimension.
///
/// Antipodal structure is detected at construction: antipode_of(i) is the
/// index of -v_i when present (dot <= -(1 - 1e-12)), else -1, and the set is
/// antipodal-closed when every vector has one. Duplicates (dot >= 1 - 1e-12)
/// are rejected. Exact negation survives rotation bit-for-bit, so detection
/// is stable under rotate_set.
class DirectionSet {
public:
    DirectionSet(std::vector<UnitVector> vectors, std::string source)
        : vectors_(std::move(vectors)), source_(std::move(source)) {
        if (vectors_.empty()) throw std::invalid_argument("direction set must be nonempty");
        dim_ = vectors_.front().dim();
        for (const auto& v : vectors_)
            if (v.dim() != dim_)
                throw std::invalid_argument("direction set mixes dimensions");

        const std::size_t k = vectors_.size();
        antipode_.assign(k, -1);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                double d = dot(vectors_[i].vec(), vectors_[j].vec());
                if (d >= 1.0 - 1e-12)
                    throw std::invalid_argument("direction set contains duplicate vectors " +
                                                to_string(vectors_[i].vec()) + " and " +
                                                to_string(vectors_[j].vec()));
                if (d <= -(1.0 - 1e-12)) {
                    antipode_[i] = static_cast<int>(j);
                    antipode_[j] = static_cast<int>(i);
                }
            }
        }
        antipodal_closed_ = true;
        for (int a : antipode_)
            if (a < 0) antipodal_closed_ = false;

        if (antipodal_closed_) {
            Vec sum = Vec::zero(dim_);
            for (const auto& v : vectors_) sum = sum + v.vec();
            if (!(sum.norm() <= 1e-9))
                throw std::invalid_argument("antipodal-closed set has nonzero vector sum norm " +
                                            fmt_g17(sum.norm()));
        }
    }

    int dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const UnitVector& operator[](std::size_t i) const { return vectors_[i]; }
    auto begin() const { return vectors_.begin(); }
    auto end() const { return vectors_.end(); }

    const std::string& source() const { return source_; }
    bool antipodal_closed() const { return antipodal_closed_; }

    /// Index of the exact opposite of vector i, or -1 when the set has none.
    int antipode_of(std::size_t i) const { return antipode_[i]; }

private:
    std::vector<UnitVector> vectors_;
    std::string source_;
    int dim_;
    std::vector<int> antipode_;
    bool antipodal_closed_;
};

/// K directions evenly spaced on the circle.
///
/// half: (cos pi k/K, sin pi k/K), k = 0..K-1 — covers the upper half only,
/// since a line derivative already carries both senses of each direction.
/// full: (cos 2pi k/K, sin 2pi k/K), k = 0..K-1 — antipodal-closed iff K is
/// even.
inline DirectionSet polygon_set(int K, PolygonSpan span) {
    if (K < 2) throw std::invalid_argument("polygon needs K >= 2, got K=" + std::to_string(K));
    double step = (span == PolygonSpan::half ? 1.0 : 2.0) * std::numbers::pi / K;
    std::vector<UnitVector> vs;
    vs.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        double a = step * k;
        vs.emplace_back(Vec(std::cos(a), std::sin(a)));
    }
    return DirectionSet(std::move(vs), "polygon(" + std::to_string(K) + "," +
                                           std::string(to_string(span)) + ")");
}

enum class Polyhedron {
    tetrahedron,
    octahedron,
    cube,
    icosahedron,
    dodecahedron,
    truncated_octahedron,
    soccer_ball,
};

inline const char* to_string(Polyhedron p) {
    switch (p) {
    case Polyhedron::tetrahedron: return "tetrahedron";
    case Polyhedron::octahedron: return "octahedron";
    case Polyhedron::cube: return "cube";
    case Polyhedron::icosahedron: return "icosahedron";
    case Polyhedron::dodecahedron: return "dodecahedron";
    case Polyhedron::truncated_octahedron: return "truncated_octahedron";
    case Polyhedron::soccer_ball: return "soccer_ball";
    }
    return "?";
}

inline const std::array<Polyhedron, 7>& all_polyhedra() {
    static const std::array<Polyhedron, 7> all = {
        Polyhedron::tetrahedron,          Polyhedron::octahedron,  Polyhedron::cube,
        Polyhedron::icosahedron,          Polyhedron::dodecahedron,
        Polyhedron::truncated_octahedron, Polyhedron::soccer_ball,
    };
    return all;
}

inline Polyhedron polyhedron_from_string(const std::string& name) {
    for (Polyhedron p : all_polyhedra())
        if (name == to_string(p)) return p;
    throw std::invalid_argument("unknown polyhedron '" + name + "'");
}

namespace detail {

/// Appends the cyclic orbit of magnitude pattern m (3 shifts), with every
/// sign choice on the nonzero entries. Signed coordinates are computed as
/// sign * magnitude * scale in one expression, so antipodal vertices come
/// out as exact bitwise negations.
inline void push_cyclic_orbit(std::vector<UnitVector>& out, std::array<double, 3> m,
                              double scale) {
    for (int shift = 0; shift < 3; ++shift) {
        std::array<double, 3> a{};
        for (int i = 0; i < 3; ++i) a[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(((i - shift) % 3 + 3) % 3)];
        std::array<int, 3> nz{};
        int count = 0;
        for (int i = 0; i < 3; ++i)
            if (a[static_cast<std::size_t>(i)] != 0.0) nz[static_cast<std::size_t>(count++)] = i;
        for (int combo = 0; combo < (1 << count); ++combo) {
            std::array<double, 3> c = {0.0, 0.0, 0.0};
            for (int j = 0; j < count; ++j) {
                double sign = ((combo >> j) & 1) ? -1.0 : 1.0;
                int i = nz[static_cast<std::size_t>(j)];
                c[static_cast<std::size_t>(i)] = sign * a[static_cast<std::size_t>(i)] * scale;
            }
            out.emplace_back(Vec(c[0], c[1], c[2]));
        }
    }
}

/// All eight (s0, s1, s2) * scale corners. Shared by cube and dodecahedron.
inline void push_corners(std::vector<UnitVector>& out, double scale) {
    for (double s0 : {1.0, -1.0})
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0}) out.emplace_back(Vec(s0 * scale, s1 * scale, s2 * scale));
}

} // namespace detail

/// Vertex directions of the named solid at unit circumradius, centered at
/// the origin. Coordinates come from the closed forms (integers, golden
/// ratio, square roots) evaluated once, so runs are bit-reproducible.
/// Vertex counts: tetrahedron 4, octahedron 6, cube 8, icosahedron 12,
/// dodecahedron 20, truncated octahedron 24, soccer ball 60. Every set
/// except the tetrahedron is antipodal-closed. The tetrahedron's four
/// directions are bitwise a subset of the cube's eight (alternating
/// corners share the same 1/sqrt(3) coordinate values).
inline DirectionSet polyhedron_set(Polyhedron which) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    std::vector<UnitVector> vs;

    switch (which) {
    case Polyhedron::tetrahedron:
        for (auto [s0, s1, s2] : {std::array{1.0, 1.0, 1.0},
                                  std::array{1.0, -1.0, -1.0},
                                  std::array{-1.0, 1.0, -1.0},
                                  std::array{-1.0, -1.0, 1.0}})
            vs.emplace_back(Vec(s0 * inv_sqrt3, s1 * inv_sqrt3, s2 * inv_sqrt3));
        break;
    case Polyhedron::octahedron:
        detail::push_cyclic_orbit(vs, {1.0, 0.0, 0.0}, 1.0);
        break;
    case Polyhedron::cube:
        detail::push_corners(vs, inv_sqrt3);
        break;
    case Polyhedron::icosahedron:
        detail::push_cyclic_orbit(vs, {0.0, 1.0, phi}, 1.0 / std::sqrt(1.0 + phi * phi));
        break;
    case Polyhedron::dodecahedron:
        detail::push_corners(vs, inv_sqrt3);
        detail::push_cyclic_orbit(vs, {0.0, 1.0 / phi, phi}, inv_sqrt3);
        break;
    case Polyhedron::truncated_octahedron: {
        double s = 1.0 / std::sqrt(5.0);
        detail::push_cyclic_orbit(vs, {0.0, 1.0, 2.0}, s);
        detail::push_cyclic_orbit(vs, {0.0, 2.0, 1.0}, s);
        break;
    }
    case Polyhedron::soccer_ball: {
        double s = 1.0 / std::sqrt(10.0 + 9.0 * phi);
        detail::push_cyclic_orbit(vs, {0.0, 1.0, 3.0 * phi}, s);
        detail::push_cyclic_orbit(vs, {1.0, 2.0 + phi, 2.0 * phi}, s);
        detail::push_cyclic_orbit(vs, {phi, 2.0, 2.0 * phi + 1.0}, s);
        break;
    }
    }
    return DirectionSet(std::move(vs), "polyhedron(" + std::string(to_string(which)) + ")");
}

inline DirectionSet polyhedron_set(const std::string& name) {
    return polyhedron_set(polyhedron_from_string(name));
}

} // namespace gradest
