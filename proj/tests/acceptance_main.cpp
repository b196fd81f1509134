// End-to-end acceptance harness. Each criterion prints one PASS/FAIL line
// with the measured quantity and its pinned tolerance; the process exits
// nonzero if any line fails. Runs standalone, outside the unit test runner.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gradest/cli.hpp"
#include "gradest/gradest.hpp"
#include "support.hpp"

using namespace gradest;

namespace {

int failures = 0;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

void check(int n, const char* what, std::pair<bool, std::string> (*body)()) {
    bool pass = false;
    std::string detail;
    try {
        std::pair<bool, std::string> r = body();
        pass = r.first;
        detail = r.second;
    } catch (const std::exception& e) {
        detail = std::string("unexpected exception: ") + e.what();
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << " ("
              << detail << ")\n";
    if (!pass) ++failures;
}

double clamped_angle(double cosine) {
    return std::acos(std::min(1.0, std::max(-1.0, cosine)));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return f ? ss.str() : std::string();
}

// 1: the imaginary-part quotient has no subtractive cancellation, so it
// stays at full precision on quadratics for any step size down to 1e-150.
std::pair<bool, std::string> quadratic_step_exactness() {
    std::mt19937_64 gen(12345);
    double max_rel = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        double a = testsup::rand_in(gen, 0.5, 2.0);
        double b = testsup::rand_in(gen, 0.1, 2.0);
        double c = testsup::rand_in(gen, -2.0, 2.0);
        double x = testsup::rand_in(gen, 0.5, 2.0);
        ScalarField f = corpus_field("quadratic1d", {{"a", a}, {"b", b}, {"c", c}});
        double truth = 2.0 * a * x + b;
        for (double h : {1e-2, 1e-10, 1e-50, 1e-100, 1e-150}) {
            DerivEstimate e = complex_step(f, Vec(x), UnitVector(Vec(1.0)), h);
            max_rel = std::max(max_rel, std::abs(e.value - truth) / std::abs(truth));
        }
    }
    return {max_rel <= 1e-15,
            "max rel err " + num(max_rel) + " over 100 draws x 5 step sizes, tol 1e-15"};
}

// 2: on a smooth transcendental field the central difference error is
// V-shaped in h and at least 1e3 worse than the complex step once h <= 1e-10,
// while the complex-step error decays monotonically to the rounding floor.
std::pair<bool, std::string> error_separation() {
    ScalarField f = expsin_field();
    std::mt19937_64 gen(777);
    bool separated = true;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
        Vec p = testsup::rand_point2(gen, -1.0, 1.0);
        double ang = testsup::rand_in(gen, 0.0, 2.0 * std::numbers::pi);
        UnitVector n{Vec(std::cos(ang), std::sin(ang))};
        double truth = dot(f.gradient(p), n.vec());
        for (double h : {1e-10, 1e-12, 1e-14}) {
            double ec = std::abs(central_diff(f, p, n, h).value - truth);
            double ex = std::abs(complex_step(f, p, n, h).value - truth);
            if (ec < 1e3 * ex) separated = false;
            if (ex > 0.0) min_ratio = std::min(min_ratio, ec / ex);
        }
    }

    Vec p0(0.5, 0.5);
    UnitVector n0 = UnitVector::normalize(Vec(1.0, 1.0));
    double truth = dot(f.gradient(p0), n0.vec());
    std::vector<double> hs = log_spaced(1e-1, 1e-16, 16);
    std::vector<double> ec, ex;
    for (double h : hs) {
        ec.push_back(std::abs(central_diff(f, p0, n0, h).value - truth));
        ex.push_back(std::abs(complex_step(f, p0, n0, h).value - truth));
    }
    std::size_t best =
        static_cast<std::size_t>(std::min_element(ec.begin(), ec.end()) - ec.begin());
    bool v_shaped = best > 0 && best + 1 < ec.size() && ec.front() > 10.0 * ec[best] &&
                    ec.back() > 10.0 * ec[best];
    bool monotone = true;
    for (std::size_t i = 1; i < ex.size(); ++i)
        if (ex[i] > ex[i - 1] + 1e-15) monotone = false;

    return {separated && v_shaped && monotone,
            "min central/complex error ratio " + num(min_ratio) +
                " (need >= 1e3); central V bottoms at h=" + num(hs[best]) +
                " with err " + num(ec[best]) + "; complex floor " + num(ex.back())};
}

// 3: on the half polygon with K=4 the raw projection sum equals (K/2) grad F
// and the estimator's n/K scaling turns it into grad F.
std::pair<bool, std::string> half_polygon_projection() {
    ScalarField f = corpus_field("circle0", {{"r", 1.0}});
    DirectionSet s = polygon_set(4, PolygonSpan::half);
    std::mt19937_64 gen(2024);
    double max_raw = 0.0, max_est = 0.0;
    for (int i = 0; i < 100; ++i) {
        Vec p = testsup::rand_point2(gen, -2.0, 2.0);
        Vec raw = Vec::zero(2);
        for (const auto& n : s) raw = raw + complex_step(f, p, n, 1e-100).value * n.vec();
        max_raw = std::max(max_raw, (raw - Vec(4.0 * p[0], 4.0 * p[1])).norm());
        GradientEstimate e = multi_vector(f, p, s, DerivKind::complex, 1e-100);
        max_est = std::max(max_est, (e.vector - Vec(2.0 * p[0], 2.0 * p[1])).norm());
    }
    return {max_raw <= 1e-12 && max_est <= 1e-12,
            "raw sum off (2x,2y)-doubled truth by " + num(max_raw) +
                ", normalized estimate off by " + num(max_est) + ", tol 1e-12"};
}

// 4: full polygons satisfy the second-moment identities behind the n/K
// scaling, and the estimator stays exact across K.
std::pair<bool, std::string> polygon_moment_identities() {
    ScalarField f = corpus_field("circle0", {{"r", 1.0}});
    std::mt19937_64 gen(4040);
    double worst_identity = 0.0, worst_est = 0.0;
    for (int K : {4, 6, 8, 12, 16, 64}) {
        DirectionSet s = polygon_set(K, PolygonSpan::full);
        double xx = 0.0, yy = 0.0, xy = 0.0;
        for (const auto& n : s) {
            xx += n.vec()[0] * n.vec()[0];
            yy += n.vec()[1] * n.vec()[1];
            xy += n.vec()[0] * n.vec()[1];
        }
        worst_identity = std::max({worst_identity, std::abs(xx - K / 2.0),
                                   std::abs(yy - K / 2.0), std::abs(xy)});
        for (int i = 0; i < 25; ++i) {
            Vec p = testsup::rand_point2(gen, -2.0, 2.0);
            GradientEstimate e = multi_vector(f, p, s, DerivKind::complex, 1e-100);
            worst_est = std::max(worst_est, (e.vector - Vec(2.0 * p[0], 2.0 * p[1])).norm());
        }
    }
    return {worst_identity <= 1e-10 && worst_est <= 1e-10,
            "moment identities off by " + num(worst_identity) + ", estimates off by " +
                num(worst_est) + " over K in {4,6,8,12,16,64}, tol 1e-10"};
}

// 5: the single-axis estimate does not depend on the frame orientation.
std::pair<bool, std::string> frame_invariance() {
    ScalarField f = corpus_field("circle0", {{"r", 1.0}});
    Vec p(1.25, -0.75);
    Vec truth(2.5, -1.5);
    double max_err = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GradientEstimate e = single_axis(f, p, random_frame(2, seed), DerivKind::complex, 1e-100);
        max_err = std::max(max_err, (e.vector - truth).norm());
    }
    return {max_err <= 1e-10,
            "max deviation " + num(max_err) + " over 1000 random frames, tol 1e-10"};
}

// 6: four fields with the same zero set yield the same unit gradient on that
// set, so the estimated normals agree pairwise.
std::pair<bool, std::string> shared_boundary_normals() {
    std::vector<ScalarField> fields;
    fields.push_back(corpus_field("circle0", {{"r", 1.0}}));
    fields.push_back(corpus_field("circle1", {{"r", 1.0}}));
    fields.push_back(corpus_field("circle2", {{"r", 1.0}}));
    fields.push_back(corpus_field("circle3", {{"r", 1.0}, {"a", 3.0}}));
    OrthonormalFrame frame = canonical_frame(2);
    double min_dot = 1.0;
    for (int i = 0; i < 50; ++i) {
        double t = 2.0 * std::numbers::pi * i / 50.0;
        Vec p(std::cos(t), std::sin(t));
        std::vector<Vec> units;
        for (const auto& f : fields)
            units.push_back(
                single_axis(f, p, frame, DerivKind::complex, 1e-50).vector.normalized());
        for (std::size_t a = 0; a < units.size(); ++a)
            for (std::size_t b = a + 1; b < units.size(); ++b)
                min_dot = std::min(min_dot, dot(units[a], units[b]));
    }
    return {min_dot >= 1.0 - 1e-9,
            "min pairwise normal cosine " + num(min_dot) + " over 50 boundary points x 6 "
            "pairs, tol 1 - 1e-9"};
}

// 7: the value-probe estimator recovers indicator normals. With K=64 probes
// the half-plane edge normal is quantized to half the angular spacing,
// pi/64 rad = 2.8125 deg (a 1 deg guarantee would need K >= 180), and every
// estimate must sit inside that bound. Disk boundary normals carry an extra
// curvature bias at probe radius 0.05; 10 deg covers it with margin
// (observed max is near 1.4 deg).
std::pair<bool, std::string> indicator_normals() {
    const DirectionSet s = polygon_set(64, PolygonSpan::full);
    ScalarField half = corpus_field("halfplane2d", {});
    Vec origin(0.0, 0.0);
    bool edge_ok = true;
    double max_edge = 0.0, max_cross = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EstimatorConfig cfg;
        cfg.method = Method::hart;
        cfg.deriv_kind = DerivKind::none;
        cfg.directions = s;
        cfg.probe_radius = 1.0;
        cfg.seed = seed;
        GradientEstimate e = estimate(half, origin, cfg, 0);

        RotationMatrix rot = random_rotation(2, derive_seed(seed, 0));
        Vec brute = Vec::zero(2);
        for (const auto& n : s) {
            UnitVector u = rot.apply(n);
            brute = brute + half.eval_real(offset(origin, u, 1.0)) * u.vec();
        }
        max_cross = std::max(max_cross, (brute - e.vector).norm());

        double angle = clamped_angle(e.vector.normalized()[1]);
        max_edge = std::max(max_edge, angle);
        if (angle > std::numbers::pi / 64.0 + 1e-12) edge_ok = false;
    }

    ScalarField disk = corpus_field("disk2d", {{"r", 1.0}});
    double max_disk_deg = 0.0;
    for (int i = 0; i < 50; ++i) {
        double t = 2.0 * std::numbers::pi * i / 50.0;
        Vec radial(std::cos(t), std::sin(t));
        EstimatorConfig cfg;
        cfg.method = Method::hart;
        cfg.deriv_kind = DerivKind::none;
        cfg.directions = s;
        cfg.probe_radius = 0.05;
        cfg.seed = 7;
        GradientEstimate e = estimate(disk, radial, cfg, static_cast<std::uint64_t>(i));
        double deg =
            clamped_angle(dot(e.vector.normalized(), radial)) * 180.0 / std::numbers::pi;
        max_disk_deg = std::max(max_disk_deg, deg);
    }

    return {edge_ok && max_cross <= 1e-12 && max_disk_deg <= 10.0,
            "edge normal off vertical by at most " + num(max_edge * 180.0 / std::numbers::pi) +
                " deg (quantization bound 2.8125), independent probe sum agrees within " +
                num(max_cross) + "; disk normals off radial by at most " + num(max_disk_deg) +
                " deg, tol 10"};
}

// 8: every shipped direction set validates, and the frame search finds
// exactly the frames each solid contains.
std::pair<bool, std::string> set_structure() {
    struct Row {
        Polyhedron p;
        std::size_t vectors, lines, pairs, frames;
    };
    const Row rows[] = {
        {Polyhedron::tetrahedron, 4, 4, 0, 0},
        {Polyhedron::octahedron, 6, 3, 3, 1},
        {Polyhedron::cube, 8, 4, 0, 0},
        {Polyhedron::icosahedron, 12, 6, 0, 0},
        {Polyhedron::dodecahedron, 20, 10, 0, 0},
        {Polyhedron::truncated_octahedron, 24, 12, 6, 0},
        {Polyhedron::soccer_ball, 60, 30, 0, 0},
    };
    bool ok = true;
    std::string bad;
    for (const Row& r : rows) {
        SetReport rep = validate_set(polyhedron_set(r.p));
        bool row_ok = rep.max_unit_residual <= 1e-12 && rep.centroid_norm <= 1e-9 &&
                      rep.vector_count == r.vectors && rep.line_count == r.lines &&
                      rep.orthogonal_pairs == r.pairs && rep.frame_count == r.frames;
        if (!row_ok) bad += std::string(" ") + to_string(r.p);
        ok = ok && row_ok;
    }
    std::size_t octagon = find_orthonormal_frames(polygon_set(8, PolygonSpan::full)).size();
    ok = ok && octagon == 2;
    return {ok, ok ? "7 solids validate; frame counts tetra 0, octahedron 1, cube 0, "
                     "icosahedron 0, dodecahedron 0, truncated octahedron 0, soccer 0, "
                     "full octagon 2"
                   : "mismatched sets:" + bad + ", full octagon frames " +
                         std::to_string(octagon)};
}

// 9: error maps are a pure function of (argv, seed): rerunning and switching
// on row parallelism both reproduce stdout and the PGM byte for byte.
std::pair<bool, std::string> map_determinism() {
    namespace fs = std::filesystem;
    auto run_map = [](const fs::path& file, bool parallel) {
        std::vector<std::string> args = {"errmap",  "--field", "circle0:r=1", "--method",
                                         "multi-vector", "--set", "polygon:k=8", "--seed",
                                         "42", "--width", "32", "--height", "32", "--out",
                                         file.string()};
        if (parallel) args.push_back("--parallel");
        std::vector<const char*> argv = {"gradest"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return std::make_pair(code, out.str());
    };
    fs::path a = fs::temp_directory_path() / "gradest_accept_a.pgm";
    fs::path b = fs::temp_directory_path() / "gradest_accept_b.pgm";
    fs::path c = fs::temp_directory_path() / "gradest_accept_c.pgm";
    auto ra = run_map(a, false);
    auto rb = run_map(b, false);
    auto rc = run_map(c, true);
    std::string bytes_a = slurp(a), bytes_b = slurp(b), bytes_c = slurp(c);
    fs::remove(a);
    fs::remove(b);
    fs::remove(c);
    bool ok = ra.first == 0 && rb.first == 0 && rc.first == 0 && !bytes_a.empty() &&
              ra.second == rb.second && ra.second == rc.second && bytes_a == bytes_b &&
              bytes_a == bytes_c;
    return {ok, "exit codes " + std::to_string(ra.first) + "/" + std::to_string(rb.first) +
                    "/" + std::to_string(rc.first) + ", PGM " +
                    std::to_string(bytes_a.size()) + " bytes, rerun and parallel byte-equal"};
}

// 10: a 64x64 map of the plain quadratic field is degeneracy-free, angle
// errors stay at rounding level, and the whole map costs well under 5 s.
std::pair<bool, std::string> clean_map_quality() {
    ScalarField f = corpus_field("circle0", {{"r", 1.0}});
    EstimatorConfig cfg;
    cfg.method = Method::single_axis;
    cfg.deriv_kind = DerivKind::complex;
    cfg.frames = {canonical_frame(2)};
    auto t0 = std::chrono::steady_clock::now();
    ErrorGrid grid = error_map(f, cfg, Bounds2D(-2.0, 2.0, -2.0, 2.0), 64, 64);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ErrorStats st = error_stats(grid);
    bool ok = st.degenerate_count == 0 && st.angle_p50_deg <= 1e-5 && ms < 5000.0;
    return {ok, "median angle " + num(st.angle_p50_deg) + " deg (tol 1e-5), max " +
                    num(st.angle_max_deg) + " deg, degenerate pixels " +
                    std::to_string(st.degenerate_count) + ", " + num(ms) + " ms (budget 5000)"};
}

} // namespace

int main() {
    check(1, "complex step is exact on quadratics down to h=1e-150", quadratic_step_exactness);
    check(2, "central error is V-shaped and 1e3 above the monotone complex error",
          error_separation);
    check(3, "half-polygon projection sum and its n/K normalization", half_polygon_projection);
    check(4, "full-polygon moment identities and exactness up to K=64",
          polygon_moment_identities);
    check(5, "single-axis estimate is frame-invariant", frame_invariance);
    check(6, "fields sharing a zero set agree on boundary normals", shared_boundary_normals);
    check(7, "value probes recover indicator edge and disk normals", indicator_normals);
    check(8, "direction sets validate with the expected frame structure", set_structure);
    check(9, "error maps are deterministic and parallel-safe", map_determinism);
    check(10, "64x64 single-axis map is clean, accurate, and fast", clean_map_quality);
    std::cout << (10 - failures) << " of 10 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
