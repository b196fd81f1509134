#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gradest/corpus.hpp"
#include "gradest/error_map.hpp"
#include "gradest/estimators.hpp"
#include "gradest/format.hpp"
#include "gradest/frames.hpp"
#include "gradest/pgm.hpp"
#include "gradest/sweep.hpp"

namespace gradest::cli {

namespace detail {

using gradest::detail::check_dim;

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline double parse_double(const std::string& s, const std::string& flag) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": '" + s + "' is not a number");
    }
}

inline long long parse_int(const std::string& s, const std::string& flag) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": '" + s + "' is not an integer");
    }
}

/// key=val,key=val -> ordered (key, value-string) pairs; bare keys rejected.
inline std::vector<std::pair<std::string, std::string>> parse_kv_list(const std::string& s,
                                                                      const std::string& flag) {
    std::vector<std::pair<std::string, std::string>> kvs;
    if (s.empty()) return kvs;
    for (const std::string& item : split(s, ',')) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument(flag + ": expected key=value, got '" + item + "'");
        kvs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return kvs;
}

/// name[:key=val,...] -> corpus field (plus the expsin2d harness field).
inline ScalarField parse_field(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    FieldParams params;
    if (colon != std::string::npos)
        for (const auto& [k, v] : parse_kv_list(spec.substr(colon + 1), "--field"))
            params[k] = parse_double(v, "--field");
    try {
        if (name == "expsin2d") {
            if (!params.empty())
                throw std::invalid_argument("field expsin2d takes no parameters");
            return expsin_field();
        }
        return corpus_field(name, params);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("--field: " + std::string(e.what()));
    }
}

inline Vec parse_point(const std::string& spec, const std::string& flag) {
    std::vector<double> coords;
    for (const std::string& part : split(spec, ',')) coords.push_back(parse_double(part, flag));
    if (coords.size() < 1 || coords.size() > 3)
        throw std::invalid_argument(flag + ": expected 1 to 3 comma-separated coordinates");
    return Vec::from(coords);
}

/// A direction source named on the command line: "canonical", a polyhedron
/// name, or "polygon:k=K[,span=half|full]".
struct SetSpec {
    enum class Kind { canonical, polygon, polyhedron } kind = Kind::canonical;
    int polygon_k = 0;
    PolygonSpan span = PolygonSpan::full;
    Polyhedron polyhedron = Polyhedron::octahedron;

    int dim(int field_dim) const {
        switch (kind) {
        case Kind::canonical: return field_dim;
        case Kind::polygon: return 2;
        case Kind::polyhedron: return 3;
        }
        return field_dim;
    }

    DirectionSet build() const {
        if (kind == Kind::polygon) return polygon_set(polygon_k, span);
        return polyhedron_set(polyhedron);
    }
};

inline SetSpec parse_set(const std::string& spec, const std::string& flag) {
    SetSpec out;
    if (spec == "canonical") {
        out.kind = SetSpec::Kind::canonical;
        return out;
    }
    if (spec == "polygon" || spec.rfind("polygon:", 0) == 0) {
        out.kind = SetSpec::Kind::polygon;
        bool have_k = false;
        std::string args = spec == "polygon" ? std::string() : spec.substr(8);
        for (const auto& [k, v] : parse_kv_list(args, flag)) {
            if (k == "k") {
                out.polygon_k = static_cast<int>(parse_int(v, flag));
                have_k = true;
            } else if (k == "span") {
                try {
                    out.span = polygon_span_from_string(v);
                } catch (const std::invalid_argument& e) {
                    throw std::invalid_argument(flag + ": " + e.what());
                }
            } else {
                throw std::invalid_argument(flag + ": polygon does not take parameter '" + k +
                                            "'");
            }
        }
        if (!have_k) throw std::invalid_argument(flag + ": polygon needs k, e.g. polygon:k=8");
        return out;
    }
    try {
        out.polyhedron = polyhedron_from_string(spec);
        out.kind = SetSpec::Kind::polyhedron;
        return out;
    } catch (const std::invalid_argument&) {
        std::string names;
        for (Polyhedron p : all_polyhedra()) names += std::string(" ") + to_string(p);
        throw std::invalid_argument(flag + ": unknown direction set '" + spec +
                                    "' (expected canonical, polygon:k=K[,span=half|full], or one "
                                    "of:" +
                                    names + ")");
    }
}

/// start:stop:log|lin[,count] -> list of step sizes, default count 50.
inline std::vector<double> parse_h_range(const std::string& spec, const std::string& flag) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3)
        throw std::invalid_argument(flag + ": expected start:stop:log|lin[,count], got '" + spec +
                                    "'");
    double start = parse_double(parts[0], flag);
    double stop = parse_double(parts[1], flag);
    std::string scale = parts[2];
    int count = 50;
    std::size_t comma = scale.find(',');
    if (comma != std::string::npos) {
        count = static_cast<int>(parse_int(scale.substr(comma + 1), flag));
        scale = scale.substr(0, comma);
    }
    try {
        if (scale == "log") return log_spaced(start, stop, count);
        if (scale == "lin") return lin_spaced(start, stop, count);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
    throw std::invalid_argument(flag + ": scale must be log or lin, got '" + scale + "'");
}

inline std::vector<DerivKind> parse_kinds(const std::string& spec, const std::string& flag) {
    std::vector<DerivKind> kinds;
    for (const std::string& part : split(spec, ',')) {
        DerivKind k;
        try {
            k = deriv_kind_from_string(part);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(flag + ": " + e.what());
        }
        if (k == DerivKind::none)
            throw std::invalid_argument(flag + ": 'none' is not a sweepable derivative kind");
        kinds.push_back(k);
    }
    return kinds;
}

inline std::string vec_header(int dim) { return dim == 3 ? "x,y,z" : (dim == 2 ? "x,y" : "x"); }

/// Flag bundle shared by grad and errmap.
struct EstimatorFlags {
    std::string method_str;
    std::string kind_str = "complex";
    bool kind_given = false;
    std::string set_str;
    bool set_given = false;
    double h = 0.0;
    bool h_given = false;
    double radius = 1.0;
    bool radius_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--method", method_str,
                        "estimation method: single-axis, multi-axis, multi-vector, hart")
            ->required();
        cmd->add_option("--kind", kind_str,
                        "derivative kind: central, complex, complex-line-avg (default complex; "
                        "not valid with hart)");
        cmd->add_option("--set", set_str,
                        "direction source: canonical, polygon:k=K[,span=half|full], or a "
                        "polyhedron name (default canonical for axis methods)");
        cmd->add_option("--h", h, "derivative step size (default: per-kind)");
        cmd->add_option("--radius", radius, "hart probe radius (default 1)");
        cmd->add_option("--seed", seed, "random-rotation seed; omitting it disables rotation");
        kind_opt_ = cmd->get_option("--kind");
        set_opt_ = cmd->get_option("--set");
        h_opt_ = cmd->get_option("--h");
        radius_opt_ = cmd->get_option("--radius");
        seed_opt_ = cmd->get_option("--seed");
    }

    void resolve_counts() {
        kind_given = kind_opt_->count() > 0;
        set_given = set_opt_->count() > 0;
        h_given = h_opt_->count() > 0;
        radius_given = radius_opt_->count() > 0;
        seed_given = seed_opt_->count() > 0;
    }

    /// Validates the flag combination against the field and builds the
    /// estimator configuration.
    EstimatorConfig to_config(const ScalarField& field) {
        resolve_counts();
        EstimatorConfig cfg;
        cfg.method = method_from_string(method_str);
        if (cfg.method == Method::hart) {
            if (kind_given)
                throw std::invalid_argument("--kind: hart takes no derivative kind (it only "
                                            "samples field values)");
            if (h_given)
                throw std::invalid_argument("--h: hart has no step size; its spatial scale is "
                                            "--radius");
            cfg.deriv_kind = DerivKind::none;
        } else {
            if (radius_given)
                throw std::invalid_argument("--radius: only hart takes a probe radius");
            cfg.deriv_kind = deriv_kind_from_string(kind_str);
            if (cfg.deriv_kind == DerivKind::none)
                throw std::invalid_argument("--kind: 'none' is only produced by hart, not "
                                            "selectable");
        }
        cfg.h = h;
        cfg.probe_radius = radius;
        if (seed_given) cfg.seed = seed;

        bool axis_method =
            cfg.method == Method::single_axis || cfg.method == Method::multi_axis;
        SetSpec set;
        if (set_given) {
            set = parse_set(set_str, "--set");
        } else if (!axis_method) {
            throw std::invalid_argument(std::string("--set: required for ") +
                                        to_string(cfg.method));
        }
        if (set.dim(field.dim()) != field.dim())
            throw std::invalid_argument("--set: dimension mismatch (" +
                                        std::to_string(field.dim()) + "D field/point, " +
                                        std::to_string(set.dim(field.dim())) + "D set)");
        if (set.kind == SetSpec::Kind::canonical) {
            if (!axis_method)
                throw std::invalid_argument(std::string("--set: canonical frames only drive axis "
                                                        "methods, not ") +
                                            to_string(cfg.method));
            cfg.frames = {canonical_frame(field.dim())};
        } else {
            cfg.directions = set.build();
        }
        return cfg;
    }

private:
    CLI::Option* kind_opt_ = nullptr;
    CLI::Option* set_opt_ = nullptr;
    CLI::Option* h_opt_ = nullptr;
    CLI::Option* radius_opt_ = nullptr;
    CLI::Option* seed_opt_ = nullptr;
};

inline void print_dirs_csv(const DirectionSet& s, std::ostream& out) {
    out << vec_header(s.dim()) << '\n';
    for (const auto& v : s) out << join_g17(v.vec().coords()) << '\n';
}

inline void print_frames_csv(const std::vector<OrthonormalFrame>& frames, int dim,
                             std::ostream& out) {
    out << "frame,axis," << vec_header(dim) << '\n';
    for (std::size_t f = 0; f < frames.size(); ++f)
        for (int a = 0; a < frames[f].dim(); ++a)
            out << f << ',' << a << ',' << join_g17(frames[f].axis(a).vec().coords()) << '\n';
}

inline void print_survey_row(const SetReport& r, std::ostream& out) {
    out << r.source << ',' << r.dim << ',' << r.vector_count << ',' << r.line_count << ','
        << r.orthogonal_pairs << ',' << r.frame_count << ',' << (r.antipodal_closed ? 1 : 0)
        << ',' << fmt_g17(r.max_unit_residual) << ',' << fmt_g17(r.centroid_norm) << ','
        << fmt_g17(r.min_pairwise_angle_deg) << '\n';
}

inline void print_estimate_record(const GradientEstimate& e, std::ostream& out) {
    out << "method=" << to_string(e.method) << " kind=" << to_string(e.deriv_kind)
        << (e.method == Method::hart ? " radius=" : " h=") << fmt_g17(e.h)
        << " samples=" << e.k << " normalization=" << fmt_g17(e.normalization)
        << " degenerate=" << (e.degenerate ? 1 : 0) << " vector=" << join_g17(e.vector.coords())
        << '\n';
}

inline void print_stats_record(const ErrorGrid& grid, const ErrorStats& st, std::ostream& out) {
    out << "width=" << grid.width() << " height=" << grid.height()
        << " samples=" << st.sample_count << " degenerate=" << st.degenerate_count
        << " min_eps=" << fmt_g17(st.min_epsilon) << " mean_eps=" << fmt_g17(st.mean_epsilon)
        << " median_eps=" << fmt_g17(st.median_epsilon)
        << " angle_p50_deg=" << fmt_g17(st.angle_p50_deg)
        << " angle_p90_deg=" << fmt_g17(st.angle_p90_deg)
        << " angle_p99_deg=" << fmt_g17(st.angle_p99_deg)
        << " angle_max_deg=" << fmt_g17(st.angle_max_deg) << '\n';
}

inline std::ofstream open_out_file(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    return f;
}

} // namespace detail

/// Runs the command line given in argv (argv[0] is the program name).
/// Returns 0 on success, 2 on usage errors (message to err names the
/// offending flag), 1 on runtime failures (capability, I/O, degenerate
/// input). All numeric output uses 17 significant digits; identical argv
/// plus seed produce byte-identical output.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"gradient estimation workbench: direction sets, derivative probes, error maps"};
    // Long-only help: the short -h would collide with the --h step-size flag.
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    // dirs
    CLI::App* dirs = app.add_subcommand("dirs", "generate a direction set and print it as CSV");
    int dirs_dim = 0;
    int dirs_polygon = 0;
    std::string dirs_span = "full";
    std::string dirs_polyhedron;
    std::uint64_t dirs_seed = 0;
    dirs->add_option("--dim", dirs_dim, "expected dimension (validated against the set)");
    CLI::Option* dirs_polygon_opt =
        dirs->add_option("--polygon", dirs_polygon, "polygon direction count K (2D)");
    dirs->add_option("--span", dirs_span, "polygon span: half or full (default full)");
    CLI::Option* dirs_polyhedron_opt =
        dirs->add_option("--polyhedron", dirs_polyhedron, "polyhedron name (3D)");
    CLI::Option* dirs_seed_opt =
        dirs->add_option("--seed", dirs_seed, "rotate the set by a seeded random rotation");

    // frames
    CLI::App* frames_cmd =
        app.add_subcommand("frames", "discover orthonormal frames inside a direction set");
    int frames_polygon = 0;
    std::string frames_span = "full";
    std::string frames_polyhedron;
    double frames_tol = 1e-9;
    bool frames_survey = false;
    std::uint64_t frames_seed = 0;
    CLI::Option* frames_polygon_opt =
        frames_cmd->add_option("--polygon", frames_polygon, "polygon direction count K (2D)");
    frames_cmd->add_option("--span", frames_span, "polygon span: half or full (default full)");
    CLI::Option* frames_polyhedron_opt =
        frames_cmd->add_option("--polyhedron", frames_polyhedron, "polyhedron name (3D)");
    frames_cmd->add_option("--tol", frames_tol, "orthogonality tolerance (default 1e-9)");
    frames_cmd->add_flag("--survey", frames_survey,
                         "print the structure report for every shipped polyhedron instead");
    CLI::Option* frames_seed_opt = frames_cmd->add_option(
        "--seed", frames_seed, "rotate the set by a seeded random rotation before searching");

    // grad
    CLI::App* grad = app.add_subcommand("grad", "estimate one gradient and print the record");
    std::string grad_field, grad_point;
    detail::EstimatorFlags grad_flags;
    grad->add_option("--field", grad_field, "field spec, e.g. circle0:r=1")->required();
    grad->add_option("--point", grad_point, "query point, e.g. 3,4")->required();
    grad_flags.attach(grad);

    // errmap
    CLI::App* errmap = app.add_subcommand(
        "errmap", "score an estimator against the analytic gradient over a pixel grid");
    std::string errmap_field, errmap_point_bounds = "-2:2:-2:2";
    detail::EstimatorFlags errmap_flags;
    int errmap_width = 64, errmap_height = 64;
    double errmap_exclude = 1e-6;
    std::string errmap_out, errmap_csv;
    bool errmap_parallel = false;
    errmap->add_option("--field", errmap_field, "field spec with an analytic gradient")
        ->required();
    errmap_flags.attach(errmap);
    errmap->add_option("--bounds", errmap_point_bounds,
                       "map bounds xmin:xmax:ymin:ymax (default -2:2:-2:2)");
    errmap->add_option("--width", errmap_width, "pixels per row (default 64)");
    errmap->add_option("--height", errmap_height, "pixel rows (default 64)");
    errmap->add_option("--exclude", errmap_exclude,
                       "oracle-norm threshold below which pixels are degenerate (default 1e-6)");
    errmap->add_option("--out", errmap_out, "write the 16-bit PGM image here");
    errmap->add_option("--csv", errmap_csv, "write the per-pixel CSV here");
    errmap->add_flag("--parallel", errmap_parallel, "fan pixel rows out over hardware threads");

    // hsweep
    CLI::App* hsweep = app.add_subcommand(
        "hsweep", "benchmark derivative kinds along one direction over a step-size range");
    std::string hsweep_field, hsweep_point, hsweep_dir;
    std::string hsweep_kinds = "central,complex";
    std::string hsweep_h = "1e-2:1e-150:log";
    std::string hsweep_out;
    hsweep->add_option("--field", hsweep_field, "field spec with an analytic gradient")
        ->required();
    hsweep->add_option("--point", hsweep_point, "query point, e.g. 1 or 0.5,0.5")->required();
    hsweep->add_option("--dir", hsweep_dir, "direction (normalized), e.g. 1 or 0.6,0.8")
        ->required();
    hsweep->add_option("--kinds", hsweep_kinds,
                       "comma-separated derivative kinds (default central,complex)");
    hsweep->add_option("--h", hsweep_h,
                       "step range start:stop:log|lin[,count] (default 1e-2:1e-150:log, count "
                       "50)");
    hsweep->add_option("--out", hsweep_out, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        int code = app.exit(e, out, sink);
        if (code == 0) return 0;
        err << "usage error: " << (sink.str().empty() ? e.what() : sink.str());
        return 2;
    }

    try {
        if (dirs->parsed()) {
            bool have_polygon = dirs_polygon_opt->count() > 0;
            bool have_polyhedron = dirs_polyhedron_opt->count() > 0;
            if (have_polygon == have_polyhedron)
                throw std::invalid_argument(
                    "--polygon/--polyhedron: exactly one direction-set source is required");
            DirectionSet s =
                have_polygon
                    ? polygon_set(dirs_polygon, polygon_span_from_string(dirs_span))
                    : polyhedron_set(dirs_polyhedron);
            if (dirs_dim != 0 && dirs_dim != s.dim())
                throw std::invalid_argument("--dim: set " + s.source() + " has dimension " +
                                            std::to_string(s.dim()) + ", not " +
                                            std::to_string(dirs_dim));
            if (dirs_seed_opt->count() > 0)
                s = rotate_set(s, random_rotation(s.dim(), dirs_seed), dirs_seed);
            detail::print_dirs_csv(s, out);
            return 0;
        }

        if (frames_cmd->parsed()) {
            if (frames_survey) {
                out << "set,dim,vectors,lines,orthogonal_pairs,frames,antipodal_closed,"
                       "max_unit_residual,centroid_norm,min_pairwise_angle_deg\n";
                for (Polyhedron p : all_polyhedra())
                    detail::print_survey_row(validate_set(polyhedron_set(p), frames_tol), out);
                return 0;
            }
            bool have_polygon = frames_polygon_opt->count() > 0;
            bool have_polyhedron = frames_polyhedron_opt->count() > 0;
            if (have_polygon == have_polyhedron)
                throw std::invalid_argument(
                    "--polygon/--polyhedron: exactly one direction-set source is required");
            DirectionSet s =
                have_polygon
                    ? polygon_set(frames_polygon, polygon_span_from_string(frames_span))
                    : polyhedron_set(frames_polyhedron);
            if (frames_seed_opt->count() > 0)
                s = rotate_set(s, random_rotation(s.dim(), frames_seed), frames_seed);
            SetReport report = validate_set(s, frames_tol);
            std::vector<OrthonormalFrame> found = find_orthonormal_frames(s, frames_tol);
            detail::print_frames_csv(found, s.dim(), out);
            err << "set=" << report.source << " vectors=" << report.vector_count
                << " lines=" << report.line_count
                << " orthogonal_pairs=" << report.orthogonal_pairs
                << " frames=" << report.frame_count << '\n';
            return 0;
        }

        if (grad->parsed()) {
            ScalarField field = detail::parse_field(grad_field);
            Vec p0 = detail::parse_point(grad_point, "--point");
            if (p0.dim() != field.dim())
                throw std::invalid_argument("--point: dimension mismatch (field " + field.name() +
                                            " is " + std::to_string(field.dim()) +
                                            "D, point has " + std::to_string(p0.dim()) +
                                            " coordinates)");
            EstimatorConfig cfg = grad_flags.to_config(field);
            detail::print_estimate_record(estimate(field, p0, cfg), out);
            return 0;
        }

        if (errmap->parsed()) {
            ScalarField field = detail::parse_field(errmap_field);
            std::vector<std::string> parts = detail::split(errmap_point_bounds, ':');
            if (parts.size() != 4)
                throw std::invalid_argument("--bounds: expected xmin:xmax:ymin:ymax");
            double bx0 = detail::parse_double(parts[0], "--bounds");
            double bx1 = detail::parse_double(parts[1], "--bounds");
            double by0 = detail::parse_double(parts[2], "--bounds");
            double by1 = detail::parse_double(parts[3], "--bounds");
            Bounds2D bounds = [&] {
                try {
                    return Bounds2D(bx0, bx1, by0, by1);
                } catch (const std::invalid_argument& e) {
                    throw std::invalid_argument("--bounds: " + std::string(e.what()));
                }
            }();
            EstimatorConfig cfg = errmap_flags.to_config(field);
            ErrorGrid grid = error_map(field, cfg, bounds, errmap_width, errmap_height,
                                       errmap_exclude, errmap_parallel);
            if (!errmap_out.empty()) {
                write_pgm(grid, std::filesystem::path(errmap_out));
                err << "wrote " << errmap_out << '\n';
            }
            if (!errmap_csv.empty()) {
                std::ofstream f = detail::open_out_file(errmap_csv);
                write_grid_csv(grid, f);
                if (!f) throw IoError("failed writing " + errmap_csv);
                err << "wrote " << errmap_csv << '\n';
            }
            detail::print_stats_record(grid, error_stats(grid), out);
            return 0;
        }

        if (hsweep->parsed()) {
            ScalarField field = detail::parse_field(hsweep_field);
            Vec p0 = detail::parse_point(hsweep_point, "--point");
            if (p0.dim() != field.dim())
                throw std::invalid_argument("--point: dimension mismatch (field " + field.name() +
                                            " is " + std::to_string(field.dim()) +
                                            "D, point has " + std::to_string(p0.dim()) +
                                            " coordinates)");
            Vec d = detail::parse_point(hsweep_dir, "--dir");
            if (d.dim() != field.dim())
                throw std::invalid_argument("--dir: dimension mismatch (field " + field.name() +
                                            " is " + std::to_string(field.dim()) +
                                            "D, direction has " + std::to_string(d.dim()) +
                                            " coordinates)");
            UnitVector n = [&] {
                try {
                    return UnitVector::normalize(d);
                } catch (const std::invalid_argument& e) {
                    throw std::invalid_argument("--dir: " + std::string(e.what()));
                }
            }();
            std::vector<double> hs = detail::parse_h_range(hsweep_h, "--h");
            std::vector<DerivKind> kinds = detail::parse_kinds(hsweep_kinds, "--kinds");
            std::vector<HSweepRow> rows = h_sweep(field, p0, n, hs, kinds);
            if (!hsweep_out.empty()) {
                std::ofstream f = detail::open_out_file(hsweep_out);
                write_sweep_csv(rows, f);
                if (!f) throw IoError("failed writing " + hsweep_out);
                err << "wrote " << hsweep_out << '\n';
            } else {
                write_sweep_csv(rows, out);
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "usage error: no subcommand selected\n";
    return 2;
}

} // namespace gradest::cli
