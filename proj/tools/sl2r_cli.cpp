#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2r/sl2r.hpp"

using namespace sl2r;
using njson = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

struct OutputConfig {
    std::string format = "csv";
    std::string out_path;
    njson tolerance;  // null unless the command carries one
    njson seed;
};

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_cell(const njson& v) {
    if (v.is_number_float()) return fmt_num(v.get<double>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

void write_rows(const OutputConfig& cfg, const std::vector<std::string>& columns,
                const std::vector<njson>& rows) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw std::domain_error("cannot open output path " + cfg.out_path);
        os = &file;
    }
    if (cfg.format == "json") {
        njson doc;
        doc["meta"] = njson{{"tolerance", cfg.tolerance},
                            {"seed", cfg.seed},
                            {"versions", njson{{"sl2r", kVersion}}}};
        doc["rows"] = rows;
        *os << doc.dump(2) << "\n";
        return;
    }
    std::string header;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) header += ", ";
        header += columns[i];
    }
    *os << header << "\n";
    for (const njson& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) line += ", ";
            if (r.contains(columns[i])) line += csv_cell(r.at(columns[i]));
        }
        *os << line << "\n";
    }
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::H2Like: return "h2-like";
        case Regime::LightLike: return "light-like";
        default: return "fibre-like";
    }
}

const char* class_name(TriangleClass c) {
    switch (c) {
        case TriangleClass::FibreLike: return "fibre-like";
        case TriangleClass::HyperbolicLike: return "hyperbolic-like";
        default: return "general";
    }
}

Triangle fibre_family(double x3, double y2) {
    return {ProjectivePoint::origin(), {1.0, 0.0, y2, 0.0}, {1.0, x3, 0.0, 0.0}};
}

Triangle hyperbolic_family(double y2, double z3) {
    return {ProjectivePoint::origin(), {1.0, 0.0, y2, 0.0}, {1.0, 0.0, 0.0, z3}};
}

njson table_row(double param, const char* param_name, const TriangleReport& rep) {
    return njson{{param_name, param},          {"alpha23", rep.alpha23},
                 {"d_A2A3", rep.side_lengths[0]}, {"omega2", rep.omega2},
                 {"omega3", rep.omega3},       {"sum", rep.angle_sum}};
}

// expected column limits for the vanishing-parameter rows of the two tables
struct LimitTargets {
    double alpha, d, omega2, omega3, sum;
};

int run_table(const OutputConfig& cfg, const char* param_name, double fixed,
              const std::vector<double>& params, bool fibre, double limit_param,
              const LimitTargets& limits, double tol, bool upper_limit_row) {
    std::vector<njson> rows;
    int exit_code = 0;

    auto compute = [&](double p) -> njson {
        const Triangle t = fibre ? fibre_family(fixed, p) : hyperbolic_family(fixed, p);
        try {
            return table_row(p, param_name, geodesic_triangle_report(t));
        } catch (const solver_error& e) {
            exit_code = 3;
            njson row{{param_name, p}};
            row["error"] = e.what();
            return row;
        }
    };

    njson limit_row = compute(limit_param);
    if (!limit_row.contains("error")) {
        const double devs[] = {std::abs(limit_row["alpha23"].get<double>() - limits.alpha),
                               std::abs(limit_row["d_A2A3"].get<double>() - limits.d),
                               std::abs(limit_row["omega2"].get<double>() - limits.omega2),
                               std::abs(limit_row["omega3"].get<double>() - limits.omega3),
                               std::abs(limit_row["sum"].get<double>() - limits.sum)};
        double worst = 0.0;
        for (double d : devs) worst = std::max(worst, d);
        limit_row["limit_deviation"] = worst;
        if (worst > tol) exit_code = std::max(exit_code, 2);
    }
    rows.push_back(limit_row);
    for (double p : params) rows.push_back(compute(p));
    if (upper_limit_row) rows.push_back(compute(1.0 - 1e-6));

    write_rows(cfg, {param_name, "alpha23", "d_A2A3", "omega2", "omega3", "sum",
                     "limit_deviation", "error"},
               rows);
    return exit_code;
}

ModelPoint random_chart_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const double x = u(rng);
    const double y = u(rng);
    const double z = u(rng);
    return {x, y, z};
}

Triangle random_triangle(std::mt19937_64& rng) {
    return {ProjectivePoint::origin(), lift(random_chart_point(rng)),
            lift(random_chart_point(rng))};
}

// a triangle whose plane has the light-like normal (1, cos tau, sin tau)
Triangle random_lightlike_triangle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> uc(-0.3, 0.3);
    const double tau = ut(rng);
    const Vec3 e1{0.0, -std::sin(tau), std::cos(tau)};
    const Vec3 e2{1.0, -std::cos(tau), -std::sin(tau)};
    const Vec3 p2 = uc(rng) * e1 + uc(rng) * e2;
    const Vec3 p3 = uc(rng) * e1 + uc(rng) * e2;
    return {ProjectivePoint::origin(), lift(ModelPoint::from(p2)), lift(ModelPoint::from(p3))};
}

std::string describe(const Triangle& t) {
    const ModelPoint a = projective_to_inhomogeneous(t.a2);
    const ModelPoint b = projective_to_inhomogeneous(t.a3);
    return "a2=(" + fmt_num(a.x) + " " + fmt_num(a.y) + " " + fmt_num(a.z) + ") a3=(" +
           fmt_num(b.x) + " " + fmt_num(b.y) + " " + fmt_num(b.z) + ")";
}

struct SuiteResult {
    std::string suite;
    long n = 0;
    double worst = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string counterexample;

    njson row() const {
        return njson{{"suite", suite},       {"n", n},
                     {"worst", worst},       {"bound", bound},
                     {"pass", pass},         {"counterexample", counterexample}};
    }
};

template <typename MakeTriangle>
SuiteResult sum_margin_suite(const std::string& name, long n, double bound, bool lower_bound,
                             MakeTriangle make) {
    SuiteResult res{name, n, lower_bound ? 1e300 : 0.0, bound, false, ""};
    for (long i = 0; i < n; ++i) {
        Triangle t;
        TriangleReport rep;
        for (int attempt = 0;; ++attempt) {
            t = make();
            try {
                rep = translation_triangle_report(t);
                break;
            } catch (const degenerate_error&) {
                if (attempt > 100) throw;
            }
        }
        const double margin = rep.angle_sum - kPi;
        const double score = lower_bound ? margin : std::abs(margin);
        const bool record = lower_bound ? score < res.worst : score > res.worst;
        if (record) {
            res.worst = score;
            res.counterexample = describe(t);
        }
    }
    res.pass = lower_bound ? res.worst >= bound : res.worst <= bound;
    if (res.pass) res.counterexample.clear();
    return res;
}

SuiteResult suite_translation_anglesum(std::mt19937_64& rng, long n) {
    return sum_margin_suite("translation-anglesum", n, -1e-9, true,
                            [&] { return random_triangle(rng); });
}

SuiteResult suite_lightlike(std::mt19937_64& rng, long n) {
    return sum_margin_suite("lightlike-equality", n, 1e-7, false,
                            [&] { return random_lightlike_triangle(rng); });
}

SuiteResult suite_nonlightlike(std::mt19937_64& rng, long n) {
    // strict excess needs planes bounded away from light-like
    auto make = [&] {
        for (;;) {
            Triangle t = random_triangle(rng);
            try {
                const Vec3 v = plane_normal(t).v;
                if (std::abs(-v.x * v.x + v.y * v.y + v.z * v.z) > 0.05 * dot(v, v)) return t;
            } catch (const degenerate_error&) {
            }
        }
    };
    SuiteResult res = sum_margin_suite("nonlightlike-strict", n, 0.0, true, make);
    res.pass = res.worst > 0.0;
    if (res.pass) res.counterexample.clear();
    return res;
}

SuiteResult suite_ode_vs_closed() {
    const double alphas[] = {0.2, kPi / 4.0, 1.0, 3.0 * kPi / 8.0, kPi / 2.0 - 0.01};
    SuiteResult res{"ode-vs-closed", 5, 0.0, 1e-6, false, ""};
    for (double a : alphas) {
        const auto path = integrate_geodesic(Direction::of(0.0, a), 2.0);
        for (const PathSample& p : path) {
            if (p.s < 0.05) continue;
            const PolarState c = geodesic_polar(p.s, a);
            const double dev = std::max({std::abs(p.state.r - c.r),
                                         std::abs(p.state.theta - c.theta),
                                         std::abs(p.state.phi - c.phi)});
            if (dev > res.worst) {
                res.worst = dev;
                res.counterexample = "alpha=" + fmt_num(a) + " s=" + fmt_num(p.s);
            }
        }
    }
    res.pass = res.worst <= res.bound;
    if (res.pass) res.counterexample.clear();
    return res;
}

SuiteResult suite_matrix_vs_closed(std::mt19937_64& rng, long n) {
    SuiteResult res{"matrix-vs-closed", n, 0.0, 1e-12, false, ""};
    for (long i = 0; i < n; ++i) {
        const Triangle t = random_triangle(rng);
        const ProjectivePoint verts[] = {t.a1, t.a2, t.a3};
        for (int vi = 1; vi <= 3; ++vi) {
            const TranslatedVertices tv = translated_vertices(t, vi);
            const IsometryMatrix back = translation_to_inverse(verts[vi - 1]);
            for (int j = 0; j < 3; ++j) {
                const ModelPoint via = projective_to_inhomogeneous(apply(back, verts[j]));
                const double dev = norm(via.vec() - tv.image[static_cast<std::size_t>(j)].vec());
                if (dev > res.worst) {
                    res.worst = dev;
                    res.counterexample = describe(t) + " vertex=" + std::to_string(vi);
                }
            }
        }
    }
    res.pass = res.worst <= res.bound;
    if (res.pass) res.counterexample.clear();
    return res;
}

SuiteResult suite_bvp_roundtrip(std::mt19937_64& rng, long n) {
    SuiteResult res{"bvp-roundtrip", n, 0.0, 1e-9, false, ""};
    for (long i = 0; i < n; ++i) {
        const ModelPoint target = random_chart_point(rng);
        const GeodesicArc arc = solve_geodesic_to(target);
        if (arc.residual > res.worst) {
            res.worst = arc.residual;
            res.counterexample = "target=(" + fmt_num(target.x) + " " + fmt_num(target.y) +
                                 " " + fmt_num(target.z) + ")";
        }
    }
    res.pass = res.worst <= res.bound;
    if (res.pass) res.counterexample.clear();
    return res;
}

SuiteResult suite_antipodality(std::mt19937_64& rng, long n) {
    SuiteResult res{"antipodality", n, 0.0, 1e-10, false, ""};
    for (long i = 0; i < n; ++i) {
        const Triangle t = random_triangle(rng);
        const TranslatedVertices f2 = translated_vertices(t, 2);
        const TranslatedVertices f3 = translated_vertices(t, 3);
        const ModelPoint c2 = projective_to_inhomogeneous(t.a2);
        const ModelPoint c3 = projective_to_inhomogeneous(t.a3);
        const double devs[] = {norm(c2.vec() + f2.image[0].vec()),
                               norm(c3.vec() + f3.image[0].vec()),
                               norm(f2.image[2].vec() + f3.image[1].vec())};
        for (double d : devs) {
            if (d > res.worst) {
                res.worst = d;
                res.counterexample = describe(t);
            }
        }
    }
    res.pass = res.worst <= res.bound;
    if (res.pass) res.counterexample.clear();
    return res;
}

std::vector<double> unit_grid(int n) {
    std::vector<double> g;
    for (int i = 1; i <= n; ++i) g.push_back(static_cast<double>(i) / (n + 1));
    return g;
}

struct GridOutcome {
    double min_margin = 1e300;
    double max_margin = -1e300;
    double worst_right_angle = 0.0;
    std::string at_min, at_max, at_angle;
    std::vector<njson> rows;
};

GridOutcome run_grid(bool fibre, int n) {
    GridOutcome out;
    for (double a : unit_grid(n)) {
        for (double b : unit_grid(n)) {
            const Triangle t = fibre ? fibre_family(a, b) : hyperbolic_family(a, b);
            const TriangleReport rep = geodesic_triangle_report(t);
            const double margin = rep.angle_sum - kPi;
            const std::string where = "u=" + fmt_num(a) + " v=" + fmt_num(b);
            if (margin < out.min_margin) {
                out.min_margin = margin;
                out.at_min = where;
            }
            if (margin > out.max_margin) {
                out.max_margin = margin;
                out.at_max = where;
            }
            const double ra = std::abs(rep.omega1 - kPi / 2.0);
            if (ra > out.worst_right_angle) {
                out.worst_right_angle = ra;
                out.at_angle = where;
            }
            out.rows.push_back(njson{{"family", fibre ? "fibre" : "hyperbolic"},
                                     {"u", a},
                                     {"v", b},
                                     {"omega1", rep.omega1},
                                     {"omega2", rep.omega2},
                                     {"omega3", rep.omega3},
                                     {"sum", rep.angle_sum},
                                     {"margin", margin}});
        }
    }
    return out;
}

std::vector<SuiteResult> grid_suites(int n) {
    const GridOutcome fib = run_grid(true, n);
    const GridOutcome hyp = run_grid(false, n);
    std::vector<SuiteResult> out;
    const long cells = static_cast<long>(n) * n;
    out.push_back({"grid-fibre-sum", cells, fib.min_margin, -1e-7,
                   fib.min_margin >= -1e-7, fib.min_margin >= -1e-7 ? "" : fib.at_min});
    out.push_back({"grid-fibre-right-angle", cells, fib.worst_right_angle, 1e-8,
                   fib.worst_right_angle <= 1e-8,
                   fib.worst_right_angle <= 1e-8 ? "" : fib.at_angle});
    out.push_back({"grid-hyperbolic-sum", cells, hyp.max_margin, 1e-7,
                   hyp.max_margin <= 1e-7, hyp.max_margin <= 1e-7 ? "" : hyp.at_max});
    out.push_back({"grid-hyperbolic-right-angle", cells, hyp.worst_right_angle, 1e-8,
                   hyp.worst_right_angle <= 1e-8,
                   hyp.worst_right_angle <= 1e-8 ? "" : hyp.at_angle});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesics, translation curves, and triangle angle sums in the projective "
                 "model of the twisted H2xR geometry"};
    app.fallthrough();  // let subcommands accept the global --format/--out
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this path instead of stdout");

    double gx = 0.0, gy = 0.0, gz = 0.0;
    auto* geo = app.add_subcommand("geodesic", "solve the geodesic from the origin to a point");
    geo->add_option("x", gx, "chart x")->required();
    geo->add_option("y", gy, "chart y")->required();
    geo->add_option("z", gz, "chart z")->required();

    double tx = 0.0, ty = 0.0, tz = 0.0;
    auto* tra =
        app.add_subcommand("translate", "solve the translation curve from the origin to a point");
    tra->add_option("x", tx, "chart x")->required();
    tra->add_option("y", ty, "chart y")->required();
    tra->add_option("z", tz, "chart z")->required();

    std::vector<double> tri_coords;
    std::string tri_kind = "geodesic";
    auto* tri = app.add_subcommand("triangle",
                                   "angle report for the triangle (origin, A2, A3)");
    tri->add_option("coords", tri_coords, "six chart coordinates: x2 y2 z2 x3 y3 z3")
        ->expected(6)
        ->required();
    tri->add_option("--kind", tri_kind, "triangle kind")
        ->check(CLI::IsMember({"geodesic", "translation"}))
        ->capture_default_str();

    double t3_x3 = 0.2, t3_tol = 1e-4;
    auto* t3 = app.add_subcommand("table3", "fibre-like right-angled family sweep");
    t3->add_option("--x3", t3_x3, "fibre coordinate of A3")->capture_default_str();
    t3->add_option("--tol", t3_tol, "limit-row tolerance")->capture_default_str();

    double t4_y2 = 0.5, t4_tol = 1e-4;
    auto* t4 = app.add_subcommand("table4", "hyperbolic-like right-angled family sweep");
    t4->add_option("--y2", t4_y2, "base-plane coordinate of A2")->capture_default_str();
    t4->add_option("--tol", t4_tol, "limit-row tolerance")->capture_default_str();

    double fp_y2 = 0.5, fp_z3 = 0.5, fp_x3 = 0.5, fp_tol = 1e-10;
    auto* fp = app.add_subcommand(
        "find-pi", "bisect between a hyperbolic-like and a fibre-like apex for angle sum pi");
    fp->add_option("--y2", fp_y2, "A2 = (1:0:y2:0)")->capture_default_str();
    fp->add_option("--z3", fp_z3, "start apex (1:0:0:z3)")->capture_default_str();
    fp->add_option("--x3", fp_x3, "end apex (1:x3:0:0)")->capture_default_str();
    fp->add_option("--tol", fp_tol, "angle sum tolerance")->capture_default_str();

    int sw_n = 19;
    std::string sw_family = "both";
    auto* sw = app.add_subcommand("sweep", "right-angled family grids with margin checks");
    sw->add_option("--n", sw_n, "grid points per axis")->check(CLI::PositiveNumber)
        ->capture_default_str();
    sw->add_option("--family", sw_family, "which family")
        ->check(CLI::IsMember({"fibre", "hyperbolic", "both"}))
        ->capture_default_str();

    std::string vf_suite = "all";
    std::uint64_t vf_seed = 12345;
    long vf_n = 0;
    auto* vf = app.add_subcommand("verify", "run the property suites");
    vf->add_option("--suite", vf_suite, "which suite")
        ->check(CLI::IsMember({"all", "translation-anglesum", "lightlike-equality",
                               "nonlightlike-strict", "ode-vs-closed", "matrix-vs-closed",
                               "bvp-roundtrip", "antipodality", "grids"}))
        ->capture_default_str();
    vf->add_option("--seed", vf_seed, "random seed")->capture_default_str();
    vf->add_option("--n", vf_n, "sample count override for sampled suites")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    OutputConfig cfg;
    cfg.format = format;
    cfg.out_path = out_path;

    try {
        if (geo->parsed()) {
            const GeodesicArc arc = solve_geodesic_to({gx, gy, gz});
            write_rows(cfg, {"s", "lambda", "alpha", "regime", "residual"},
                       {njson{{"s", arc.s},
                              {"lambda", arc.dir.lambda},
                              {"alpha", arc.dir.alpha},
                              {"regime", regime_name(arc.dir.regime)},
                              {"residual", arc.residual}}});
            return 0;
        }
        if (tra->parsed()) {
            const TranslationArc arc = solve_translation_to({tx, ty, tz});
            write_rows(cfg, {"s", "lambda", "alpha", "regime", "minkowski_tangent_sq"},
                       {njson{{"s", arc.s},
                              {"lambda", arc.dir.lambda},
                              {"alpha", arc.dir.alpha},
                              {"regime", regime_name(arc.dir.regime)},
                              {"minkowski_tangent_sq", std::cos(2.0 * arc.dir.alpha)}}});
            return 0;
        }
        if (tri->parsed()) {
            const Triangle t{ProjectivePoint::origin(),
                             lift({tri_coords[0], tri_coords[1], tri_coords[2]}),
                             lift({tri_coords[3], tri_coords[4], tri_coords[5]})};
            const bool translation = tri_kind == "translation";
            const TriangleReport rep =
                translation ? translation_triangle_report(t) : geodesic_triangle_report(t);
            njson row{{"kind", tri_kind},
                      {"class", class_name(rep.classification)},
                      {"omega1", rep.omega1},
                      {"omega2", rep.omega2},
                      {"omega3", rep.omega3},
                      {"sum", rep.angle_sum},
                      {"d_A2A3", rep.side_lengths[0]},
                      {"d_A1A3", rep.side_lengths[1]},
                      {"d_A1A2", rep.side_lengths[2]},
                      {"alpha23", rep.alpha23}};
            std::vector<std::string> cols = {"kind",   "class",  "omega1", "omega2",
                                             "omega3", "sum",    "d_A2A3", "d_A1A3",
                                             "d_A1A2", "alpha23"};
            if (translation) {
                const PlaneNormal nrm = plane_normal(t);
                row["normal_x"] = nrm.v.x;
                row["normal_y"] = nrm.v.y;
                row["normal_z"] = nrm.v.z;
                row["lightlike"] = is_lightlike(nrm);
                cols.insert(cols.end(), {"normal_x", "normal_y", "normal_z", "lightlike"});
            }
            write_rows(cfg, cols, {row});
            return 0;
        }
        if (t3->parsed()) {
            cfg.tolerance = t3_tol;
            const LimitTargets lim{kPi / 2.0, std::atan(t3_x3), kPi / 2.0, 0.0, kPi};
            return run_table(cfg, "y2", t3_x3,
                             {0.001, 1.0 / 3.0, 0.5, 0.75, 0.999}, true, 1e-6, lim, t3_tol,
                             true);
        }
        if (t4->parsed()) {
            cfg.tolerance = t4_tol;
            const LimitTargets lim{0.0, std::atanh(t4_y2), 0.0, kPi / 2.0, kPi};
            return run_table(cfg, "z3", t4_y2,
                             {0.1, 1.0 / 3.0, 0.999, (1e6 - 1.0) / 1e6}, false, 1e-6, lim,
                             t4_tol, false);
        }
        if (fp->parsed()) {
            cfg.tolerance = fp_tol;
            const PiSearchResult res = find_pi_sum_triangle(
                {1.0, 0.0, fp_y2, 0.0}, {1.0, 0.0, 0.0, fp_z3}, {1.0, fp_x3, 0.0, 0.0}, fp_tol);
            const ModelPoint apex = projective_to_inhomogeneous(res.triangle.a3);
            write_rows(cfg,
                       {"t", "x", "y", "z", "omega1", "omega2", "omega3", "sum", "deviation"},
                       {njson{{"t", res.t},
                              {"x", apex.x},
                              {"y", apex.y},
                              {"z", apex.z},
                              {"omega1", res.report.omega1},
                              {"omega2", res.report.omega2},
                              {"omega3", res.report.omega3},
                              {"sum", res.report.angle_sum},
                              {"deviation", std::abs(res.report.angle_sum - kPi)}}});
            return 0;
        }
        if (sw->parsed()) {
            std::vector<njson> rows;
            bool ok = true;
            if (sw_family != "hyperbolic") {
                const GridOutcome g = run_grid(true, sw_n);
                rows.insert(rows.end(), g.rows.begin(), g.rows.end());
                ok = ok && g.min_margin >= -1e-7 && g.worst_right_angle <= 1e-8;
            }
            if (sw_family != "fibre") {
                const GridOutcome g = run_grid(false, sw_n);
                rows.insert(rows.end(), g.rows.begin(), g.rows.end());
                ok = ok && g.max_margin <= 1e-7 && g.worst_right_angle <= 1e-8;
            }
            write_rows(cfg, {"family", "u", "v", "omega1", "omega2", "omega3", "sum", "margin"},
                       rows);
            return ok ? 0 : 2;
        }
        if (vf->parsed()) {
            cfg.seed = vf_seed;
            std::mt19937_64 rng(vf_seed);
            auto pick = [&](long fallback) { return vf_n > 0 ? vf_n : fallback; };
            std::vector<SuiteResult> results;
            auto want = [&](const char* s) { return vf_suite == "all" || vf_suite == s; };
            if (want("translation-anglesum"))
                results.push_back(suite_translation_anglesum(rng, pick(1000)));
            if (want("lightlike-equality")) results.push_back(suite_lightlike(rng, pick(200)));
            if (want("nonlightlike-strict"))
                results.push_back(suite_nonlightlike(rng, pick(200)));
            if (want("ode-vs-closed")) results.push_back(suite_ode_vs_closed());
            if (want("matrix-vs-closed"))
                results.push_back(suite_matrix_vs_closed(rng, pick(100)));
            if (want("bvp-roundtrip")) results.push_back(suite_bvp_roundtrip(rng, pick(500)));
            if (want("antipodality")) results.push_back(suite_antipodality(rng, pick(100)));
            if (want("grids")) {
                for (const SuiteResult& r : grid_suites(19)) results.push_back(r);
            }
            std::vector<njson> rows;
            bool ok = true;
            for (const SuiteResult& r : results) {
                rows.push_back(r.row());
                ok = ok && r.pass;
                if (!r.pass)
                    std::cerr << "violation in " << r.suite << ": worst " << fmt_num(r.worst)
                              << " vs bound " << fmt_num(r.bound) << " at " << r.counterexample
                              << "\n";
            }
            write_rows(cfg, {"suite", "n", "worst", "bound", "pass", "counterexample"}, rows);
            return ok ? 0 : 2;
        }
    } catch (const solver_error& e) {
        std::cerr << "solver failure: " << e.what() << " (residual " << fmt_num(e.residual)
                  << ")\n";
        return 3;
    } catch (const chart_error& e) {
        std::cerr << "chart error: " << e.what() << "\n";
        return 4;
    } catch (const degenerate_error& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
