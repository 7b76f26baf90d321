// cmclab: verification toolkit for the constant-curvature CMC surface
// catalog, its compatibility equations and the congruence classification.
//
// Commands: curves, verify, classify-moebius, classify-pair, polycheck.
// Exit codes: 0 pass, 1 verification failure, 2 usage/domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cmclab/compat.hpp"
#include "cmclab/diffgeo.hpp"
#include "cmclab/pairs.hpp"
#include "cmclab/polyverify.hpp"

using namespace cmclab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

// ---------------------------------------------------------------- curves

struct CurvesOptions {
    double tau = 0.5;
    int eps = 1;
    double H = 0.25;
    std::string range = "-5:5";
    int samples = 400;
    std::string out;
    std::string format = "csv";
};

int run_curves(const CurvesOptions& opt) {
    const auto colon = opt.range.find(':');
    if (colon == std::string::npos) throw ParameterError("range must be lo:hi");
    const double lo = std::stod(opt.range.substr(0, colon));
    const double hi = std::stod(opt.range.substr(colon + 1));
    if (!(hi > lo) || opt.samples < 2) throw ParameterError("need hi > lo and samples >= 2");

    const SurfaceType type = screw_type(opt.H, opt.tau, opt.eps);
    std::vector<ScrewProfile> rows(opt.samples);
    std::vector<double> sigmas(opt.samples);
    for (int i = 0; i < opt.samples; ++i)
        sigmas[i] = lo + (hi - lo) * i / (opt.samples - 1.0);
    parallel_for_index(rows.size(), [&](std::size_t i) {
        rows[i] = screw_profile(opt.H, opt.tau, opt.eps, sigmas[i]);
    });

    std::ostringstream os;
    if (opt.format == "csv") {
        os << "sigma,f,u,type\n";
        for (int i = 0; i < opt.samples; ++i)
            os << fmt17(sigmas[i]) << "," << fmt17(rows[i].f) << "," << fmt17(rows[i].u) << ","
               << type.name() << "\n";
    } else if (opt.format == "json") {
        nlohmann::json j;
        j["type"] = type.name();
        nlohmann::json data = nlohmann::json::array();
        for (int i = 0; i < opt.samples; ++i)
            data.push_back({{"sigma", sigmas[i]}, {"f", rows[i].f}, {"u", rows[i].u}});
        j["rows"] = std::move(data);
        os << j.dump(2) << "\n";
    } else {
        throw ParameterError("format must be csv or json");
    }
    write_output(opt.out, os.str());
    return kExitPass;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string surface;
    double H = 0.25;
    double tau = 0.5;
    int eps = 1;
    double c = -1.0;
    double k = 0.5;
    double k1 = 1.0, k2 = 1.0;
    double K_override = std::numeric_limits<double>::quiet_NaN();
    std::string grid;
    std::string out;
    double tol_closed = 1e-7;
    double tol_fd = 1e-4;
    double tol_curv = 1e-6;
    double tol_logq = 1e-4;
};

Grid parse_grid(const std::string& s, const Grid& fallback) {
    if (s.empty()) return fallback;
    // format: u0:u1:nu,v0:v1:nv
    Grid g = fallback;
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParameterError("grid must be u0:u1:n,v0:v1:n");
    auto parse_axis = [](const std::string& axis, double& lo, double& hi, int& n) {
        const auto c1 = axis.find(':');
        const auto c2 = axis.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParameterError("grid axis must be lo:hi:n");
        lo = std::stod(axis.substr(0, c1));
        hi = std::stod(axis.substr(c1 + 1, c2 - c1 - 1));
        n = std::stoi(axis.substr(c2 + 1));
        if (n < 2) throw ParameterError("grid counts must be >= 2");
    };
    parse_axis(s.substr(0, comma), g.lo[0], g.hi[0], g.n0);
    parse_axis(s.substr(comma + 1), g.lo[1], g.hi[1], g.n1);
    return g;
}

ResidualReport numeric_H_check(const ImmersionSpec& spec, double H_expected, const Grid& grid,
                               double tol, double step = 1e-2) {
    const AmbientSpace space = ambient_of(spec);
    const auto pts = grid.points();
    std::vector<double> vals(pts.size());
    parallel_for_index(pts.size(), [&](std::size_t i) {
        vals[i] = std::abs(second_form_and_curvatures(spec, space, pts[i], step).H) -
                  std::abs(H_expected);
    });
    ResidualReport rep;
    rep.name = "mean-curvature";
    rep.tol = tol;
    for (std::size_t i = 0; i < pts.size(); ++i) rep.add(pts[i], "|H|", vals[i]);
    rep.finalize();
    return rep;
}

ResidualReport numeric_K_check(const MetricField& metric, double K_expected, const Grid& grid,
                               double tol) {
    const auto pts = grid.points();
    std::vector<double> vals(pts.size());
    parallel_for_index(pts.size(), [&](std::size_t i) {
        vals[i] = gauss_curvature(metric, pts[i]) - K_expected;
    });
    ResidualReport rep;
    rep.name = "gauss-curvature";
    rep.tol = tol;
    for (std::size_t i = 0; i < pts.size(); ++i) rep.add(pts[i], "K", vals[i]);
    rep.finalize();
    return rep;
}

ResidualReport metric_match_check(const ImmersionSpec& spec, const MetricField& closed,
                                  const Grid& grid, double tol, double step = 1e-2) {
    const AmbientSpace space = ambient_of(spec);
    const auto pts = grid.points();
    std::vector<double> vals(pts.size());
    parallel_for_index(pts.size(), [&](std::size_t i) {
        const Eigen::Matrix2d diff =
            induced_metric(spec, space, pts[i], step) - closed.value(pts[i]);
        vals[i] = diff.cwiseAbs().maxCoeff();
    });
    ResidualReport rep;
    rep.name = "induced-vs-closed-metric";
    rep.tol = tol;
    for (std::size_t i = 0; i < pts.size(); ++i) rep.add(pts[i], "metric", vals[i]);
    rep.finalize();
    return rep;
}

int run_verify(const VerifyOptions& opt) {
    std::vector<ResidualReport> checks;
    nlohmann::json params;

    if (opt.surface == "helicoid") {
        SurfaceData sd = helicoid_surface_data(opt.H);
        if (!std::isnan(opt.K_override)) sd.K = opt.K_override;
        const Grid grid = parse_grid(opt.grid, Grid{});
        checks.push_back(check_M_system(sd, grid, opt.tol_closed));
        checks.push_back(check_constant_K_system(sd, grid, opt.tol_closed));
        checks.push_back(check_bochner(sd, grid, opt.tol_closed));
        checks.push_back(check_log_q(sd, grid, opt.tol_logq));
        const ImmersionSpec spec = ImmersionSpec::helicoid(opt.H);
        checks.push_back(numeric_H_check(spec, opt.H, grid, opt.tol_curv));
        checks.push_back(numeric_K_check(helicoid_metric_field(opt.H), sd.K, grid, opt.tol_curv));
        checks.push_back(metric_match_check(spec, helicoid_metric_field(opt.H), grid, 1e-7));
        params = {{"H", opt.H}};
    } else if (opt.surface == "arl") {
        SurfaceData sd = arl_surface_data(opt.H);
        if (!std::isnan(opt.K_override)) sd.K = opt.K_override;
        Grid grid = parse_grid(opt.grid, Grid{{-2.0, 0.2}, {2.0, 2.2}, 10, 10});
        checks.push_back(check_M_system(sd, grid, opt.tol_closed));
        checks.push_back(check_q_vanishing(sd, grid, 1e-9));
        checks.push_back(check_bochner(sd, grid, opt.tol_closed));
        params = {{"H", opt.H}};
    } else if (opt.surface == "parabolic") {
        const Grid grid = parse_grid(opt.grid, Grid{{-1.0, 0.1}, {1.0, 0.9}, 10, 10});
        const ImmersionSpec spec = ImmersionSpec::parabolic(opt.tau);
        checks.push_back(numeric_H_check(spec, 0.0, grid, opt.tol_curv, 5e-3));
        checks.push_back(numeric_K_check(parabolic_metric_field(opt.tau), -1.0, grid, opt.tol_curv));
        checks.push_back(metric_match_check(spec, parabolic_metric_field(opt.tau), grid, 1e-7, 5e-3));
        params = {{"tau", opt.tau}};
    } else if (opt.surface == "screw") {
        const Grid grid = parse_grid(opt.grid, Grid{{-2.0, -1.0}, {2.0, 1.0}, 10, 10});
        const ImmersionSpec spec = ImmersionSpec::screw(opt.H, opt.tau, opt.eps);
        const double K = std::isnan(opt.K_override) ? 4.0 * opt.H * opt.H - 1.0 : opt.K_override;
        checks.push_back(numeric_H_check(spec, opt.H, grid, opt.tol_curv, 4e-3));
        checks.push_back(numeric_K_check(screw_metric_field(opt.H, opt.tau, opt.eps), K, grid,
                                         opt.tol_curv));
        checks.push_back(metric_match_check(spec, screw_metric_field(opt.H, opt.tau, opt.eps),
                                            grid, 1e-6, 4e-3));
        params = {{"H", opt.H},
                  {"tau", opt.tau},
                  {"eps", opt.eps},
                  {"type", screw_type(opt.H, opt.tau, opt.eps).name()}};
    } else if (opt.surface == "cylinder") {
        SurfaceData sd = cylinder_surface_data(opt.c, opt.k);
        if (!std::isnan(opt.K_override)) sd.K = opt.K_override;
        const Grid grid = parse_grid(opt.grid, Grid{{-1.0, -1.0}, {1.0, 1.0}, 8, 8});
        checks.push_back(check_M_system(sd, grid, opt.tol_closed));
        checks.push_back(numeric_K_check(flat_metric_field(), 0.0, grid, 1e-10));
        const double kh = opt.k / std::sqrt(std::abs(opt.c));
        if (opt.c > 0.0 || std::abs(kh) != 1.0) {
            const ImmersionSpec spec = ImmersionSpec::vertical_cylinder(opt.c, opt.k);
            checks.push_back(numeric_H_check(spec, opt.k / 2.0, grid, opt.tol_curv));
        }
        params = {{"c", opt.c}, {"k", opt.k}};
    } else if (opt.surface == "curveproduct") {
        const CurveProductData d = curveproduct_eval(opt.k1, opt.k2, {0.0, 0.0});
        ResidualReport rep;
        rep.name = "curve-product";
        rep.tol = 1e-12;
        rep.add({0.0, 0.0}, "4H^2-k1^2-k2^2",
                4.0 * d.H * d.H - opt.k1 * opt.k1 - opt.k2 * opt.k2);
        rep.finalize();
        checks.push_back(rep);
        params = {{"k1", opt.k1}, {"k2", opt.k2}, {"H", d.H}};
    } else {
        throw ParameterError("unknown surface: " + opt.surface);
    }

    bool all_pass = true;
    nlohmann::json jchecks = nlohmann::json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        jchecks.push_back(
            {{"name", c.name}, {"max_abs", c.max_abs}, {"tol", c.tol}, {"pass", c.pass}});
    }
    nlohmann::json report;
    report["surface"] = opt.surface;
    report["params"] = params;
    report["checks"] = std::move(jchecks);
    report["pass"] = all_pass;
    write_output(opt.out, report.dump(2) + "\n");
    return all_pass ? kExitPass : kExitCheckFailed;
}

// ------------------------------------------------- classify-moebius / pair

MoebiusElement parse_matrix(const std::string& matrix, const std::string& orientation) {
    const bool anti = orientation == "-";
    if (!anti && orientation != "+") throw ParameterError("orientation must be + or -");
    if (matrix == "id") {
        return anti ? MoebiusElement::eta() : MoebiusElement::identity();
    }
    if (matrix == "eta") return MoebiusElement::eta();
    if (matrix == "xi") return MoebiusElement::xi();
    if (matrix == "zeta") return MoebiusElement::zeta();
    std::array<Rational, 4> e;
    std::stringstream ss(matrix);
    std::string tok;
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, tok, ',')) throw ParameterError("matrix needs 4 entries a,b,c,d");
        e[i] = parse_rational(tok);
    }
    if (std::getline(ss, tok, ',')) throw ParameterError("matrix needs exactly 4 entries");
    return MoebiusElement::from_action_matrix(e[0], e[1], e[2], e[3], anti);
}

int run_classify_moebius(const std::string& matrix, const std::string& orientation) {
    const MoebiusElement f = parse_matrix(matrix, orientation);
    const XYClass cls = class_xy(f);
    const CanonicalRep rep = canonical_yy(f);
    std::cout << "element: " << f.to_string() << "\n";
    std::cout << "class_xy: " << (cls == XYClass::IdClass ? "IdClass" : "ZetaClass") << "\n";
    std::cout << "canonical_yy: " << rep.to_string() << "\n";
    const auto r = rho(f.antiholomorphic() ? compose(MoebiusElement::eta(), f) : f);
    std::cout << "rho: " << (r ? to_string(*r) : "inf") << "\n";
    return kExitPass;
}

CmcClass parse_cmc_class(const std::string& desc) {
    // family:matrix:orientation, or cyl:k / slice
    const auto c1 = desc.find(':');
    const std::string fam = desc.substr(0, c1);
    if (fam == "slice") return CmcClass::slice();
    if (c1 == std::string::npos) throw ParameterError("descriptor must be family:...");
    if (fam == "cyl") {
        const double k = static_cast<double>(parse_rational(desc.substr(c1 + 1)));
        return CmcClass::cylinder(k);
    }
    const auto c2 = desc.rfind(':');
    if (c2 == c1) throw ParameterError("descriptor must be family:matrix:orientation");
    const MoebiusElement f =
        parse_matrix(desc.substr(c1 + 1, c2 - c1 - 1), desc.substr(c2 + 1));
    if (fam == "hel") return CmcClass::helicoid(f);
    if (fam == "arl") return CmcClass::arl(f);
    throw ParameterError("unknown family: " + fam);
}

int run_classify_pair(const std::string& first, const std::string& second, int c) {
    const PmcBucket bucket = classify_pair(c, parse_cmc_class(first), parse_cmc_class(second));
    std::cout << "bucket: " << bucket.to_string() << "\n";
    if (bucket.mean_curvature)
        std::cout << "H: " << fmt17(*bucket.mean_curvature) << "\n";
    if (const auto st = bucket.stabilizer_descriptor())
        std::cout << "stabilizer: " << st->to_string() << "\n";
    return kExitPass;
}

// -------------------------------------------------------------- polycheck

int run_polycheck(const std::string& out_json) {
    const LemmaReport rep = verify_lemma();
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.label << " = " << c.detail << "\n";
    std::cout << "(M6)_20 = 0 and (M6)_18 = -486*c^9*(4*H^2 + c - K): "
              << (rep.pass ? "verified" : "FAILED") << "\n";
    std::cout << "nu-coefficients of (M6):\n";
    for (const auto& [d, s] : rep.coefficients)
        std::cout << "  [nu^" << d << "] " << s << "\n";
    if (!out_json.empty()) write_output(out_json, rep.to_json().dump(2) + "\n");
    return rep.pass ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cmclab: CMC surface catalog verification toolkit"};
    app.require_subcommand(1);

    CurvesOptions copt;
    auto* curves = app.add_subcommand("curves", "sample a screw-motion generating curve");
    curves->add_option("--tau", copt.tau, "bundle curvature")->required();
    curves->add_option("--eps", copt.eps, "screw sign, +1 or -1")->required();
    curves->add_option("--H", copt.H, "mean curvature")->required();
    curves->add_option("--range", copt.range, "sigma range lo:hi");
    curves->add_option("--samples", copt.samples, "number of samples");
    curves->add_option("--out", copt.out, "output path (default stdout)");
    curves->add_option("--format", copt.format, "csv or json");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run the residual suite for a catalog surface");
    verify->add_option("--surface", vopt.surface,
                       "helicoid|arl|parabolic|screw|cylinder|curveproduct")->required();
    verify->add_option("--H", vopt.H, "mean curvature");
    verify->add_option("--tau", vopt.tau, "bundle curvature");
    verify->add_option("--eps", vopt.eps, "screw sign");
    verify->add_option("--c", vopt.c, "base curvature");
    verify->add_option("--k", vopt.k, "cylinder geodesic curvature");
    verify->add_option("--k1", vopt.k1, "first curve curvature");
    verify->add_option("--k2", vopt.k2, "second curve curvature");
    verify->add_option("--K", vopt.K_override, "declared intrinsic curvature override");
    verify->add_option("--grid", vopt.grid, "grid u0:u1:n,v0:v1:n");
    verify->add_option("--out", vopt.out, "report path (default stdout)");
    verify->add_option("--tol-residual", vopt.tol_closed, "tolerance for closed-form residuals");
    verify->add_option("--tol-curvature", vopt.tol_curv, "tolerance for H/K checks");
    verify->add_option("--tol-logq", vopt.tol_logq, "tolerance for the log-q identity");

    std::string matrix, orientation = "+";
    auto* cm = app.add_subcommand("classify-moebius", "canonical form of an isometry of Omega");
    cm->add_option("--matrix", matrix, "a,b,c,d with rational entries, or id|eta|xi|zeta")
        ->required();
    cm->add_option("--orientation", orientation, "+ (holomorphic) or - (antiholomorphic)");

    std::string first, second;
    int pair_c = -1;
    auto* cp = app.add_subcommand("classify-pair", "bucket an unordered pair of CMC classes");
    cp->add_option("--first", first, "family:matrix:orientation (hel|arl), cyl:k, slice")
        ->required();
    cp->add_option("--second", second, "second descriptor")->required();
    cp->add_option("--c", pair_c, "ambient curvature sign, +1 or -1");

    std::string poly_out;
    auto* pc = app.add_subcommand("polycheck", "exact verification of the degree-18 lemma");
    pc->add_option("--out", poly_out, "also write a JSON coefficient table");

    try {
        app.parse(argc, argv);
        if (curves->parsed()) return run_curves(copt);
        if (verify->parsed()) return run_verify(vopt);
        if (cm->parsed()) return run_classify_moebius(matrix, orientation);
        if (cp->parsed()) return run_classify_pair(first, second, pair_c);
        if (pc->parsed()) return run_polycheck(poly_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
