#include "cmclab/compat.hpp"

#include <cmath>

#include "cmclab/numeric.hpp"

namespace cmclab {

void ResidualReport::add(const Eigen::Vector2d& p, const std::string& eq, double value) {
    residuals.push_back({p, eq, value});
    max_abs = std::max(max_abs, std::abs(value));
}

void ResidualReport::finalize() { pass = max_abs < tol; }

nlohmann::json ResidualReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["max_abs"] = max_abs;
    j["tol"] = tol;
    j["pass"] = pass;
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : residuals)
        rs.push_back({{"point", {r.point[0], r.point[1]}},
                      {"equation", r.equation},
                      {"value", r.value}});
    j["residuals"] = std::move(rs);
    return j;
}

std::array<double, 3> residual_C(const GaussCodazziPoint& gc) {
    const Eigen::Matrix2d& g = gc.metric;
    const double c1 = gc.K - (gc.S.determinant() + gc.c * gc.nu * gc.nu);
    const Eigen::Vector2d v = gc.grad_nu + gc.S * gc.T;
    const double c4 = std::sqrt(v.dot(g * v));
    const double c5 = gc.T.dot(g * gc.T) + gc.nu * gc.nu - 1.0;
    return {c1, c4, c5};
}

std::array<double, 4> residual_M(const SurfaceData& sd, const Eigen::Vector2d& p) {
    const double nu = sd.nu.value(p);
    const double H = sd.H, K = sd.K, c = sd.c;
    const double gnn = intrinsic_gradient_sq(sd.metric, sd.nu, p, sd.step);
    const double ghh = intrinsic_gradient_sq(sd.metric, sd.h, p, sd.step);
    const double gnh = intrinsic_inner(sd.metric, sd.nu, sd.h, p, sd.step);
    const double m1 = (gnn + 2.0 * H * gnh + H * H * ghh) -
                      (H * H - K + c * nu * nu) * (1.0 - nu * nu);
    const double m2 = intrinsic_laplacian(sd.metric, sd.nu, p, sd.step) -
                      (2.0 * K - c * (1.0 + nu * nu) - 4.0 * H * H) * nu;
    const double m3 = ghh - (1.0 - nu * nu);
    const double m4 = intrinsic_laplacian(sd.metric, sd.h, p, sd.step) - 2.0 * H * nu;
    return {m1, m2, m3, m4};
}

double q_value(const SurfaceData& sd, const Eigen::Vector2d& p) {
    const double nu = sd.nu.value(p);
    const double H = sd.H, K = sd.K, c = sd.c;
    const double gnh = intrinsic_inner(sd.metric, sd.nu, sd.h, p, sd.step);
    const double w = 1.0 - nu * nu;
    return 2.0 * H * c * gnh + 4.0 * H * H * (H * H - K + c * nu * nu) +
           2.0 * H * H * c * w + 0.25 * c * c * w * w;
}

double residual_log_q(const SurfaceData& sd, const Eigen::Vector2d& p, double cutoff) {
    const double q0 = q_value(sd, p);
    if (std::abs(q0) < cutoff) throw ZeroQError("residual_log_q: q vanishes at the point");
    ScalarField qf;
    qf.value = [&sd](const Eigen::Vector2d& q) { return q_value(sd, q); };
    const double gq = intrinsic_gradient_sq(sd.metric, qf, p, sd.step);
    const double lq = intrinsic_laplacian(sd.metric, qf, p, sd.step);
    return 4.0 * sd.K * q0 * q0 - (q0 * lq - gq);
}

double residual_bochner(const SurfaceData& sd, const Eigen::Vector2d& p,
                        const Eigen::Vector2d& gradK, double deltaK) {
    const double nu = sd.nu.value(p);
    const double H = sd.H, K = sd.K, c = sd.c;
    const Eigen::Matrix2d ginv = sd.metric.value(p).inverse();
    const Eigen::Vector2d dnu = sd.nu.gradient(p, sd.step);
    const Eigen::Vector2d dh = sd.h.gradient(p, sd.step);
    const double gKn = gradK.dot(ginv * dnu);
    const double gKh = gradK.dot(ginv * dh);
    const double gKK = gradK.dot(ginv * gradK);
    const double gnh = dnu.dot(ginv * dh);
    const double a = H * H - K + c * nu * nu;
    return a * deltaK + gKK - 6.0 * c * nu * gKn - 2.0 * H * c * nu * gKh +
           6.0 * H * c * (H * H - K - c * nu * nu) * gnh +
           4.0 * H * H * c * nu * nu * (H * H - K - 2.0 * c + 3.0 * c * nu * nu) -
           4.0 * a * (K - c - H * H) * (K + 2.0 * c * nu * nu);
}

std::array<double, 3> residual_constant_K(const SurfaceData& sd, const Eigen::Vector2d& p) {
    const double nu = sd.nu.value(p);
    const double H = sd.H, c = sd.c;
    const double b = 4.0 * H * H + c - c * nu * nu;
    const double gnh = intrinsic_inner(sd.metric, sd.nu, sd.h, p, sd.step);
    const double gnn = intrinsic_gradient_sq(sd.metric, sd.nu, p, sd.step);
    const double lnu = intrinsic_laplacian(sd.metric, sd.nu, p, sd.step);
    return {c * gnh - 2.0 * H * b, gnn + b * b / c, lnu - b * nu};
}

SisterParams sister_params(double H, double tau) {
    SisterParams sp;
    sp.H_bar = std::sqrt(H * H + tau * tau);
    sp.kappa_shift = -4.0 * tau * tau;
    // i H_bar = e^{i theta} (tau + i H)  =>  e^{i theta} = (H + i tau)/H_bar
    sp.theta = std::atan2(tau, H);
    return sp;
}

std::pair<Eigen::Matrix2d, Eigen::Vector2d> sister_rotate(const Eigen::Matrix2d& S,
                                                          const Eigen::Vector2d& T, double theta,
                                                          double H, double H_bar) {
    Eigen::Matrix2d rot;
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    const Eigen::Matrix2d Sbar =
        rot * (S - H * Eigen::Matrix2d::Identity()) + H_bar * Eigen::Matrix2d::Identity();
    return {Sbar, rot * T};
}

std::vector<Eigen::Vector2d> Grid::points() const {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(static_cast<std::size_t>(n0) * n1);
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) {
            const double u = n0 == 1 ? lo[0] : lo[0] + (hi[0] - lo[0]) * i / (n0 - 1.0);
            const double v = n1 == 1 ? lo[1] : lo[1] + (hi[1] - lo[1]) * j / (n1 - 1.0);
            pts.emplace_back(u, v);
        }
    return pts;
}

namespace {

// Evaluates `eval` on the grid in parallel, then merges in index order.
ResidualReport run_grid(const std::string& name, const Grid& grid, double tol,
                        const std::function<std::vector<std::pair<std::string, double>>(
                            const Eigen::Vector2d&)>& eval) {
    const auto pts = grid.points();
    std::vector<std::vector<std::pair<std::string, double>>> rows(pts.size());
    parallel_for_index(pts.size(), [&](std::size_t i) { rows[i] = eval(pts[i]); });
    ResidualReport rep;
    rep.name = name;
    rep.tol = tol;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (const auto& [eq, val] : rows[i]) rep.add(pts[i], eq, val);
    rep.finalize();
    return rep;
}

} // namespace

ResidualReport check_M_system(const SurfaceData& sd, const Grid& grid, double tol) {
    return run_grid("M1-M4:" + sd.name, grid, tol, [&](const Eigen::Vector2d& p) {
        const auto r = residual_M(sd, p);
        return std::vector<std::pair<std::string, double>>{
            {"M1", r[0]}, {"M2", r[1]}, {"M3", r[2]}, {"M4", r[3]}};
    });
}

ResidualReport check_constant_K_system(const SurfaceData& sd, const Grid& grid, double tol) {
    return run_grid("constant-K:" + sd.name, grid, tol, [&](const Eigen::Vector2d& p) {
        const auto r = residual_constant_K(sd, p);
        return std::vector<std::pair<std::string, double>>{
            {"gradnu.gradh", r[0]}, {"gradnu.sq", r[1]}, {"delta.nu", r[2]}};
    });
}

ResidualReport check_bochner(const SurfaceData& sd, const Grid& grid, double tol) {
    return run_grid("bochner:" + sd.name, grid, tol, [&](const Eigen::Vector2d& p) {
        return std::vector<std::pair<std::string, double>>{{"M5", residual_bochner(sd, p)}};
    });
}

ResidualReport check_log_q(const SurfaceData& sd, const Grid& grid, double tol, double q_cutoff) {
    return run_grid("log-q:" + sd.name, grid, tol, [&](const Eigen::Vector2d& p) {
        std::vector<std::pair<std::string, double>> out;
        if (std::abs(q_value(sd, p)) > q_cutoff)
            out.emplace_back("Delta.log.q", residual_log_q(sd, p));
        return out;
    });
}

ResidualReport check_q_vanishing(const SurfaceData& sd, const Grid& grid, double tol) {
    return run_grid("q-vanishing:" + sd.name, grid, tol, [&](const Eigen::Vector2d& p) {
        return std::vector<std::pair<std::string, double>>{{"q", q_value(sd, p)}};
    });
}

} // namespace cmclab
