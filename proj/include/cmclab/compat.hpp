#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmclab/surface_data.hpp"

namespace cmclab {

// One residual checker run over a set of points.
struct ResidualEntry {
    Eigen::Vector2d point;
    std::string equation;
    double value;
};

struct ResidualReport {
    std::string name;
    std::vector<ResidualEntry> residuals;
    double max_abs = 0.0;
    double tol = 0.0;
    bool pass = false;

    void add(const Eigen::Vector2d& p, const std::string& eq, double value);
    void finalize(); // pass <=> max_abs < tol
    nlohmann::json to_json() const;
};

// Algebraic Gauss-Codazzi data at one point.
struct GaussCodazziPoint {
    Eigen::Matrix2d S;       // symmetric shape operator
    Eigen::Vector2d T;       // tangential part of the vertical field
    Eigen::Vector2d grad_nu; // gradient of the angle function
    double nu;
    Eigen::Matrix2d metric;
    double K;
    double c;
};

// Residuals of (C1), (C4), (C5). (C2)/(C3) are covered by the M-system.
std::array<double, 3> residual_C(const GaussCodazziPoint& gc);

// Residuals of (M1)-(M4) at p.
std::array<double, 4> residual_M(const SurfaceData& sd, const Eigen::Vector2d& p);

// The Abresch-Rosenberg normalization q.
double q_value(const SurfaceData& sd, const Eigen::Vector2d& p);

// Residual of 4 K q^2 = q Delta q - |grad q|^2. Throws ZeroQError when
// |q| < cutoff at p.
double residual_log_q(const SurfaceData& sd, const Eigen::Vector2d& p, double cutoff = 1e-10);

// Residual of the Bochner identity; gradK/deltaK supplied by the caller
// (zero for the constant-curvature catalog surfaces).
double residual_bochner(const SurfaceData& sd, const Eigen::Vector2d& p,
                        const Eigen::Vector2d& gradK = Eigen::Vector2d::Zero(),
                        double deltaK = 0.0);

// Residuals of the constant-curvature first-order system (surfaces with
// K = 4H^2 + c): the <grad nu, grad h> identity, |grad nu|^2 and Delta nu.
std::array<double, 3> residual_constant_K(const SurfaceData& sd, const Eigen::Vector2d& p);

// --- sister correspondence (E(kappa,tau) <-> M^2_{kappa-4tau^2} x R) ---
struct SisterParams {
    double H_bar;       // sqrt(H^2 + tau^2)
    double kappa_shift; // kappa_bar - kappa = -4 tau^2
    double theta;       // i H_bar = e^{i theta} (tau + i H)
};
SisterParams sister_params(double H, double tau);
std::pair<Eigen::Matrix2d, Eigen::Vector2d> sister_rotate(const Eigen::Matrix2d& S,
                                                          const Eigen::Vector2d& T, double theta,
                                                          double H, double H_bar);

// ---- grid check suites (drive the CLI verify command) ----
struct Grid {
    Eigen::Vector2d lo{-2.0, -2.0};
    Eigen::Vector2d hi{2.0, 2.0};
    int n0 = 10;
    int n1 = 10;

    std::vector<Eigen::Vector2d> points() const;
};

ResidualReport check_M_system(const SurfaceData& sd, const Grid& grid, double tol);
ResidualReport check_constant_K_system(const SurfaceData& sd, const Grid& grid, double tol);
ResidualReport check_bochner(const SurfaceData& sd, const Grid& grid, double tol);
ResidualReport check_log_q(const SurfaceData& sd, const Grid& grid, double tol,
                           double q_cutoff = 1e-6);
ResidualReport check_q_vanishing(const SurfaceData& sd, const Grid& grid, double tol);

} // namespace cmclab
