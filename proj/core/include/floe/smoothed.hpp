#pragma once

#include <string>
#include <utility>
#include <vector>

#include "floe/params.hpp"

namespace floe {

struct IntegratorOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.05;
    double boundary_max_step = 1e-3;  ///< cap while |E| < 4 delta_e (field has slope kinks)
    double init_step = 1e-3;
};

/// Flow the albedo-smoothed system from (t0, e0) to t1. Requires
/// delta_e > 0. When orbit_min/orbit_max are given the extrema of E over
/// the run are recorded (the step is then also capped at boundary_max_step
/// so the sampling cannot skip an extremum by much).
double integrate_smoothed(const ForcingParams& p, double e0, double t0, double t1,
                          const IntegratorOptions& opts = {}, double* orbit_min = nullptr,
                          double* orbit_max = nullptr);

/// One-period flow map E(t0) -> E(t0 + 1).
double integrate_year(const ForcingParams& p, double e0, double t0,
                      const IntegratorOptions& opts = {});

struct FixedPoint {
    double e_star = 0.0;
    double slope = 0.0;  ///< dP/dE by centered difference
    bool stable = false; ///< slope < 1
    double min_e = 0.0;  ///< annual minimum along the converged orbit
    double max_e = 0.0;
};

struct PoincareScan {
    std::vector<double> e_grid;
    std::vector<double> e_mapped;
    std::vector<FixedPoint> fixed_points;
    ForcingParams params;
    double t0 = 0.0;
    std::vector<std::string> warnings;
};

/// Sample the one-year Poincare map on a grid of initial energies and
/// refine every zero of G(E) = E - P(E) into a fixed point with slope,
/// stability and annual min(E).
PoincareScan poincare_fixed_points(const ForcingParams& p, double t0 = 0.0,
                                   std::pair<double, double> e_range = {-3.0, 2.0},
                                   int n_grid = 512, const IntegratorOptions& opts = {});

}  // namespace floe
