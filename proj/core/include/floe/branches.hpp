#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floe/params.hpp"
#include "floe/sliding.hpp"

namespace floe {

enum class BranchKind { ice_free, ice_covered, seasonal };
const char* to_string(BranchKind k);

/// One periodic solution of the Filippov system.
struct BranchPoint {
    BranchKind kind = BranchKind::ice_free;
    double l_m = 0.0;
    double e_init = 0.0;              ///< E0* at t_a (ice-free) or Eb* at t_b
    std::optional<double> e_c;        ///< E at t_c (ice-covered only)
    std::optional<double> t_m, t_f;   ///< melt/freeze times (seasonal only); t_f in (t_m, t_m+1)
    double floquet = 0.0;
    bool stable = false;              ///< floquet in (0, 1)
    double min_e = 0.0;
    double t_ref = 0.0;               ///< phase of e_init: t_a or t_b, in [0, 1)
    std::string note;                 ///< "reference-phase-fallback", "grazing-sliding-limit", ...
};

struct Trajectory {
    std::vector<std::pair<double, double>> samples;  ///< (tau, E), tau ascending
    BranchKind kind = BranchKind::ice_free;
    ForcingParams params;
};

struct SeasonalSolverOptions {
    int n_scan = 2000;          ///< melt-time scan resolution
    double time_tol = 1e-12;    ///< root tolerance on event times
    double boundary_tol = 1e-9; ///< distance to t_c / t_a+1 that flags a grazing limit
};

/// Perennially ice-free periodic solution, when the weighted annual
/// integral of F+ is positive. Always stable, multiplier e^{-b}.
std::optional<BranchPoint> ice_free_branch(const ForcingParams& p);

/// Perennially ice-covered periodic solution, when the summer maximum
/// stays below the boundary.
std::optional<BranchPoint> ice_covered_branch(const ForcingParams& p);

/// All seasonally ice-free periodic solutions at this parameter set,
/// ordered by melt time. Empty when the boundary classification is not
/// two-repelling or the implicit system has no admissible root.
std::vector<BranchPoint> seasonal_solutions(const ForcingParams& p,
                                            const SeasonalSolverOptions& opts = {});

/// Closed-form orbit value of a branch point at an arbitrary phase.
double branch_energy_at(const BranchPoint& bp, const ForcingParams& p, double tau);

/// Sample one period of the orbit; throws reconstruction_error when the
/// ice-growth square root loses its argument (inconsistent branch point).
Trajectory reconstruct_trajectory(const BranchPoint& bp, const ForcingParams& p, int n_samples);

/// Phase-wise one-year return map for the seasonal timeline, starting at
/// t_b with E = e_b < 0. Exact up to the root solves; used for
/// finite-difference Floquet checks.
double seasonal_one_year_map(const ForcingParams& p, double e_b);

struct SimulateOptions {
    double step = 1.0 / 4096.0;   ///< base RK4 step, years
    double event_tol = 1e-12;     ///< bisection tolerance on event times
    double flux_tol = 1e-9;       ///< |F| below this at a boundary hit counts as grazing
    int sample_stride = 8;        ///< record every n-th step into the trajectory
};

struct SimResult {
    Trajectory trajectory;
    double tau_end = 0.0;
    double e_end = 0.0;
    bool sliding_entry = false;   ///< halted on a repelling-interval entry
    double entry_tau = 0.0;
    std::string message;
};

/// Direct fixed-step integration of the Filippov field with event
/// localization at E = 0 crossings; steps are split exactly at the F-
/// kink times. Requires delta_e == 0 and e0 != 0. Halts early (with
/// sliding_entry set) if the state reaches the boundary where crossing
/// is not defined, since uniqueness is lost there.
SimResult simulate_filippov(const ForcingParams& p, double e0, double tau0, double t_end,
                            const SimulateOptions& opts = {});

}  // namespace floe
