#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floe/branches.hpp"
#include "floe/param_map.hpp"
#include "floe/smoothed.hpp"

namespace floe {

/// Fold of the seasonal solution family (multiplier through +1).
struct SaddleNode {
    double l_m = 0.0;
    double t_m = 0.0, t_f = 0.0;
    double min_e = 0.0;
    double floquet = 1.0;
};

/// L_m values where the boundary systems for a grazing seasonal solution
/// (melt time at t_c, or freeze time at the next spring entry) admit
/// solutions that actually terminate a branch.
struct SeasonalGsBoundaries {
    std::vector<double> melt_at_tc;        ///< t_m -> t_c endpoints
    std::vector<double> freeze_at_spring;  ///< t_f -> t_a + 1 endpoints
};

struct BifurcationPoints {
    std::optional<double> l_o;  ///< ice-free branch grazing-sliding point
    std::optional<double> l_i;  ///< ice-covered branch grazing-sliding point
    std::vector<SaddleNode> saddle_nodes;         ///< ascending in l_m
    std::optional<double> l_sn1, l_sn2;           ///< highest / lowest min-energy fold
    SeasonalGsBoundaries seasonal_gs;
    std::optional<double> gs_cov;   ///< seasonal endpoint bordering the ice-covered gap
    std::optional<double> gs_free;  ///< seasonal endpoint bordering the ice-free gap
};

struct LmGrid {
    double lo = 0.6, hi = 1.6;
    int n = 400;
    double refine_radius = 0.02;  ///< extra resolution around detected events
    int refine_n = 40;
};

struct DiagramRow {
    double l_m = 0.0;
    BranchKind kind = BranchKind::ice_free;
    int branch_id = 0;
    double min_e = 0.0;
    double floquet = 0.0;
    bool stable = false;
};

struct Diagram {
    std::vector<DiagramRow> rows;  ///< sorted by (branch_id, l_m)
    ForcingParams params;          ///< base parameter set; l_m column varies
    double delta_e = 0.0;
    LmGrid grid;
    BifurcationPoints points;            ///< Filippov events (empty for smoothed sweeps)
    std::vector<double> smoothed_folds;  ///< l_m of fixed-point-count changes (smoothed sweeps)
    std::vector<std::string> notes;
};

/// Root of the ice-free existence integral in l_m. Throws not_found_error
/// (with the scanned endpoint residuals) if the scan range brackets none.
double find_l_o(const ForcingParams& base, std::pair<double, double> scan = {0.0, 3.0});

/// Root of the ice-covered existence residual in l_m.
double find_l_i(const ForcingParams& base, std::pair<double, double> scan = {0.0, 3.0});

std::vector<SaddleNode> find_saddle_nodes(const ForcingParams& base,
                                          std::pair<double, double> lm_range = {0.6, 1.6},
                                          int n_grid = 400);

SeasonalGsBoundaries seasonal_gs_boundaries(const ForcingParams& base,
                                            std::pair<double, double> scan = {0.3, 2.5},
                                            int n_scan = 800);

/// All of the above, with gs_cov/gs_free matched to the perennial endpoints.
BifurcationPoints locate_bifurcations(const ForcingParams& base,
                                      std::pair<double, double> lm_range = {0.6, 1.6});

Diagram branch_diagram(const ForcingParams& base, const LmGrid& grid = {});

Diagram smoothed_diagram(const ForcingParams& base, const LmGrid& grid = {},
                         std::pair<double, double> e_range = {-3.0, 2.0}, int n_grid = 512,
                         const IntegratorOptions& opts = {});

struct GapInfo {
    double lm_lo = 0.0, lm_hi = 0.0;
    double median = 0.0;  ///< median of the closed gap interval endpoints
};

/// The two branch-curve gaps: high-energy (ice-free end vs freeze-limited
/// seasonal endpoint) and low-energy (ice-covered end vs melt-limited one).
struct DiagramGaps {
    std::optional<GapInfo> high_energy;
    std::optional<GapInfo> low_energy;
};
DiagramGaps diagram_gaps(const BifurcationPoints& pts);

enum class WidthVary { dpsi, ftilde_plus, ftilde_minus };

struct WidthsRow {
    double value = 0.0;
    ForcingParams params;  ///< inverse-mapped parameter set
    std::optional<GapInfo> gap_high, gap_low;
    double width_s1 = 0.0, width_s2 = 0.0;
    std::string status = "ok";  ///< or the reason the value was skipped
};

/// Sliding-interval widths measured at the gap medians while one
/// standard-form quantity sweeps and the others stay at the base values.
std::vector<WidthsRow> sliding_width_sweep(WidthVary vary, const std::vector<double>& values,
                                           const ForcingParams& base);

enum class JumpOutcome { to_seasonal, to_ice_free, attracting_excluded, no_ice_covered_branch };
const char* to_string(JumpOutcome o);

/// Size and target of the transition at the end of the ice-covered branch.
struct JumpResult {
    double l_i = 0.0;
    JumpOutcome outcome = JumpOutcome::to_seasonal;
    double delta_min_e = 0.0;        ///< NaN when no landing branch applies
    double covered_end_min_e = 0.0;  ///< -I-(t_b, t_c) at l_i
    double landing_min_e = 0.0;
};

JumpResult jump_min_e(const ForcingParams& base);

struct JumpCell {
    double dpsi = 0.0, dalpha = 0.0;
    ForcingParams params;  ///< mapped physical parameters (when feasible)
    std::optional<JumpResult> result;
    std::string status = "ok";
};

/// The (delta_psi, delta_alpha) jump-size grid under the documented rule:
/// amplitude targets from the base (s_a, l_a, phi) with the cell's
/// delta_alpha, phase difference from the cell.
std::vector<JumpCell> jump_grid(const std::vector<double>& dpsi_values,
                                const std::vector<double>& dalpha_values,
                                const ForcingParams& base);

enum class BifVary { delta_alpha, phi };

struct BifSetRow {
    double value = 0.0;
    std::optional<double> l_o, l_i, l_sn1, l_sn2;
    std::optional<double> lm_no_repelling;  ///< l_m above which F- has no roots (t_b = t_c)
    std::string status = "ok";
};

/// Bifurcation curves over a secondary parameter, all others held at base.
std::vector<BifSetRow> bifurcation_set(BifVary vary, const std::vector<double>& values,
                                       const ForcingParams& base,
                                       std::pair<double, double> lm_range = {0.4, 2.2});

}  // namespace floe
