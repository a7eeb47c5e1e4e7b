#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "floe/bifurcation.hpp"
#include "floe/branches.hpp"
#include "floe/param_map.hpp"
#include "floe/params.hpp"
#include "floe/sliding.hpp"
#include "floe/smoothed.hpp"

namespace floe::cli {

/// Fixed-width decimal formatting used in every CSV cell: 17 significant
/// digits, '.' decimal point, "nan" for missing values.
std::string fmt(double x);

nlohmann::json to_json(const ForcingParams& p);
nlohmann::json to_json(const StandardForm& s);
nlohmann::json to_json(const SlidingIntervals& s, const AttractingWitness& w);
nlohmann::json to_json(const BranchPoint& bp);
nlohmann::json to_json(const FixedPoint& fp);

/// Parse the parameter object with keys exactly {delta_alpha, s_a, l_m,
/// l_a, phi, b, zeta, delta_e}. Absent keys default to the case-study
/// values except l_m, which stays NaN until supplied. Unknown keys are
/// rejected by name.
ForcingParams params_from_json(const nlohmann::json& j);

/// Parse a standard-form target {f_bar_plus, f_bar_minus, f_tilde_plus,
/// f_tilde_minus, delta_psi} (+ optional b, zeta, delta_e passed through
/// to the mapped parameters).
struct TargetConfig {
    StandardTarget target;
    ForcingParams thermo;
};
TargetConfig target_from_json(const nlohmann::json& j);

}  // namespace floe::cli
