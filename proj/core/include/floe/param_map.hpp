#pragma once

#include <vector>

#include "floe/forcing.hpp"
#include "floe/params.hpp"

namespace floe {

/// Target amplitudes and phase difference for the inverse mapping.
struct StandardTarget {
    double f_bar_plus = 0.0;
    double f_bar_minus = 0.0;
    double f_tilde_plus = 0.0;   ///< > 0
    double f_tilde_minus = 0.0;  ///< > 0
    double delta_psi = 0.0;      ///< radians

    static StandardTarget from(const StandardForm& s) {
        return {s.f_bar_plus, s.f_bar_minus, s.f_tilde_plus, s.f_tilde_minus, s.delta_psi};
    }
    /// Throws infeasible_target_error naming the violated inequality.
    void validate() const;
};

enum class RootChoice { smaller, larger };

/// Quantities produced on the way through the inversion steps.
struct InverseIntermediates {
    double r = 0.0;       ///< (1 - da) / (1 + da)
    double s_plus = 0.0;  ///< (1 + da) s_a
    double l_ac = 0.0;    ///< l_a cos(2 pi phi)
    double l_as = 0.0;    ///< l_a sin(2 pi phi)
    std::vector<double> l_a_squared_roots;  ///< ascending, nonnegative
};

struct InverseResult {
    ForcingParams params;  ///< l_m, delta_alpha, s_a, l_a, phi set; b/zeta/delta_e from the caller
    InverseIntermediates mid;
    RootChoice used = RootChoice::smaller;
};

/// Nonnegative roots L_a^2 of the inversion quadratic, ascending.
/// Throws degenerate_ratio_error for r in {0, 1} and no_real_root_error
/// when the discriminant is negative.
std::vector<double> solve_la_squared(const StandardTarget& target, double r);

/// Execute the inverse mapping. `thermo` supplies b, zeta, delta_e (its
/// forcing fields are ignored). The reconstructed standard form is checked
/// against the target; a mismatch beyond 1e-6 raises branch_selection_error
/// with both branches in the message.
InverseResult from_standard_form(const StandardTarget& target,
                                 RootChoice root_choice = RootChoice::smaller,
                                 const ForcingParams& thermo = ForcingParams{});

}  // namespace floe
