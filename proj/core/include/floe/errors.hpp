#pragma once

#include <stdexcept>
#include <string>

namespace floe {

/// Base class for all computational failures in this library. The what()
/// string is a structured one-line diagnostic of the form "kind: detail".
class error : public std::runtime_error {
public:
    error(const std::string& kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(kind) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Evaluating the discontinuous field exactly on the E = 0 boundary.
struct boundary_error : error {
    explicit boundary_error(const std::string& detail) : error("boundary-evaluation", detail) {}
};

/// Inverse-mapping ratio r at a degenerate endpoint (delta_alpha in {0, 1}).
struct degenerate_ratio_error : error {
    explicit degenerate_ratio_error(const std::string& detail) : error("degenerate-ratio", detail) {}
};

/// The L_a^2 quadratic has no real nonnegative root for the given target.
struct no_real_root_error : error {
    explicit no_real_root_error(const std::string& detail) : error("no-real-solution", detail) {}
};

/// A target violates a feasibility inequality; the message names it.
struct infeasible_target_error : error {
    explicit infeasible_target_error(const std::string& detail) : error("infeasible-target", detail) {}
};

/// Neither quadratic root reproduces the requested phase difference.
struct branch_selection_error : error {
    explicit branch_selection_error(const std::string& detail) : error("branch-selection", detail) {}
};

/// Time integration produced a non-finite state.
struct integration_error : error {
    explicit integration_error(const std::string& detail) : error("integration", detail) {}
};

/// A scan for a bifurcation point found no sign change.
struct not_found_error : error {
    explicit not_found_error(const std::string& detail) : error("not-found", detail) {}
};

/// Closed-form trajectory reconstruction hit an inconsistent branch
/// (negative square-root argument in the ice-growth quadratic).
struct reconstruction_error : error {
    explicit reconstruction_error(const std::string& detail) : error("inconsistent-branch", detail) {}
};

}  // namespace floe
