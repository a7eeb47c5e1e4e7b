#pragma once

#include <optional>
#include <string>

#include "floe/forcing.hpp"
#include "floe/params.hpp"

namespace floe {

enum class BoundaryClass {
    two_repelling,       ///< both forcings have simple roots, widths > 0
    degenerate,          ///< coincident or missing roots on one side, or tangency
    attracting_present,  ///< F+ < 0 < F- somewhere; analysis excluded
    no_sliding,          ///< the boundary is crossed transversally all year
};

const char* to_string(BoundaryClass c);

/// Rising/falling root pair of a single harmonic forcing on [0, 1).
struct RootPair {
    double rise = 0.0;  ///< F = 0 with dF/dtau > 0
    double fall = 0.0;  ///< F = 0 with dF/dtau < 0
};

/// Locations and widths of the repelling sliding intervals
/// S1 = [t_a, t_b] (spring) and S2 = [t_c, t_d] (autumn).
struct SlidingIntervals {
    std::optional<double> t_a, t_d;  ///< roots of F+ (rise, fall)
    std::optional<double> t_b, t_c;  ///< roots of F- (rise, fall)
    double width_s1 = 0.0;           ///< (t_b - t_a) mod 1
    double width_s2 = 0.0;           ///< (t_d - t_c) mod 1
    BoundaryClass classification = BoundaryClass::no_sliding;
    std::string reason;  ///< diagnostic for non-two-repelling cases

    bool two_repelling() const { return classification == BoundaryClass::two_repelling; }
};

/// tau interval on which F+ < 0 < F-, when such an interval exists.
struct AttractingWitness {
    bool present = false;
    double lo = 0.0, hi = 0.0;  ///< witness interval, hi may exceed 1 (wraps)
};

/// Closed-form roots of A + C cos(2 pi t - psi) on [0, 1), refined so the
/// residual is at rounding level. nullopt when |A| > |C| (no roots).
std::optional<RootPair> harmonic_roots(const Harmonic& h);

SlidingIntervals find_boundary_times(const ForcingParams& p);

AttractingWitness detect_attracting(const ForcingParams& p);

/// Whether the spring repelling interval [t_a, t_b] still exists with its
/// entry at t_a and no attracting interval touching it. Strong winter
/// shortwave deficits can invert the rise ordering (t_b before t_a),
/// replacing the interval with an attracting one.
bool spring_entry_intact(const ForcingParams& p);

/// Same for the autumn interval [t_c, t_d]; its collapse (t_c = t_d) is
/// the boundary beyond which the ice-covered endpoint analysis is invalid.
bool autumn_entry_intact(const ForcingParams& p);

}  // namespace floe
