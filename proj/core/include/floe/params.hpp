#pragma once

#include <cmath>
#include <numbers>

namespace floe {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Nondimensional parameters of the seasonally forced Arctic sea-ice
/// energy balance model. `delta_e == 0` selects the piecewise-smooth
/// (Filippov) limit of the albedo function; `delta_e > 0` the
/// albedo-smoothed system.
struct ForcingParams {
    double delta_alpha = 0.43;  ///< albedo jump between ice and ocean, in [0, 1]
    double s_a = 1.5;           ///< seasonal amplitude of incoming shortwave
    double l_m = 1.25;          ///< annual-mean outgoing longwave; the bifurcation parameter
    double l_a = 0.73;          ///< seasonal amplitude of outgoing longwave
    double phi = 0.15;          ///< shortwave/longwave phase shift, years, in [-1/2, 1/2)
    double b = 0.45;            ///< longwave linearization constant, > 0
    double zeta = 0.12;         ///< sea-ice self-insulation constant, > 0
    double delta_e = 0.0;       ///< albedo smoothing energy scale, >= 0

    ForcingParams with_lm(double lm) const {
        ForcingParams p = *this;
        p.l_m = lm;
        return p;
    }
    ForcingParams with_delta_e(double de) const {
        ForcingParams p = *this;
        p.delta_e = de;
        return p;
    }

    /// Throws std::invalid_argument if a field is out of its admissible range.
    void validate() const;
};

/// Reduce a time in years to [0, 1).
inline double wrap_unit(double tau) {
    double r = tau - std::floor(tau);
    return r < 1.0 ? r : r - 1.0;
}

/// Normalize a phase shift in years to [-1/2, 1/2).
inline double wrap_phase(double phi) {
    return phi - std::floor(phi + 0.5);
}

/// Wrap an angle in radians to (-pi, pi].
inline double wrap_angle(double x) {
    x = std::remainder(x, two_pi);  // lands in [-pi, pi]
    if (x <= -std::numbers::pi) x += two_pi;
    return x;
}

}  // namespace floe
