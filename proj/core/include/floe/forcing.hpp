#pragma once

#include "floe/params.hpp"

namespace floe {

/// One seasonal forcing written as A + C cos(2 pi tau - psi) with C >= 0.
struct Harmonic {
    double mean = 0.0;   ///< A
    double amp = 0.0;    ///< C
    double phase = 0.0;  ///< psi, radians

    double operator()(double tau) const { return mean + amp * std::cos(two_pi * tau - phase); }
    double deriv(double tau) const { return -two_pi * amp * std::sin(two_pi * tau - phase); }
};

/// Amplitude/phase representation of the pair (F+, F-).
struct StandardForm {
    double f_bar_plus = 0.0;
    double f_bar_minus = 0.0;
    double f_tilde_plus = 0.0;
    double f_tilde_minus = 0.0;
    double psi_plus = 0.0;
    double psi_minus = 0.0;
    double delta_psi = 0.0;  ///< psi_plus - psi_minus, wrapped to (-pi, pi]
};

Harmonic harmonic_plus(const ForcingParams& p);
Harmonic harmonic_minus(const ForcingParams& p);

/// Net flux over open ocean (E > 0 side of the albedo jump).
double f_plus(const ForcingParams& p, double tau);
/// Net flux over ice (E < 0 side of the albedo jump).
double f_minus(const ForcingParams& p, double tau);

/// Smoothed net flux with the tanh albedo ramp. Requires p.delta_e > 0.
double f_smoothed(const ForcingParams& p, double tau, double e);

/// Right-hand side dE/dt of the governing equation: the three-case
/// piecewise field when delta_e == 0, or the smoothed field otherwise.
/// With delta_e == 0 the boundary e == 0 has no single-valued field and
/// a boundary_error is thrown.
double rhs(const ForcingParams& p, double tau, double e);

/// Convert physical parameters to amplitude/phase form. Phases come from
/// a two-argument arctangent of the cos/sin component pairs, so no branch
/// patching is needed.
StandardForm to_standard_form(const ForcingParams& p);

}  // namespace floe
