#pragma once

#include "floe/forcing.hpp"
#include "floe/params.hpp"

namespace floe {

/// Exponentially weighted flux integral over open ocean,
/// integral of e^{b t} F+(t) dt from t0 to t1, in closed form.
double integral_i_plus(const ForcingParams& p, double t0, double t1);

/// Plain flux integral over ice, integral of F-(t) dt from t0 to t1.
double integral_i_minus(const ForcingParams& p, double t0, double t1);

/// Annual mean of F-. For the sinusoidal forcing this is exactly
/// 1 - delta_alpha - l_m.
double mean_f_minus(const ForcingParams& p);

/// Same integrals for a caller-supplied harmonic (weight b = 0 for the
/// unweighted form). Used so that the closed forms stay in one place.
double weighted_harmonic_integral(const Harmonic& h, double b, double t0, double t1);
double harmonic_integral(const Harmonic& h, double t0, double t1);

}  // namespace floe
