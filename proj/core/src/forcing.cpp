#include "floe/forcing.hpp"

#include <stdexcept>
#include <string>

#include "floe/errors.hpp"

namespace floe {

void ForcingParams::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("ForcingParams: " + m); };
    if (!(delta_alpha >= 0.0 && delta_alpha <= 1.0)) fail("delta_alpha must be in [0, 1]");
    if (!(s_a >= 0.0)) fail("s_a must be >= 0");
    if (!(l_m >= 0.0)) fail("l_m must be >= 0");
    if (!(l_a >= 0.0)) fail("l_a must be >= 0");
    if (!(phi >= -0.5 && phi < 0.5)) fail("phi must be normalized into [-1/2, 1/2)");
    if (!(b > 0.0)) fail("b must be > 0");
    if (!(zeta > 0.0)) fail("zeta must be > 0");
    if (!(delta_e >= 0.0)) fail("delta_e must be >= 0");
}

namespace {

Harmonic make_harmonic(const ForcingParams& p, double sign) {
    // (1 +- da)(1 - s_a cos 2pi t) - l_m - l_a cos 2pi(t - phi) collected
    // into mean + cos/sin components.
    const double co = p.l_a * std::cos(two_pi * p.phi);
    const double si = p.l_a * std::sin(two_pi * p.phi);
    const double c = -(1.0 + sign * p.delta_alpha) * p.s_a - co;
    const double s = -si;
    Harmonic h;
    h.mean = 1.0 - p.l_m + sign * p.delta_alpha;
    h.amp = std::hypot(c, s);
    h.phase = std::atan2(s, c);
    return h;
}

}  // namespace

Harmonic harmonic_plus(const ForcingParams& p) { return make_harmonic(p, +1.0); }
Harmonic harmonic_minus(const ForcingParams& p) { return make_harmonic(p, -1.0); }

double f_plus(const ForcingParams& p, double tau) {
    return (1.0 + p.delta_alpha) * (1.0 - p.s_a * std::cos(two_pi * tau)) -
           (p.l_m + p.l_a * std::cos(two_pi * (tau - p.phi)));
}

double f_minus(const ForcingParams& p, double tau) {
    return (1.0 - p.delta_alpha) * (1.0 - p.s_a * std::cos(two_pi * tau)) -
           (p.l_m + p.l_a * std::cos(two_pi * (tau - p.phi)));
}

double f_smoothed(const ForcingParams& p, double tau, double e) {
    if (!(p.delta_e > 0.0))
        throw boundary_error("f_smoothed requires delta_e > 0; use f_plus/f_minus in the Filippov limit");
    return (1.0 + p.delta_alpha * std::tanh(e / p.delta_e)) * (1.0 - p.s_a * std::cos(two_pi * tau)) -
           (p.l_m + p.l_a * std::cos(two_pi * (tau - p.phi)));
}

double rhs(const ForcingParams& p, double tau, double e) {
    if (p.delta_e > 0.0) {
        const double f = f_smoothed(p, tau, e);
        if (e >= 0.0) return f - p.b * e;
        if (f > 0.0) return f;                     // surface at melting point
        return p.zeta * f / (p.zeta - e);          // growing ice, self-insulating
    }
    if (e > 0.0) return f_plus(p, tau) - p.b * e;
    if (e < 0.0) {
        const double f = f_minus(p, tau);
        if (f > 0.0) return f;
        return p.zeta * f / (p.zeta - e);
    }
    throw boundary_error("Filippov field is set-valued at e = 0; handle the boundary explicitly");
}

StandardForm to_standard_form(const ForcingParams& p) {
    const Harmonic hp = harmonic_plus(p);
    const Harmonic hm = harmonic_minus(p);
    StandardForm s;
    s.f_bar_plus = hp.mean;
    s.f_bar_minus = hm.mean;
    s.f_tilde_plus = hp.amp;
    s.f_tilde_minus = hm.amp;
    s.psi_plus = hp.phase;
    s.psi_minus = hm.phase;
    s.delta_psi = wrap_angle(hp.phase - hm.phase);
    return s;
}

}  // namespace floe
