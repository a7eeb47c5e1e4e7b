#include "floe/integrals.hpp"

namespace floe {

double weighted_harmonic_integral(const Harmonic& h, double b, double t0, double t1) {
    // antiderivative of e^{bt} (A + C cos(2 pi t - psi)):
    //   A e^{bt}/b + C e^{bt} (b cos(2 pi t - psi) + 2 pi sin(2 pi t - psi)) / (b^2 + 4 pi^2)
    const double denom = b * b + two_pi * two_pi;
    auto anti = [&](double t) {
        const double arg = two_pi * t - h.phase;
        return std::exp(b * t) *
               (h.mean / b + h.amp * (b * std::cos(arg) + two_pi * std::sin(arg)) / denom);
    };
    return anti(t1) - anti(t0);
}

double harmonic_integral(const Harmonic& h, double t0, double t1) {
    auto anti = [&](double t) {
        return h.mean * t + h.amp * std::sin(two_pi * t - h.phase) / two_pi;
    };
    return anti(t1) - anti(t0);
}

double integral_i_plus(const ForcingParams& p, double t0, double t1) {
    return weighted_harmonic_integral(harmonic_plus(p), p.b, t0, t1);
}

double integral_i_minus(const ForcingParams& p, double t0, double t1) {
    return harmonic_integral(harmonic_minus(p), t0, t1);
}

double mean_f_minus(const ForcingParams& p) { return 1.0 - p.delta_alpha - p.l_m; }

}  // namespace floe
