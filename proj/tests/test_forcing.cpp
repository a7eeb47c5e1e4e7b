#include <doctest.h>

#include <cmath>
#include <random>

#include "floe/errors.hpp"
#include "floe/forcing.hpp"
#include "oracles.hpp"

using namespace floe;

namespace {
ForcingParams defaults_at(double lm) { return ForcingParams{}.with_lm(lm); }
}  // namespace

TEST_CASE("f_plus and f_minus match direct arithmetic") {
    const ForcingParams p = defaults_at(1.25);
    // (1.43)(1 - 1.5) - (1.25 + 0.73 cos(-0.3 pi))
    const double expect = 1.43 * (1.0 - 1.5) - (1.25 + 0.73 * std::cos(-0.3 * std::numbers::pi));
    CHECK(f_plus(p, 0.0) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(f_plus(p, 0.0) == doctest::Approx(-2.394).epsilon(2e-4));

    // all oscillation off, mean balance
    ForcingParams flat;
    flat.delta_alpha = 0.0;
    flat.l_a = 0.0;
    flat.s_a = 0.0;
    flat.l_m = 1.0;
    for (double tau : {0.0, 0.3, 0.77}) CHECK(f_plus(flat, tau) == doctest::Approx(0.0));

    const double fm = 0.57 * 2.5 - (1.25 + 0.73 * std::cos(0.7 * std::numbers::pi));
    CHECK(f_minus(p, 0.5) == doctest::Approx(fm).epsilon(1e-12));
    CHECK(f_minus(p, 0.5) == doctest::Approx(0.604).epsilon(2e-3));

    ForcingParams full = p;
    full.delta_alpha = 1.0;
    CHECK(f_minus(full, 0.23) ==
          doctest::Approx(-(1.25 + 0.73 * std::cos(two_pi * (0.23 - 0.15)))).epsilon(1e-12));

    CHECK(f_minus(p, 0.37 + 1.0) == doctest::Approx(f_minus(p, 0.37)).epsilon(1e-14));
}

TEST_CASE("f_plus - f_minus is the albedo-jump term exactly") {
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        const ForcingParams p = oracles::random_params(rng);
        for (int i = 0; i < 40; ++i) {
            const double tau = i / 40.0;
            const double gap = 2.0 * p.delta_alpha * (1.0 - p.s_a * std::cos(two_pi * tau));
            CHECK(f_plus(p, tau) - f_minus(p, tau) == doctest::Approx(gap).epsilon(1e-12));
        }
    }
}

TEST_CASE("smoothed flux limits and midpoint") {
    ForcingParams p = defaults_at(1.25);
    p.delta_e = 0.08;
    for (double tau : {0.1, 0.6}) {
        CHECK(f_smoothed(p, tau, 0.0) ==
              doctest::Approx(0.5 * (f_plus(p, tau) + f_minus(p, tau))).epsilon(1e-14));
        CHECK(f_smoothed(p, tau, 10.0 * p.delta_e) == doctest::Approx(f_plus(p, tau)).epsilon(1e-8));
        CHECK(f_smoothed(p, tau, -10.0 * p.delta_e) ==
              doctest::Approx(f_minus(p, tau)).epsilon(1e-8));
    }
    // e = delta_e puts the shortwave ramp at tanh(1)
    const double mid = 0.5 * (f_plus(p, 0.25) + f_minus(p, 0.25));
    CHECK(f_smoothed(p, 0.25, 0.08) ==
          doctest::Approx(mid + p.delta_alpha * std::tanh(1.0) * (1.0 - 0.0)).epsilon(1e-12));

    ForcingParams filippov = defaults_at(1.25);
    CHECK_THROWS_AS((void)f_smoothed(filippov, 0.3, 0.1), boundary_error);
}

TEST_CASE("smoothing tightens toward the Filippov flux as delta_e shrinks") {
    // fixed energy window, at least four smoothing scales away for every
    // delta_e sampled
    ForcingParams p = defaults_at(1.25);
    double prev = 1e300;
    for (double de : {0.08, 0.04, 0.02, 0.01}) {
        p.delta_e = de;
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double tau = i / 200.0;
            for (double e : {0.32, 0.6, 1.1, -0.32, -0.6, -1.1}) {
                const double target = e > 0.0 ? f_plus(p, tau) : f_minus(p, tau);
                worst = std::max(worst, std::abs(f_smoothed(p, tau, e) - target));
            }
        }
        CHECK(worst < prev);
        prev = worst;
    }
}

TEST_CASE("piecewise field cases and the boundary error") {
    const ForcingParams p = defaults_at(1.25);
    CHECK(rhs(p, 0.31, 0.5) == doctest::Approx(f_plus(p, 0.31) - p.b * 0.5).epsilon(1e-14));
    // melting ice keeps the surface at the freezing point
    CHECK(rhs(p, 0.5, -0.4) == doctest::Approx(f_minus(p, 0.5)).epsilon(1e-14));
    // growing ice self-insulates; the rate vanishes from below as e -> -inf
    const double deep = rhs(p, 0.0, -1e9);
    CHECK(deep < 0.0);
    CHECK(std::abs(deep) < 1e-7);
    CHECK_THROWS_AS((void)rhs(p, 0.3, 0.0), boundary_error);

    // continuity across F- = 0 for e < 0 (thermodynamic switch)
    const auto rm = harmonic_roots(harmonic_minus(p));
    REQUIRE(rm.has_value());
    for (double root : {rm->rise, rm->fall}) {
        for (double e : {-0.3, -1.2}) {
            const double jump = rhs(p, root + 1e-13, e) - rhs(p, root - 1e-13, e);
            CHECK(std::abs(jump) < 1e-10);
        }
    }
    // and continuity of the two e < 0 cases as e -> 0- where F <= 0
    const double tau_neg = rm->fall + 0.1;  // F- < 0 there
    CHECK(rhs(p, tau_neg, -1e-12) == doctest::Approx(f_minus(p, tau_neg)).epsilon(1e-9));
}

TEST_CASE("standard form of the default parameters") {
    const StandardForm s = to_standard_form(defaults_at(1.25));
    CHECK(s.f_tilde_plus == doctest::Approx(2.64).epsilon(4e-3));
    CHECK(s.f_tilde_minus == doctest::Approx(1.41).epsilon(4e-3));
    CHECK(s.delta_psi == doctest::Approx(-0.21).epsilon(3e-2));
    CHECK(s.f_bar_plus == doctest::Approx(1.0 - 1.25 + 0.43).epsilon(1e-14));
    CHECK(s.f_bar_minus == doctest::Approx(1.0 - 1.25 - 0.43).epsilon(1e-14));
    CHECK(s.f_bar_plus - s.f_bar_minus == doctest::Approx(2.0 * 0.43).epsilon(1e-14));

    ForcingParams sym = defaults_at(1.25);
    sym.phi = 0.0;
    CHECK(to_standard_form(sym).delta_psi == doctest::Approx(0.0));

    ForcingParams fig5 = defaults_at(1.25);
    fig5.s_a = 1.82;
    fig5.l_a = 1.19;
    fig5.phi = -0.28;
    CHECK(to_standard_form(fig5).delta_psi == doctest::Approx(0.51).epsilon(2e-2));
}

TEST_CASE("standard form reconstructs both forcings pointwise") {
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        const ForcingParams p = oracles::random_params(rng);
        const StandardForm s = to_standard_form(p);
        for (int i = 0; i < 1000; ++i) {
            const double tau = i / 1000.0;
            const double rp = s.f_bar_plus + s.f_tilde_plus * std::cos(two_pi * tau - s.psi_plus);
            const double rm = s.f_bar_minus + s.f_tilde_minus * std::cos(two_pi * tau - s.psi_minus);
            const double scale = std::max({1.0, std::abs(f_plus(p, tau)), std::abs(f_minus(p, tau))});
            CHECK(std::abs(rp - f_plus(p, tau)) / scale < 1e-12);
            CHECK(std::abs(rm - f_minus(p, tau)) / scale < 1e-12);
        }
    }
}

TEST_CASE("two-argument phases agree with the signed-arccos form") {
    // the arccos expression with the -sgn(phi) branch patch is the
    // published cross-check for delta_psi
    std::mt19937 rng(13);
    int checked = 0;
    for (int k = 0; k < 200 && checked < 50; ++k) {
        const ForcingParams p = oracles::random_params(rng);
        if (p.delta_alpha < 0.02 || std::abs(p.phi) < 1e-3) continue;
        const StandardForm s = to_standard_form(p);
        const double num = (1.0 - p.delta_alpha * p.delta_alpha) * p.s_a * p.s_a +
                           2.0 * p.s_a * p.l_a * std::cos(two_pi * p.phi) + p.l_a * p.l_a;
        const double arg = num / (s.f_tilde_plus * s.f_tilde_minus);
        if (std::abs(arg) > 1.0) continue;
        const double ref = -(p.phi > 0 ? 1.0 : -1.0) * std::acos(arg);
        CHECK(s.delta_psi == doctest::Approx(ref).epsilon(1e-10));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("parameter validation") {
    ForcingParams p = defaults_at(1.25);
    CHECK_NOTHROW(p.validate());
    p.delta_alpha = 1.4;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults_at(1.25);
    p.zeta = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults_at(1.25);
    p.phi = 0.7;  // not normalized
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK(wrap_phase(0.7) == doctest::Approx(-0.3).epsilon(1e-14));
}
