#include <doctest.h>

#include <cmath>
#include <random>

#include "floe/param_map.hpp"
#include "floe/sliding.hpp"
#include "oracles.hpp"

using namespace floe;

namespace {

const ForcingParams kDefaults = ForcingParams{}.with_lm(1.25);

ForcingParams mapped_dpsi(double dpsi, double dalpha = 0.43) {
    ForcingParams base;
    base.delta_alpha = dalpha;
    StandardTarget t = StandardTarget::from(to_standard_form(base.with_lm(1.25)));
    t.delta_psi = dpsi;
    return from_standard_form(t, RootChoice::smaller, base).params;
}

}  // namespace

TEST_CASE("default boundary times against a sign-scan oracle") {
    const SlidingIntervals s = find_boundary_times(kDefaults);
    REQUIRE(s.two_repelling());
    const auto plus_roots =
        oracles::bisection_roots([&](double t) { return f_plus(kDefaults, t); }, 0.0, 1.0, 100000);
    const auto minus_roots =
        oracles::bisection_roots([&](double t) { return f_minus(kDefaults, t); }, 0.0, 1.0, 100000);
    REQUIRE(plus_roots.size() == 2);
    REQUIRE(minus_roots.size() == 2);
    // rise/fall assignment by independent finite differences
    auto rising = [&](auto f, double t) { return f(t + 1e-7) - f(t - 1e-7) > 0.0; };
    for (double r : plus_roots) {
        const double expect = rising([&](double t) { return f_plus(kDefaults, t); }, r) ? *s.t_a : *s.t_d;
        CHECK(r == doctest::Approx(expect).epsilon(1e-10));
    }
    for (double r : minus_roots) {
        const double expect = rising([&](double t) { return f_minus(kDefaults, t); }, r) ? *s.t_b : *s.t_c;
        CHECK(r == doctest::Approx(expect).epsilon(1e-10));
    }
    CHECK(std::abs(f_plus(kDefaults, *s.t_a)) < 1e-10);
    CHECK(std::abs(f_plus(kDefaults, *s.t_d)) < 1e-10);
    CHECK(std::abs(f_minus(kDefaults, *s.t_b)) < 1e-10);
    CHECK(std::abs(f_minus(kDefaults, *s.t_c)) < 1e-10);
    CHECK(s.width_s1 == doctest::Approx(wrap_unit(*s.t_b - *s.t_a)).epsilon(1e-14));
    CHECK(s.width_s2 == doctest::Approx(wrap_unit(*s.t_d - *s.t_c)).epsilon(1e-14));
    CHECK(s.width_s1 == doctest::Approx(0.123454).epsilon(1e-5));
    CHECK(s.width_s2 == doctest::Approx(0.058026).epsilon(1e-5));
}

TEST_CASE("forcing signs inside and outside the sliding intervals") {
    std::mt19937 rng(31);
    int tested = 0;
    while (tested < 40) {
        const ForcingParams p = oracles::random_params(rng);
        const SlidingIntervals s = find_boundary_times(p);
        if (!s.two_repelling()) continue;
        const double ta = *s.t_a, td = ta + wrap_unit(*s.t_d - ta);
        const double tc = *s.t_c, tb1 = tc + wrap_unit(*s.t_b - tc);
        for (int i = 1; i < 1000; ++i) {
            CHECK(f_plus(p, ta + (td - ta) * i / 1000.0) > 0.0);
            CHECK(f_minus(p, tc + (tb1 - tc) * i / 1000.0) < 0.0);
        }
        ++tested;
    }
}

TEST_CASE("no albedo jump degenerates the boundary") {
    ForcingParams p = kDefaults;
    p.delta_alpha = 0.0;
    const SlidingIntervals s = find_boundary_times(p);
    CHECK(s.classification == BoundaryClass::degenerate);
    CHECK(s.width_s1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.width_s2 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(!detect_attracting(p).present);
}

TEST_CASE("interval widths move with the phase difference") {
    // the autumn interval overtakes the spring one at large delta_psi
    const ForcingParams p51 = mapped_dpsi(0.51);
    const SlidingIntervals s = find_boundary_times(p51.with_lm(1.25));
    REQUIRE(s.two_repelling());
    CHECK(s.width_s2 > s.width_s1);
}

TEST_CASE("widths shrink as l_m decreases") {
    double w1_prev = 0.0, w2_prev = 0.0;
    for (double lm : {0.95, 1.05, 1.15, 1.25}) {
        const SlidingIntervals s = find_boundary_times(kDefaults.with_lm(lm));
        REQUIRE(s.two_repelling());
        CHECK(s.width_s1 > w1_prev);
        CHECK(s.width_s2 > w2_prev);
        w1_prev = s.width_s1;
        w2_prev = s.width_s2;
    }
}

TEST_CASE("attracting detection over the default family") {
    for (double lm = 0.8; lm <= 1.4001; lm += 0.05)
        CHECK(!detect_attracting(kDefaults.with_lm(lm)).present);
    // a strongly phase-shifted low-albedo set develops an attracting interval
    const ForcingParams low = mapped_dpsi(0.4, 0.1);
    bool found = false;
    for (double lm = 0.5; lm <= 1.5; lm += 0.01) {
        const auto w = detect_attracting(low.with_lm(lm));
        if (w.present) {
            found = true;
            const double mid = 0.5 * (w.lo + w.hi);
            CHECK(f_plus(low.with_lm(lm), mid) < 0.0);
            CHECK(f_minus(low.with_lm(lm), mid) > 0.0);
            break;
        }
    }
    CHECK(found);
}

TEST_CASE("entry integrity splits by season") {
    // winter sliver: spring entry lost, autumn intact
    const ForcingParams p51 = mapped_dpsi(0.51).with_lm(0.92);
    REQUIRE(detect_attracting(p51).present);
    CHECK(!spring_entry_intact(p51));
    CHECK(autumn_entry_intact(p51));
    CHECK(spring_entry_intact(kDefaults));
    CHECK(autumn_entry_intact(kDefaults));
}

TEST_CASE("tangency is reported, not perturbed") {
    ForcingParams p = kDefaults;
    const Harmonic hm = harmonic_minus(p.with_lm(0.0));
    p.l_m = hm.mean + hm.amp;  // F- max exactly zero
    const SlidingIntervals s = find_boundary_times(p);
    CHECK(s.classification == BoundaryClass::degenerate);
    CHECK(s.reason.find("tangent") != std::string::npos);
}

TEST_CASE("rootless sides are classified with a reason") {
    ForcingParams p = kDefaults;
    const Harmonic hm = harmonic_minus(p.with_lm(0.0));
    p.l_m = hm.mean + hm.amp + 0.2;  // F- < 0 all year, F+ still has roots
    const SlidingIntervals s = find_boundary_times(p);
    CHECK(s.classification == BoundaryClass::degenerate);
    CHECK(s.reason.find("F- rootless") != std::string::npos);
    // the rooted side is still reported
    CHECK(s.t_a.has_value());
    CHECK(s.t_d.has_value());
    CHECK(!s.t_b.has_value());

    const Harmonic hp = harmonic_plus(p.with_lm(0.0));
    p.l_m = hp.mean + hp.amp + 0.2;  // both forcings negative all year
    const SlidingIntervals s2 = find_boundary_times(p);
    CHECK(s2.classification == BoundaryClass::no_sliding);
}
