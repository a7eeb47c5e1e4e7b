#include <doctest.h>

#include <cmath>
#include <random>

#include "floe/branches.hpp"
#include "floe/errors.hpp"
#include "floe/integrals.hpp"
#include "oracles.hpp"

using namespace floe;

namespace {
const ForcingParams kBase = ForcingParams{}.with_lm(1.25);
}

TEST_CASE("ice-free multiplier is exactly e^{-b}") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 50) {
        const ForcingParams p = oracles::random_params(rng);
        const auto bp = ice_free_branch(p);
        if (!bp) continue;
        CHECK(bp->floquet == std::exp(-p.b));  // identity, not an approximation
        CHECK(bp->stable);
        CHECK(bp->min_e == bp->e_init);
        ++done;
    }
}

TEST_CASE("ice-free branch at the warm case-study point") {
    const auto bp = ice_free_branch(kBase.with_lm(0.92));
    REQUIRE(bp.has_value());
    CHECK(bp->e_init == doctest::Approx(0.7172436).epsilon(1e-6));
    CHECK(bp->stable);
    CHECK(bp->min_e > 0.0);
    CHECK(!ice_free_branch(kBase.with_lm(1.30)).has_value());
}

TEST_CASE("ice-free initial condition vanishes linearly at its grazing point") {
    const double lo = 1.241338110415;  // grazing point of the default family
    double prev_ratio = 0.0;
    for (double delta : {1e-3, 1e-4, 1e-5}) {
        const auto bp = ice_free_branch(kBase.with_lm(lo - delta));
        REQUIRE(bp.has_value());
        const double ratio = bp->e_init / delta;
        if (prev_ratio != 0.0) CHECK(ratio == doctest::Approx(prev_ratio).epsilon(5e-2));
        prev_ratio = ratio;
    }
}

TEST_CASE("rootless-positive shortwave keeps the branch with a flagged phase") {
    ForcingParams p;
    p.s_a = 0.0;
    p.l_a = 0.0;
    p.l_m = 0.2;  // F+ = 1.23 > 0 all year
    const auto bp = ice_free_branch(p);
    REQUIRE(bp.has_value());
    CHECK(bp->note.find("reference-phase") != std::string::npos);
    CHECK(bp->e_init > 0.0);
}

TEST_CASE("ice-covered branch values and stability") {
    const auto bp = ice_covered_branch(kBase.with_lm(1.1));
    REQUIRE(bp.has_value());
    CHECK(bp->e_init == doctest::Approx(-0.4016619).epsilon(1e-6));
    REQUIRE(bp->e_c.has_value());
    CHECK(*bp->e_c == doctest::Approx(-0.1847492).epsilon(1e-6));
    CHECK(bp->floquet == doctest::Approx(0.5841892).epsilon(1e-6));
    CHECK(bp->stable);
    CHECK(bp->min_e == bp->e_init);

    CHECK(!ice_covered_branch(kBase.with_lm(0.90)).has_value());  // below the grazing point
    CHECK(!ice_covered_branch(kBase.with_lm(2.4)).has_value());   // no ablation season
}

TEST_CASE("ice-covered multiplier lies in (0, 1) whenever the branch exists") {
    std::mt19937 rng(43);
    int done = 0;
    while (done < 1000) {
        const ForcingParams p = oracles::random_params(rng);
        const auto bp = ice_covered_branch(p);
        if (!bp) continue;
        CHECK(bp->floquet > 0.0);
        CHECK(bp->floquet < 1.0);
        CHECK(bp->e_init < *bp->e_c);
        CHECK(*bp->e_c < 0.0);
        ++done;
    }
}

TEST_CASE("summer maximum vanishes at the ice-covered grazing point") {
    const auto bp = ice_covered_branch(kBase.with_lm(0.918721906172 + 1e-10));
    REQUIRE(bp.has_value());
    CHECK(std::abs(*bp->e_c) < 1e-9);
}

TEST_CASE("seasonal solutions at the case-study point") {
    const ForcingParams p = kBase.with_lm(0.92);
    const auto sols = seasonal_solutions(p);
    REQUIRE(sols.size() == 2);
    CHECK(*sols[0].t_m == doctest::Approx(0.482095).epsilon(1e-5));
    CHECK(*sols[0].t_f == doctest::Approx(1.229481).epsilon(1e-5));
    CHECK(sols[0].floquet == doctest::Approx(4.544087).epsilon(1e-5));
    CHECK(!sols[0].stable);
    CHECK(*sols[1].t_m == doctest::Approx(0.671546).epsilon(1e-5));
    CHECK(sols[1].e_init == doctest::Approx(-0.2439093).epsilon(1e-5));
    CHECK(sols[1].floquet == doctest::Approx(0.657258).epsilon(1e-5));
    CHECK(sols[1].stable);

    for (const auto& bp : sols) {
        // both periodicity residuals hold at the reported times
        const double tb = bp.t_ref;
        const double tm = tb + wrap_unit(*bp.t_m - tb);
        const double tf = tm + (*bp.t_f - *bp.t_m);
        CHECK(std::abs(integral_i_plus(p, tm, tf)) < 1e-10);
        const double ibm = integral_i_minus(p, tb, tm);
        CHECK(std::abs(ibm + ibm * ibm / (2.0 * p.zeta) + integral_i_minus(p, tf, tb + 1.0)) <
              1e-10);
        // the orbit really touches the boundary at the melt and freeze times
        CHECK(std::abs(branch_energy_at(bp, p, *bp.t_m)) < 1e-8);
        CHECK(std::abs(branch_energy_at(bp, p, *bp.t_f)) < 1e-8);
    }
}

TEST_CASE("bistable window near the ice-covered end carries a stable/unstable pair") {
    const auto sols = seasonal_solutions(kBase.with_lm(0.925));
    REQUIRE(sols.size() == 2);
    CHECK((sols[0].stable != sols[1].stable));
    const auto& unstable = sols[0].stable ? sols[1] : sols[0];
    CHECK(unstable.floquet > 1.0);
}

TEST_CASE("seasonal solver agrees with the dense grid search") {
    for (double lm : {0.90, 0.93, 0.945}) {
        const ForcingParams p = kBase.with_lm(lm);
        const auto sols = seasonal_solutions(p);
        const auto brute = oracles::brute_force_seasonal(p, 700);
        REQUIRE(sols.size() == brute.size());
        for (size_t i = 0; i < sols.size(); ++i) {
            const double tm = sols[i].t_ref + wrap_unit(*sols[i].t_m - sols[i].t_ref);
            CHECK(tm == doctest::Approx(brute[i].t_m).epsilon(1e-6));
            CHECK(tm + (*sols[i].t_f - *sols[i].t_m) == doctest::Approx(brute[i].t_f).epsilon(1e-6));
        }
    }
}

TEST_CASE("one-year map fixes the seasonal branch and matches its multiplier") {
    const ForcingParams p = kBase.with_lm(0.92);
    for (const auto& bp : seasonal_solutions(p)) {
        CHECK(seasonal_one_year_map(p, bp.e_init) == doctest::Approx(bp.e_init).epsilon(1e-10));
        const double h = 1e-6;
        const double fd =
            (seasonal_one_year_map(p, bp.e_init + h) - seasonal_one_year_map(p, bp.e_init - h)) /
            (2.0 * h);
        CHECK(fd == doctest::Approx(bp.floquet).epsilon(1e-4));
    }
}

TEST_CASE("reconstructed trajectories close up and follow the field") {
    struct Case {
        double lm;
        BranchKind kind;
    };
    for (const Case c : {Case{0.92, BranchKind::ice_free}, Case{1.1, BranchKind::ice_covered},
                         Case{0.92, BranchKind::seasonal}}) {
        const ForcingParams p = kBase.with_lm(c.lm);
        std::optional<BranchPoint> bp;
        if (c.kind == BranchKind::ice_free) bp = ice_free_branch(p);
        else if (c.kind == BranchKind::ice_covered) bp = ice_covered_branch(p);
        else {
            for (const auto& s : seasonal_solutions(p))
                if (s.stable) bp = s;
        }
        REQUIRE(bp.has_value());

        // period-1 closure via direct simulation of the Filippov field
        const auto sim = simulate_filippov(p, bp->e_init, bp->t_ref, bp->t_ref + 1.0);
        CHECK(!sim.sliding_entry);
        CHECK(std::abs(sim.e_end - bp->e_init) < 1e-8);

        const Trajectory tr = reconstruct_trajectory(*bp, p, 20000);
        REQUIRE(tr.samples.size() == 20000);
        // interior slope matches the governing field (5-point stencil)
        const double h = 1.0 / 20000;
        int checked = 0;
        for (size_t i = 2; i + 2 < tr.samples.size() && checked < 200; i += 97) {
            const auto& sm2 = tr.samples[i - 2];
            const auto& sm1 = tr.samples[i - 1];
            const auto& s0 = tr.samples[i];
            const auto& sp1 = tr.samples[i + 1];
            const auto& sp2 = tr.samples[i + 2];
            if (sp2.first - sm2.first > 4.5 * h) continue;  // wrap seam
            if (std::abs(s0.second) < 1e-3) continue;       // skip the boundary kinks
            bool near_kink = false;
            if (s0.second < 0.0) {
                const double fm = f_minus(p, s0.first);
                if (std::abs(fm) < 0.05) near_kink = true;
            }
            if (near_kink) continue;
            const double deriv =
                (-sp2.second + 8.0 * sp1.second - 8.0 * sm1.second + sm2.second) / (12.0 * h);
            CHECK(deriv == doctest::Approx(rhs(p, s0.first, s0.second)).epsilon(1e-6));
            ++checked;
        }
        CHECK(checked > 100);
    }
}

TEST_CASE("seasonal trajectory keeps the three-phase sign pattern") {
    const ForcingParams p = kBase.with_lm(0.92);
    std::optional<BranchPoint> bp;
    for (const auto& s : seasonal_solutions(p))
        if (s.stable) bp = s;
    REQUIRE(bp.has_value());
    const double tb = bp->t_ref;
    const double tm = tb + wrap_unit(*bp->t_m - tb);
    const double tf = tm + (*bp->t_f - *bp->t_m);
    for (int i = 1; i < 400; ++i) {
        const double margin = 1e-6;
        const double t1 = tb + margin + (tm - tb - 2 * margin) * i / 400.0;
        CHECK(branch_energy_at(*bp, p, t1) < 0.0);
        const double t2 = tm + margin + (tf - tm - 2 * margin) * i / 400.0;
        CHECK(branch_energy_at(*bp, p, t2) > 0.0);
        const double t3 = tf + margin + (tb + 1.0 - tf - 2 * margin) * i / 400.0;
        CHECK(branch_energy_at(*bp, p, t3) < 0.0);
    }
    // the annual minimum sits at the melt-onset phase
    const Trajectory tr = reconstruct_trajectory(*bp, p, 4000);
    double lowest = 1e300;
    for (const auto& [tau, e] : tr.samples) lowest = std::min(lowest, e);
    CHECK(lowest == doctest::Approx(bp->min_e).epsilon(1e-5));
}

TEST_CASE("simulation returns to the branch and contracts at e^{-b}") {
    const ForcingParams p = kBase.with_lm(0.92);
    const auto bp = ice_free_branch(p);
    REQUIRE(bp.has_value());
    const auto one = simulate_filippov(p, bp->e_init, bp->t_ref, bp->t_ref + 1.0);
    CHECK(std::abs(one.e_end - bp->e_init) < 1e-8);

    const double eps = 0.1;
    const auto three = simulate_filippov(p, bp->e_init + eps, bp->t_ref, bp->t_ref + 3.0);
    CHECK(three.e_end - bp->e_init ==
          doctest::Approx(eps * std::exp(-3.0 * p.b)).epsilon(2e-2));
}

TEST_CASE("a cold start converges to a stable branch") {
    // at l_m = 0.92 the ice-covered branch still exists (its grazing point
    // sits at 0.91872), so a deep-ice start lands there; once it is gone
    // (l_m = 0.90) the same start must find the stable seasonal state
    {
        const ForcingParams p = kBase.with_lm(0.92);
        const auto covered = ice_covered_branch(p);
        REQUIRE(covered.has_value());
        const auto sim = simulate_filippov(p, -1.0, 0.0, 40.0);
        CHECK(!sim.sliding_entry);
        CHECK(std::abs(sim.e_end - branch_energy_at(*covered, p, 0.0)) < 1e-6);
    }
    {
        const ForcingParams p = kBase.with_lm(0.90);
        REQUIRE(!ice_covered_branch(p).has_value());
        std::optional<BranchPoint> target;
        for (const auto& s : seasonal_solutions(p))
            if (s.stable) target = s;
        REQUIRE(target.has_value());
        const auto sim = simulate_filippov(p, -1.0, 0.0, 40.0);
        CHECK(!sim.sliding_entry);
        CHECK(std::abs(sim.e_end - branch_energy_at(*target, p, 0.0)) < 1e-6);
    }
}

TEST_CASE("grazing descent onto the boundary halts with a sliding-entry report") {
    // flat forcing, F+ = -1e-10 all year: the state decays onto E = 0
    // exactly where the flux is within tolerance of zero
    ForcingParams p;
    p.delta_alpha = 0.3;
    p.s_a = 0.0;
    p.l_a = 0.0;
    p.b = 5.0;
    p.l_m = 1.3 + 1e-10;
    const auto sim = simulate_filippov(p, 0.01, 0.0, 10.0);
    CHECK(sim.sliding_entry);
    CHECK(sim.message.find("sliding") != std::string::npos);
    CHECK(sim.e_end == 0.0);
}

TEST_CASE("simulation input validation") {
    CHECK_THROWS_AS((void)simulate_filippov(kBase.with_delta_e(0.1), 0.5, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)simulate_filippov(kBase, 0.0, 0.0, 1.0), boundary_error);
}
