#include "floe/branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "floe/errors.hpp"
#include "floe/integrals.hpp"
#include "floe/roots.hpp"

namespace floe {

const char* to_string(BranchKind k) {
    switch (k) {
        case BranchKind::ice_free: return "ice-free";
        case BranchKind::ice_covered: return "ice-covered";
        case BranchKind::seasonal: return "seasonal";
    }
    return "?";
}

namespace {

/// Boundary times unrolled from t_b so that t_b < t_c < t_d < t_a1,
/// where t_a1 plays the role of t_a + 1 (the next spring entry).
struct Timeline {
    double t_b = 0.0, t_c = 0.0, t_d = 0.0, t_a1 = 0.0;
};

std::optional<Timeline> make_timeline(const ForcingParams& p) {
    const SlidingIntervals s = find_boundary_times(p);
    if (!s.two_repelling()) return std::nullopt;
    Timeline tl;
    tl.t_b = *s.t_b;
    tl.t_c = tl.t_b + wrap_unit(*s.t_c - tl.t_b);
    tl.t_d = tl.t_b + wrap_unit(*s.t_d - tl.t_b);
    tl.t_a1 = tl.t_b + wrap_unit(*s.t_a - tl.t_b);
    if (!(tl.t_b < tl.t_c && tl.t_c < tl.t_d && tl.t_d < tl.t_a1)) return std::nullopt;
    return tl;
}

}  // namespace

std::optional<BranchPoint> ice_free_branch(const ForcingParams& p) {
    const Harmonic hp = harmonic_plus(p);
    const auto roots = harmonic_roots(hp);
    double t_a;
    std::string note;
    if (roots) {
        t_a = roots->rise;
    } else if (hp.mean > 0.0) {
        // F+ positive all year: the orbit never grazes; anchor the map at
        // the minimum of F+ so the reported phase stays meaningful
        t_a = wrap_unit((hp.phase + std::numbers::pi) / two_pi);
        note = "reference-phase-fallback (F+ has no roots)";
    } else {
        return std::nullopt;
    }
    const double e0 = std::exp(-p.b * t_a) * integral_i_plus(p, t_a, t_a + 1.0) / std::expm1(p.b);
    if (!(e0 > 0.0)) return std::nullopt;
    BranchPoint bp;
    bp.kind = BranchKind::ice_free;
    bp.l_m = p.l_m;
    bp.e_init = e0;
    bp.floquet = std::exp(-p.b);
    bp.stable = true;
    bp.min_e = e0;
    bp.t_ref = t_a;
    bp.note = note;
    return bp;
}

std::optional<BranchPoint> ice_covered_branch(const ForcingParams& p) {
    const auto rm = harmonic_roots(harmonic_minus(p));
    if (!rm) return std::nullopt;  // no ablation season (or no ice at all)
    const double t_b = rm->rise;
    const double t_c = t_b + wrap_unit(rm->fall - t_b);
    const double melt = integral_i_minus(p, t_b, t_c);  // > 0 between the roots
    if (!(melt > 0.0)) return std::nullopt;
    const double fbar = mean_f_minus(p);
    const double e_b = p.zeta * fbar / melt - 0.5 * melt;
    const double e_c = e_b + melt;  // summer maximum, at t_c
    if (!(e_c < 0.0)) return std::nullopt;
    BranchPoint bp;
    bp.kind = BranchKind::ice_covered;
    bp.l_m = p.l_m;
    bp.e_init = e_b;
    bp.e_c = e_c;
    bp.floquet = (p.zeta - e_c) / (p.zeta - e_b);
    bp.stable = bp.floquet > 0.0 && bp.floquet < 1.0;
    bp.min_e = e_b;
    bp.t_ref = t_b;
    return bp;
}

std::vector<BranchPoint> seasonal_solutions(const ForcingParams& p, const SeasonalSolverOptions& opts) {
    std::vector<BranchPoint> out;
    const auto tlo = make_timeline(p);
    if (!tlo) return out;
    const Timeline tl = *tlo;

    // For fixed t_m the weighted integral I+(t_m, t_f) decreases in t_f on
    // (t_d, t_a+1) where F+ < 0, so the freezing time is a monotone solve.
    auto freeze_time = [&](double tm) {
        if (integral_i_plus(p, tm, tl.t_a1) > 0.0) return tl.t_a1;  // grazing at the spring entry
        return brent([&](double tf) { return integral_i_plus(p, tm, tf); }, tl.t_d, tl.t_a1,
                     opts.time_tol);
    };
    // Melt times admit a freezing time only where I+(t_m, t_a+1) <= 0;
    // the admissible set is [t_lo, t_c] since I+(., t_a+1) decreases.
    auto edge = [&](double tm) { return integral_i_plus(p, tm, tl.t_a1); };
    const double nudge = 1e-12;
    double t_lo = tl.t_b + nudge;
    if (edge(t_lo) > 0.0) {
        if (edge(tl.t_c) > 0.0) return out;  // freeze-up can never close the year
        t_lo = brent(edge, t_lo, tl.t_c, opts.time_tol);
    }

    auto residual = [&](double tm) -> double {
        // a tiny positive edge value is the grazing sliver left by the
        // t_lo root solve; freeze_time clamps it to the spring entry
        if (edge(tm) > 1e-9) return std::numeric_limits<double>::quiet_NaN();
        const double tf = freeze_time(tm);
        const double ibm = integral_i_minus(p, tl.t_b, tm);
        return ibm + ibm * ibm / (2.0 * p.zeta) + integral_i_minus(p, tf, tl.t_b + 1.0);
    };
    for (double tm : scan_roots(residual, t_lo, tl.t_c, opts.n_scan, opts.time_tol)) {
        if (!(std::abs(residual(tm)) <= 1e-9)) continue;  // reject sign jumps that are not roots
        const double tf = freeze_time(tm);
        BranchPoint bp;
        bp.kind = BranchKind::seasonal;
        bp.l_m = p.l_m;
        bp.e_init = -integral_i_minus(p, tl.t_b, tm);
        bp.floquet = std::exp(-p.b * (tf - tm)) * (p.zeta / (p.zeta - bp.e_init)) *
                     (f_minus(p, tf) / f_plus(p, tf)) * (f_plus(p, tm) / f_minus(p, tm));
        bp.stable = bp.floquet > 0.0 && bp.floquet < 1.0;
        bp.min_e = bp.e_init;
        bp.t_ref = wrap_unit(tl.t_b);
        bp.t_m = wrap_unit(tm);
        bp.t_f = *bp.t_m + (tf - tm);
        if (tl.t_c - tm < opts.boundary_tol || tl.t_a1 - tf < opts.boundary_tol) {
            bp.note = "grazing-sliding-limit";  // multiplier diverges at the entry point
            bp.stable = false;
        }
        out.push_back(bp);
    }
    std::sort(out.begin(), out.end(),
              [](const BranchPoint& a, const BranchPoint& b) { return *a.t_m < *b.t_m; });
    return out;
}

double branch_energy_at(const BranchPoint& bp, const ForcingParams& p, double tau) {
    const double t = bp.t_ref + wrap_unit(tau - bp.t_ref);
    switch (bp.kind) {
        case BranchKind::ice_free:
            return std::exp(-p.b * (t - bp.t_ref)) * bp.e_init +
                   std::exp(-p.b * t) * integral_i_plus(p, bp.t_ref, t);
        case BranchKind::ice_covered: {
            const auto rm = harmonic_roots(harmonic_minus(p));
            if (!rm) throw reconstruction_error("ice-covered branch point without F- roots");
            const double t_c = bp.t_ref + wrap_unit(rm->fall - bp.t_ref);
            if (t <= t_c) return bp.e_init + integral_i_minus(p, bp.t_ref, t);
            const double ec = *bp.e_c;
            const double arg =
                (p.zeta - ec) * (p.zeta - ec) - 2.0 * p.zeta * integral_i_minus(p, t_c, t);
            if (arg < 0.0) throw reconstruction_error("ice-growth root lost (ice-covered leg)");
            return p.zeta - std::sqrt(arg);
        }
        case BranchKind::seasonal: {
            const double tm = bp.t_ref + wrap_unit(*bp.t_m - bp.t_ref);
            const double tf = tm + (*bp.t_f - *bp.t_m);
            if (t <= tm) return bp.e_init + integral_i_minus(p, bp.t_ref, t);
            if (t <= tf) return std::exp(-p.b * t) * integral_i_plus(p, tm, t);
            const double arg = 1.0 - 2.0 * integral_i_minus(p, tf, t) / p.zeta;
            if (arg < 0.0) throw reconstruction_error("ice-growth root lost (seasonal winter leg)");
            return p.zeta * (1.0 - std::sqrt(arg));
        }
    }
    throw reconstruction_error("unknown branch kind");
}

Trajectory reconstruct_trajectory(const BranchPoint& bp, const ForcingParams& p, int n_samples) {
    if (n_samples < 2) throw std::invalid_argument("reconstruct_trajectory: n_samples must be >= 2");
    Trajectory tr;
    tr.kind = bp.kind;
    tr.params = p;
    tr.samples.reserve(static_cast<size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        const double t = bp.t_ref + static_cast<double>(k) / n_samples;
        tr.samples.emplace_back(wrap_unit(t), branch_energy_at(bp, p, t));
    }
    std::sort(tr.samples.begin(), tr.samples.end());
    return tr;
}

double seasonal_one_year_map(const ForcingParams& p, double e_b) {
    const auto tlo = make_timeline(p);
    if (!tlo) throw std::invalid_argument("seasonal_one_year_map: boundary is not two-repelling");
    const Timeline tl = *tlo;
    if (!(e_b < 0.0)) throw std::invalid_argument("seasonal_one_year_map: e_b must be < 0");
    auto melt_level = [&](double t) { return e_b + integral_i_minus(p, tl.t_b, t); };
    if (!(melt_level(tl.t_c) > 0.0))
        throw error("seasonal-map", "state never melts out this year (e_b too negative)");
    const double tm = brent(melt_level, tl.t_b, tl.t_c, 1e-13);
    if (integral_i_plus(p, tm, tl.t_a1) > 0.0)
        throw error("seasonal-map", "state cannot refreeze before the spring entry");
    const double tf =
        brent([&](double tf_) { return integral_i_plus(p, tm, tf_); }, tl.t_d, tl.t_a1, 1e-13);
    const double arg = 1.0 - 2.0 * integral_i_minus(p, tf, tl.t_b + 1.0) / p.zeta;
    if (arg < 0.0) throw reconstruction_error("ice-growth root lost (one-year map)");
    return p.zeta * (1.0 - std::sqrt(arg));
}

namespace {

struct FilippovField {
    const ForcingParams& p;
    bool above;  // which side of E = 0 the state is on

    double operator()(double tau, double e) const {
        if (above) return f_plus(p, tau) - p.b * e;
        const double fm = f_minus(p, tau);
        return fm > 0.0 ? fm : p.zeta * fm / (p.zeta - e);
    }
};

double rk4_step(const FilippovField& f, double tau, double e, double h) {
    const double k1 = f(tau, e);
    const double k2 = f(tau + 0.5 * h, e + 0.5 * h * k1);
    const double k3 = f(tau + 0.5 * h, e + 0.5 * h * k2);
    const double k4 = f(tau + h, e + h * k3);
    return e + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

SimResult simulate_filippov(const ForcingParams& p, double e0, double tau0, double t_end,
                            const SimulateOptions& opts) {
    if (p.delta_e != 0.0)
        throw std::invalid_argument("simulate_filippov: delta_e must be 0 (the Filippov limit)");
    if (e0 == 0.0) throw boundary_error("simulate_filippov: e0 = 0 starts on the boundary");
    if (!(t_end > tau0)) throw std::invalid_argument("simulate_filippov: t_end must exceed tau0");

    // F- kink times; steps are split there so RK4 keeps its order
    const auto rm = harmonic_roots(harmonic_minus(p));
    auto next_kink = [&](double tau) {
        double best = std::numeric_limits<double>::infinity();
        if (rm) {
            for (double r : {rm->rise, rm->fall}) {
                const double t = r + std::floor(tau - r + 1e-12) + 1.0;
                best = std::min(best, t);
            }
        }
        return best;
    };

    SimResult res;
    res.trajectory.kind = e0 > 0.0 ? BranchKind::ice_free : BranchKind::ice_covered;
    res.trajectory.params = p;
    double tau = tau0, e = e0;
    bool above = e0 > 0.0;
    long step_count = 0;
    res.trajectory.samples.emplace_back(tau, e);

    while (tau < t_end) {
        double h = std::min(opts.step, t_end - tau);
        if (!above) h = std::min(h, next_kink(tau) - tau);
        const FilippovField field{p, above};
        const double e1 = rk4_step(field, tau, e, h);
        if (!std::isfinite(e1))
            throw integration_error("non-finite state at tau = " + std::to_string(tau));

        const bool crossed = above ? (e1 <= 0.0 && e != 0.0) : (e1 >= 0.0 && e != 0.0);
        if (!crossed) {
            tau += h;
            e = e1;
            if (++step_count % opts.sample_stride == 0) res.trajectory.samples.emplace_back(tau, e);
            continue;
        }

        // boundary hit inside this step: bisect the step length
        double lo = 0.0, hi = h;
        for (int it = 0; it < 100 && hi - lo > opts.event_tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double em = rk4_step(field, tau, e, mid);
            const bool still_inside = above ? (em > 0.0) : (em < 0.0);
            if (still_inside)
                lo = mid;
            else
                hi = mid;
        }
        const double tau_star = tau + hi;
        const double fp = f_plus(p, tau_star);
        const double fm = f_minus(p, tau_star);
        bool crossing_ok;
        if (above)
            crossing_ok = fp < -opts.flux_tol && fm < 0.0;  // transversal descent
        else
            crossing_ok = fm > opts.flux_tol && fp > 0.0;  // transversal ascent
        res.trajectory.samples.emplace_back(tau_star, 0.0);
        if (!crossing_ok) {
            // grazing at a sliding-interval entry; continuation is nonunique
            res.sliding_entry = true;
            res.entry_tau = tau_star;
            res.tau_end = tau_star;
            res.e_end = 0.0;
            res.message = above ? "reached E = 0 at the spring sliding entry (F+ ~ 0)"
                                : "reached E = 0 at the autumn sliding entry (F- ~ 0)";
            return res;
        }
        above = !above;
        tau = tau_star;
        e = 0.0;
    }
    res.tau_end = tau;
    res.e_end = e;
    if (res.trajectory.samples.back().first != tau) res.trajectory.samples.emplace_back(tau, e);
    return res;
}

}  // namespace floe
