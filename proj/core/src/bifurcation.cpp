#include "floe/bifurcation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "floe/errors.hpp"
#include "floe/integrals.hpp"
#include "floe/roots.hpp"

namespace floe {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

struct Timeline {
    double t_b = 0.0, t_c = 0.0, t_d = 0.0, t_a1 = 0.0;
};

std::optional<Timeline> timeline_of(const ForcingParams& p) {
    const SlidingIntervals s = find_boundary_times(p);
    if (!(s.t_a && s.t_b && s.t_c && s.t_d)) return std::nullopt;
    Timeline tl;
    tl.t_b = *s.t_b;
    tl.t_c = tl.t_b + wrap_unit(*s.t_c - tl.t_b);
    tl.t_d = tl.t_b + wrap_unit(*s.t_d - tl.t_b);
    tl.t_a1 = tl.t_b + wrap_unit(*s.t_a - tl.t_b);
    if (!(tl.t_b < tl.t_c && tl.t_c < tl.t_d && tl.t_d < tl.t_a1)) return std::nullopt;
    return tl;
}

double refine_root_checked(const std::function<double(double)>& f, double lo, double hi,
                           const char* what, std::pair<double, double> scan, int n) {
    const auto roots = scan_roots(f, lo, hi, n, 1e-12);
    for (double r : roots) {
        if (std::abs(f(r)) < 1e-8) return r;
    }
    throw not_found_error(std::string(what) + ": no sign change in scan range [" +
                          std::to_string(scan.first) + ", " + std::to_string(scan.second) +
                          "], residuals " + std::to_string(f(lo)) + " .. " + std::to_string(f(hi)));
}

}  // namespace

const char* to_string(JumpOutcome o) {
    switch (o) {
        case JumpOutcome::to_seasonal: return "to-seasonal";
        case JumpOutcome::to_ice_free: return "to-ice-free";
        case JumpOutcome::attracting_excluded: return "attracting-excluded";
        case JumpOutcome::no_ice_covered_branch: return "no-ice-covered-branch";
    }
    return "?";
}

double find_l_o(const ForcingParams& base, std::pair<double, double> scan) {
    auto resid = [&](double lm) {
        const ForcingParams p = base.with_lm(lm);
        const Harmonic hp = harmonic_plus(p);
        const auto r = harmonic_roots(hp);
        if (!r) return hp.mean > 0.0 ? 1e6 : -1e6;
        return integral_i_plus(p, r->rise, r->rise + 1.0);
    };
    return refine_root_checked(resid, scan.first, scan.second, "find_l_o", scan, 300);
}

double find_l_i(const ForcingParams& base, std::pair<double, double> scan) {
    auto resid = [&](double lm) {
        const ForcingParams p = base.with_lm(lm);
        const Harmonic hm = harmonic_minus(p);
        const auto r = harmonic_roots(hm);
        if (!r) return hm.mean > 0.0 ? 1e6 : mean_f_minus(p);
        const double t_b = r->rise;
        const double t_c = t_b + wrap_unit(r->fall - t_b);
        const double melt = integral_i_minus(p, t_b, t_c);
        return mean_f_minus(p) + melt * melt / (2.0 * p.zeta);
    };
    return refine_root_checked(resid, scan.first, scan.second, "find_l_i", scan, 300);
}

namespace {

struct SeasonalSystem {
    const ForcingParams& base;

    // R1, R2 of the periodicity system plus (multiplier - 1)
    std::optional<std::array<double, 3>> operator()(double tm, double tf, double lm) const {
        const ForcingParams p = base.with_lm(lm);
        const auto tl = timeline_of(p);
        if (!tl) return std::nullopt;
        const double r1 = integral_i_plus(p, tm, tf);
        const double ibm = integral_i_minus(p, tl->t_b, tm);
        const double r2 = ibm + ibm * ibm / (2.0 * p.zeta) + integral_i_minus(p, tf, tl->t_b + 1.0);
        const double eb = -ibm;
        const double mu = std::exp(-p.b * (tf - tm)) * (p.zeta / (p.zeta - eb)) *
                          (f_minus(p, tf) / f_plus(p, tf)) * (f_plus(p, tm) / f_minus(p, tm));
        return std::array<double, 3>{r1, r2, mu - 1.0};
    }
};

bool solve3(const std::array<std::array<double, 3>, 3>& a, const std::array<double, 3>& b,
            std::array<double, 3>& x) {
    const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (std::abs(det) < 1e-300) return false;
    auto det3 = [&](int col) {
        std::array<std::array<double, 3>, 3> m = a;
        for (int i = 0; i < 3; ++i) m[i][static_cast<size_t>(col)] = b[static_cast<size_t>(i)];
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    for (int c = 0; c < 3; ++c) x[static_cast<size_t>(c)] = det3(c) / det;
    return true;
}

std::optional<SaddleNode> polish_saddle_node(const ForcingParams& base, double tm, double tf,
                                             double lm) {
    const SeasonalSystem sys{base};
    double v[3] = {tm, tf, lm};
    for (int it = 0; it < 60; ++it) {
        const auto f0 = sys(v[0], v[1], v[2]);
        if (!f0) return std::nullopt;
        const double norm = std::abs((*f0)[0]) + std::abs((*f0)[1]) + std::abs((*f0)[2]);
        if (norm < 1e-11) break;
        std::array<std::array<double, 3>, 3> jac{};
        const double h = 1e-8;
        for (int j = 0; j < 3; ++j) {
            double vp[3] = {v[0], v[1], v[2]};
            vp[j] += h;
            const auto fj = sys(vp[0], vp[1], vp[2]);
            if (!fj) return std::nullopt;
            for (int i = 0; i < 3; ++i)
                jac[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    ((*fj)[static_cast<size_t>(i)] - (*f0)[static_cast<size_t>(i)]) / h;
        }
        std::array<double, 3> dx{};
        if (!solve3(jac, {-(*f0)[0], -(*f0)[1], -(*f0)[2]}, dx)) return std::nullopt;
        double damp = 1.0;
        for (int tries = 0; tries < 8; ++tries) {
            const auto f1 = sys(v[0] + damp * dx[0], v[1] + damp * dx[1], v[2] + damp * dx[2]);
            if (f1 && std::abs((*f1)[0]) + std::abs((*f1)[1]) + std::abs((*f1)[2]) < norm) break;
            damp *= 0.5;
        }
        for (int j = 0; j < 3; ++j) v[j] += damp * dx[static_cast<size_t>(j)];
    }
    const auto fin = sys(v[0], v[1], v[2]);
    if (!fin) return std::nullopt;
    if (std::abs((*fin)[0]) > 1e-10 || std::abs((*fin)[1]) > 1e-10 || std::abs((*fin)[2]) > 1e-7)
        return std::nullopt;
    const ForcingParams p = base.with_lm(v[2]);
    const auto tl = timeline_of(p);
    if (!tl) return std::nullopt;
    SaddleNode sn;
    sn.l_m = v[2];
    sn.t_m = v[0];
    sn.t_f = v[1];
    sn.min_e = -integral_i_minus(p, tl->t_b, v[0]);
    sn.floquet = 1.0 + (*fin)[2];
    return sn;
}

double chain_distance(const BranchPoint& a, const BranchPoint& b) {
    const double dm = wrap_unit(*a.t_m - *b.t_m);
    const double dmc = std::min(dm, 1.0 - dm);
    return dmc + std::abs((*a.t_f - *a.t_m) - (*b.t_f - *b.t_m));
}

}  // namespace

std::vector<SaddleNode> find_saddle_nodes(const ForcingParams& base,
                                          std::pair<double, double> lm_range, int n_grid) {
    SeasonalSolverOptions sopts;
    sopts.n_scan = 1200;
    std::vector<double> lms(static_cast<size_t>(n_grid));
    std::vector<std::vector<BranchPoint>> sols(static_cast<size_t>(n_grid));
    for (int i = 0; i < n_grid; ++i) {
        lms[static_cast<size_t>(i)] =
            lm_range.first + (lm_range.second - lm_range.first) * i / (n_grid - 1);
        sols[static_cast<size_t>(i)] =
            seasonal_solutions(base.with_lm(lms[static_cast<size_t>(i)]), sopts);
    }

    std::vector<SaddleNode> out;
    auto add = [&](const std::optional<SaddleNode>& sn) {
        if (!sn) return;
        for (const auto& s : out)
            if (std::abs(s.l_m - sn->l_m) < 1e-7) return;
        out.push_back(*sn);
    };

    for (size_t i = 0; i + 1 < lms.size(); ++i) {
        const auto& a = sols[i];
        const auto& b = sols[i + 1];
        const int diff = static_cast<int>(a.size()) - static_cast<int>(b.size());
        if (diff == 2 || diff == -2) {
            // a fold between these grid points: seed Newton from the
            // closest pair on the richer side
            const auto& rich = diff > 0 ? a : b;
            double best = std::numeric_limits<double>::infinity();
            size_t bi = 0, bj = 1;
            for (size_t r = 0; r < rich.size(); ++r)
                for (size_t s = r + 1; s < rich.size(); ++s) {
                    const double d = chain_distance(rich[r], rich[s]);
                    if (d < best) {
                        best = d;
                        bi = r;
                        bj = s;
                    }
                }
            if (rich.size() < 2) continue;
            const double tm0 = 0.5 * (*rich[bi].t_m + *rich[bj].t_m);
            const double dur = 0.5 * ((*rich[bi].t_f - *rich[bi].t_m) + (*rich[bj].t_f - *rich[bj].t_m));
            const ForcingParams pr = base.with_lm(diff > 0 ? lms[i] : lms[i + 1]);
            const auto tl = timeline_of(pr);
            if (!tl) continue;
            // re-anchor the averaged melt time into this timeline
            const double tm_u = tl->t_b + wrap_unit(tm0 - tl->t_b);
            add(polish_saddle_node(base, tm_u, tm_u + dur, 0.5 * (lms[i] + lms[i + 1])));
        }
        // multiplier crossing +1 along a continuing solution chain
        for (const auto& sa : a) {
            const BranchPoint* match = nullptr;
            double best = 0.08;
            for (const auto& sb : b) {
                const double d = chain_distance(sa, sb);
                if (d < best) {
                    best = d;
                    match = &sb;
                }
            }
            if (match && (sa.floquet - 1.0) * (match->floquet - 1.0) < 0.0 && sa.note.empty() &&
                match->note.empty()) {
                const ForcingParams pr = base.with_lm(lms[i]);
                const auto tl = timeline_of(pr);
                if (!tl) continue;
                const double tm_u = tl->t_b + wrap_unit(*sa.t_m - tl->t_b);
                add(polish_saddle_node(base, tm_u, tm_u + (*sa.t_f - *sa.t_m),
                                       0.5 * (lms[i] + lms[i + 1])));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SaddleNode& x, const SaddleNode& y) {
        return x.l_m < y.l_m;
    });
    return out;
}

SeasonalGsBoundaries seasonal_gs_boundaries(const ForcingParams& base,
                                            std::pair<double, double> scan, int n_scan) {
    auto resid_cov = [&](double lm) -> double {
        const ForcingParams p = base.with_lm(lm);
        const auto tl = timeline_of(p);
        if (!tl) return nan_v;
        if (integral_i_plus(p, tl->t_c, tl->t_a1) > 0.0) return nan_v;  // cannot refreeze
        const double tf = brent(
            [&](double t) { return integral_i_plus(p, tl->t_c, t); }, tl->t_d, tl->t_a1, 1e-13);
        const double melt = integral_i_minus(p, tl->t_b, tl->t_c);
        return melt + melt * melt / (2.0 * p.zeta) + integral_i_minus(p, tf, tl->t_b + 1.0);
    };
    auto resid_free = [&](double lm) -> double {
        const ForcingParams p = base.with_lm(lm);
        const auto tl = timeline_of(p);
        if (!tl) return nan_v;
        auto g = [&](double tm) { return integral_i_plus(p, tm, tl->t_a1); };
        const double g_lo = g(tl->t_b + 1e-12), g_hi = g(tl->t_c);
        if (!(g_lo > 0.0 && g_hi <= 0.0)) return nan_v;  // no interior melt time
        const double tm = brent(g, tl->t_b + 1e-12, tl->t_c, 1e-13);
        const double ibm = integral_i_minus(p, tl->t_b, tm);
        return ibm + ibm * ibm / (2.0 * p.zeta) + integral_i_minus(p, tl->t_a1, tl->t_b + 1.0);
    };

    SeasonalGsBoundaries out;
    for (double r : scan_roots(resid_cov, scan.first, scan.second, n_scan, 1e-12))
        if (std::abs(resid_cov(r)) < 1e-8) out.melt_at_tc.push_back(r);
    for (double r : scan_roots(resid_free, scan.first, scan.second, n_scan, 1e-12))
        if (std::abs(resid_free(r)) < 1e-8) out.freeze_at_spring.push_back(r);
    return out;
}

namespace {

/// Keep only boundary roots across which the seasonal solution count
/// actually changes by one (real branch endpoints, not phantom solutions
/// of the boundary equations).
std::vector<double> real_endpoints(const ForcingParams& base, const std::vector<double>& cands) {
    std::vector<double> out;
    SeasonalSolverOptions sopts;
    sopts.n_scan = 1500;
    const double probe = 2e-4;
    for (double g : cands) {
        const auto below = seasonal_solutions(base.with_lm(g - probe), sopts);
        const auto above = seasonal_solutions(base.with_lm(g + probe), sopts);
        const int d = static_cast<int>(above.size()) - static_cast<int>(below.size());
        if (d == 1 || d == -1) out.push_back(g);
    }
    return out;
}

std::optional<double> nearest(const std::vector<double>& xs, double to) {
    if (xs.empty()) return std::nullopt;
    double best = xs.front();
    for (double x : xs)
        if (std::abs(x - to) < std::abs(best - to)) best = x;
    return best;
}

}  // namespace

BifurcationPoints locate_bifurcations(const ForcingParams& base,
                                      std::pair<double, double> lm_range) {
    BifurcationPoints pts;
    try {
        pts.l_o = find_l_o(base);
    } catch (const not_found_error&) {
    }
    try {
        pts.l_i = find_l_i(base);
    } catch (const not_found_error&) {
    }
    pts.saddle_nodes = find_saddle_nodes(base, lm_range);
    if (!pts.saddle_nodes.empty()) {
        const auto hi = std::max_element(
            pts.saddle_nodes.begin(), pts.saddle_nodes.end(),
            [](const SaddleNode& a, const SaddleNode& b) { return a.min_e < b.min_e; });
        const auto lo = std::min_element(
            pts.saddle_nodes.begin(), pts.saddle_nodes.end(),
            [](const SaddleNode& a, const SaddleNode& b) { return a.min_e < b.min_e; });
        pts.l_sn1 = hi->l_m;
        pts.l_sn2 = lo->l_m;
    }
    const double margin = 0.4;
    pts.seasonal_gs = seasonal_gs_boundaries(
        base, {std::max(0.05, lm_range.first - margin), lm_range.second + margin});
    const auto cov_real = real_endpoints(base, pts.seasonal_gs.melt_at_tc);
    const auto free_real = real_endpoints(base, pts.seasonal_gs.freeze_at_spring);
    if (pts.l_i) pts.gs_cov = nearest(cov_real, *pts.l_i);
    if (pts.l_o) pts.gs_free = nearest(free_real, *pts.l_o);
    return pts;
}

DiagramGaps diagram_gaps(const BifurcationPoints& pts) {
    DiagramGaps gaps;
    if (pts.l_o && pts.gs_free) {
        GapInfo g;
        g.lm_lo = std::min(*pts.l_o, *pts.gs_free);
        g.lm_hi = std::max(*pts.l_o, *pts.gs_free);
        g.median = 0.5 * (g.lm_lo + g.lm_hi);
        gaps.high_energy = g;
    }
    if (pts.l_i && pts.gs_cov) {
        GapInfo g;
        g.lm_lo = std::min(*pts.l_i, *pts.gs_cov);
        g.lm_hi = std::max(*pts.l_i, *pts.gs_cov);
        g.median = 0.5 * (g.lm_lo + g.lm_hi);
        gaps.low_energy = g;
    }
    return gaps;
}

namespace {

std::vector<double> diagram_grid(const LmGrid& grid, const std::vector<double>& events) {
    std::vector<double> lms;
    lms.reserve(static_cast<size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i)
        lms.push_back(grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1));
    for (double ev : events) {
        if (!(ev >= grid.lo && ev <= grid.hi)) continue;
        for (int i = 0; i < grid.refine_n; ++i) {
            const double x =
                ev - grid.refine_radius + 2.0 * grid.refine_radius * i / (grid.refine_n - 1);
            if (x >= grid.lo && x <= grid.hi) lms.push_back(x);
        }
    }
    std::sort(lms.begin(), lms.end());
    lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
    return lms;
}

}  // namespace

Diagram branch_diagram(const ForcingParams& base, const LmGrid& grid) {
    Diagram d;
    d.params = base;
    d.delta_e = 0.0;
    d.grid = grid;
    d.points = locate_bifurcations(base, {grid.lo, grid.hi});

    std::vector<double> events;
    if (d.points.l_o) events.push_back(*d.points.l_o);
    if (d.points.l_i) events.push_back(*d.points.l_i);
    if (d.points.gs_cov) events.push_back(*d.points.gs_cov);
    if (d.points.gs_free) events.push_back(*d.points.gs_free);
    for (const auto& sn : d.points.saddle_nodes) events.push_back(sn.l_m);
    const auto lms = diagram_grid(grid, events);

    struct Chain {
        double t_m, t_f, mu;
        int id;
        bool seen;
    };
    std::vector<Chain> chains;
    int next_id = 2;  // 0 = ice-free, 1 = ice-covered
    SeasonalSolverOptions sopts;
    sopts.n_scan = 1200;

    bool sliver_note = false;
    for (double lm : lms) {
        const ForcingParams p = base.with_lm(lm);
        bool keep_free = true, keep_covered = true;
        if (detect_attracting(p).present) {
            // a branch is dropped only when the attracting set has taken
            // over the entry point that branch grazes; a sliver elsewhere
            // on the boundary leaves the closed forms valid
            keep_free = spring_entry_intact(p);
            keep_covered = autumn_entry_intact(p);
            if (!keep_free || !keep_covered) {
                d.notes.push_back("l_m = " + std::to_string(lm) + " partially excluded: attracting sliding at the " +
                                  (!keep_free ? std::string("spring") : std::string("autumn")) +
                                  " entry point");
            } else if (!sliver_note) {
                d.notes.push_back(
                    "attracting sliding present away from the entry points for part of the sweep; "
                    "branches there never touch it and are retained");
                sliver_note = true;
            }
        }
        if (keep_free)
            if (const auto bp = ice_free_branch(p))
                d.rows.push_back({lm, BranchKind::ice_free, 0, bp->min_e, bp->floquet, bp->stable});
        if (keep_covered)
            if (const auto bp = ice_covered_branch(p))
                d.rows.push_back({lm, BranchKind::ice_covered, 1, bp->min_e, bp->floquet, bp->stable});

        for (auto& c : chains) c.seen = false;
        for (const auto& bp : seasonal_solutions(p, sopts)) {
            Chain* best = nullptr;
            double best_d = 0.08;
            for (auto& c : chains) {
                if (c.seen) continue;
                const double dm = std::min(wrap_unit(*bp.t_m - c.t_m), wrap_unit(c.t_m - *bp.t_m));
                const double dist = dm + std::abs((*bp.t_f - *bp.t_m) - (c.t_f - c.t_m));
                if (dist < best_d) {
                    best_d = dist;
                    best = &c;
                }
            }
            int id;
            if (best) {
                // a stability flip splits the chain into a new branch id
                const bool flip = (best->mu - 1.0) * (bp.floquet - 1.0) < 0.0;
                id = flip ? next_id++ : best->id;
                best->t_m = *bp.t_m;
                best->t_f = *bp.t_f;
                best->mu = bp.floquet;
                best->id = id;
                best->seen = true;
            } else {
                id = next_id++;
                chains.push_back({*bp.t_m, *bp.t_f, bp.floquet, id, true});
            }
            d.rows.push_back({lm, BranchKind::seasonal, id, bp.min_e, bp.floquet, bp.stable});
        }
        std::erase_if(chains, [](const Chain& c) { return !c.seen; });
    }
    std::sort(d.rows.begin(), d.rows.end(), [](const DiagramRow& a, const DiagramRow& b) {
        if (a.branch_id != b.branch_id) return a.branch_id < b.branch_id;
        return a.l_m < b.l_m;
    });
    return d;
}

Diagram smoothed_diagram(const ForcingParams& base, const LmGrid& grid,
                         std::pair<double, double> e_range, int n_grid,
                         const IntegratorOptions& opts) {
    if (!(base.delta_e > 0.0))
        throw std::invalid_argument("smoothed_diagram requires delta_e > 0");
    Diagram d;
    d.params = base;
    d.delta_e = base.delta_e;
    d.grid = grid;

    // refine around the Filippov events of the same parameter set: the
    // smoothed folds live within a few delta_e of them
    std::vector<double> events;
    try {
        const ForcingParams filippov = base.with_delta_e(0.0);
        const auto pts = locate_bifurcations(filippov, {grid.lo, grid.hi});
        if (pts.l_o) events.push_back(*pts.l_o);
        if (pts.l_i) events.push_back(*pts.l_i);
        for (const auto& sn : pts.saddle_nodes) events.push_back(sn.l_m);
    } catch (const error&) {
    }
    const auto lms = diagram_grid(grid, events);

    struct Chain {
        double e_star;
        bool stable;
        int id;
        bool seen;
    };
    std::vector<Chain> chains;
    int next_id = 0;
    std::vector<int> counts;
    counts.reserve(lms.size());

    for (double lm : lms) {
        const ForcingParams p = base.with_lm(lm);
        const auto scan = poincare_fixed_points(p, 0.0, e_range, n_grid, opts);
        counts.push_back(static_cast<int>(scan.fixed_points.size()));
        for (auto& c : chains) c.seen = false;
        for (const auto& fp : scan.fixed_points) {
            BranchKind kind = BranchKind::seasonal;
            if (fp.min_e > 0.0)
                kind = BranchKind::ice_free;
            else if (fp.max_e < 0.0)
                kind = BranchKind::ice_covered;
            Chain* best = nullptr;
            double best_d = 0.15;
            for (auto& c : chains) {
                if (c.seen) continue;
                const double dist = std::abs(c.e_star - fp.e_star);
                if (dist < best_d) {
                    best_d = dist;
                    best = &c;
                }
            }
            int id;
            if (best) {
                id = best->stable == fp.stable ? best->id : next_id++;
                best->e_star = fp.e_star;
                best->stable = fp.stable;
                best->id = id;
                best->seen = true;
            } else {
                id = next_id++;
                chains.push_back({fp.e_star, fp.stable, id, true});
            }
            d.rows.push_back({lm, kind, id, fp.min_e, fp.slope, fp.stable});
        }
        std::erase_if(chains, [](const Chain& c) { return !c.seen; });
    }
    for (size_t i = 0; i + 1 < lms.size(); ++i) {
        const int diff = counts[i + 1] - counts[i];
        if (diff == 2 || diff == -2) d.smoothed_folds.push_back(0.5 * (lms[i] + lms[i + 1]));
        else if (diff != 0)
            d.notes.push_back("fixed-point count changed by " + std::to_string(diff) +
                              " between l_m = " + std::to_string(lms[i]) + " and " +
                              std::to_string(lms[i + 1]));
    }
    std::sort(d.rows.begin(), d.rows.end(), [](const DiagramRow& a, const DiagramRow& b) {
        if (a.branch_id != b.branch_id) return a.branch_id < b.branch_id;
        return a.l_m < b.l_m;
    });
    return d;
}

std::vector<WidthsRow> sliding_width_sweep(WidthVary vary, const std::vector<double>& values,
                                           const ForcingParams& base) {
    const StandardForm sf0 = to_standard_form(base);
    std::vector<WidthsRow> rows;
    for (double v : values) {
        WidthsRow row;
        row.value = v;
        StandardTarget t = StandardTarget::from(sf0);
        switch (vary) {
            case WidthVary::dpsi: t.delta_psi = v; break;
            case WidthVary::ftilde_plus: t.f_tilde_plus = v; break;
            case WidthVary::ftilde_minus: t.f_tilde_minus = v; break;
        }
        try {
            const InverseResult inv = from_standard_form(t, RootChoice::smaller, base);
            row.params = inv.params;
            BifurcationPoints pts;
            pts.l_o = find_l_o(inv.params);
            pts.l_i = find_l_i(inv.params);
            pts.seasonal_gs = seasonal_gs_boundaries(inv.params, {0.3, 2.5});
            const auto cov_real = real_endpoints(inv.params, pts.seasonal_gs.melt_at_tc);
            const auto free_real = real_endpoints(inv.params, pts.seasonal_gs.freeze_at_spring);
            pts.gs_cov = nearest(cov_real, *pts.l_i);
            pts.gs_free = nearest(free_real, *pts.l_o);
            const DiagramGaps gaps = diagram_gaps(pts);
            if (!gaps.high_energy || !gaps.low_energy)
                throw not_found_error("a diagram gap has no located endpoints");
            row.gap_high = gaps.high_energy;
            row.gap_low = gaps.low_energy;
            row.width_s1 = find_boundary_times(inv.params.with_lm(gaps.high_energy->median)).width_s1;
            row.width_s2 = find_boundary_times(inv.params.with_lm(gaps.low_energy->median)).width_s2;
        } catch (const std::exception& e) {
            row.status = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

JumpResult jump_min_e(const ForcingParams& base) {
    JumpResult jr;
    jr.delta_min_e = nan_v;
    jr.covered_end_min_e = nan_v;
    jr.landing_min_e = nan_v;
    try {
        jr.l_i = find_l_i(base);
    } catch (const not_found_error&) {
        jr.l_i = nan_v;
        jr.outcome = JumpOutcome::no_ice_covered_branch;
        return jr;
    }
    const ForcingParams p = base.with_lm(jr.l_i);
    if (!autumn_entry_intact(p)) {
        jr.outcome = JumpOutcome::attracting_excluded;
        return jr;
    }
    const auto rm = harmonic_roots(harmonic_minus(p));
    if (!rm) {
        jr.outcome = JumpOutcome::no_ice_covered_branch;
        return jr;
    }
    const double t_b = rm->rise;
    jr.covered_end_min_e = -integral_i_minus(p, t_b, t_b + wrap_unit(rm->fall - t_b));

    SeasonalSolverOptions sopts;
    sopts.n_scan = 2000;
    const auto sols = seasonal_solutions(p, sopts);
    const BranchPoint* landing = nullptr;
    for (const auto& s : sols) {
        if (!s.stable) continue;
        if (!landing || s.min_e < landing->min_e) landing = &s;  // branch adjacent to the ice end
    }
    if (landing) {
        jr.outcome = JumpOutcome::to_seasonal;
        jr.landing_min_e = landing->min_e;
        jr.delta_min_e = std::abs(jr.covered_end_min_e - jr.landing_min_e);
        return jr;
    }
    jr.outcome = JumpOutcome::to_ice_free;
    if (const auto icf = ice_free_branch(p)) {
        jr.landing_min_e = icf->min_e;
        jr.delta_min_e = std::abs(jr.covered_end_min_e - jr.landing_min_e);
    }
    return jr;
}

std::vector<JumpCell> jump_grid(const std::vector<double>& dpsi_values,
                                const std::vector<double>& dalpha_values,
                                const ForcingParams& base) {
    std::vector<JumpCell> cells;
    for (double da : dalpha_values) {
        ForcingParams amp = base;
        amp.delta_alpha = da;
        const StandardForm sf = to_standard_form(amp);
        for (double dpsi : dpsi_values) {
            JumpCell cell;
            cell.dpsi = dpsi;
            cell.dalpha = da;
            StandardTarget t = StandardTarget::from(sf);
            t.delta_psi = dpsi;
            try {
                const InverseResult inv = from_standard_form(t, RootChoice::smaller, base);
                cell.params = inv.params;
                cell.result = jump_min_e(inv.params);
            } catch (const std::exception& e) {
                cell.status = std::string("infeasible: ") + e.what();
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::vector<BifSetRow> bifurcation_set(BifVary vary, const std::vector<double>& values,
                                       const ForcingParams& base,
                                       std::pair<double, double> lm_range) {
    std::vector<BifSetRow> rows;
    for (double v : values) {
        BifSetRow row;
        row.value = v;
        ForcingParams p = base;
        if (vary == BifVary::delta_alpha)
            p.delta_alpha = v;
        else
            p.phi = wrap_phase(v);

        // l_m above which F- loses its roots (no ablation season, t_b = t_c):
        // mean(l_m) = mean(0) - l_m drops below -amp at l_m = mean(0) + amp
        const Harmonic hm0 = harmonic_minus(p.with_lm(0.0));
        row.lm_no_repelling = hm0.mean + hm0.amp;

        try {
            row.l_o = find_l_o(p);
        } catch (const not_found_error&) {
        }
        try {
            row.l_i = find_l_i(p);
        } catch (const not_found_error&) {
        }
        const bool bad_o = row.l_o && !spring_entry_intact(p.with_lm(*row.l_o));
        const bool bad_i = row.l_i && !autumn_entry_intact(p.with_lm(*row.l_i));
        if (bad_o || bad_i) {
            row.status = "attracting-excluded";
            row.l_o.reset();
            row.l_i.reset();
            rows.push_back(row);
            continue;
        }
        const auto sns = find_saddle_nodes(p, lm_range, 280);
        if (!sns.empty()) {
            const auto hi = std::max_element(sns.begin(), sns.end(), [](auto& a, auto& b) {
                return a.min_e < b.min_e;
            });
            const auto lo = std::min_element(sns.begin(), sns.end(), [](auto& a, auto& b) {
                return a.min_e < b.min_e;
            });
            row.l_sn1 = hi->l_m;
            row.l_sn2 = lo->l_m;
        }
        if (!row.l_i && !row.l_o) row.status = "no-perennial-branches-in-range";
        rows.push_back(row);
    }
    return rows;
}

}  // namespace floe
