#include "floe/sliding.hpp"

#include <cmath>

namespace floe {

const char* to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::two_repelling: return "two-repelling";
        case BoundaryClass::degenerate: return "degenerate";
        case BoundaryClass::attracting_present: return "attracting-present";
        case BoundaryClass::no_sliding: return "no-sliding";
    }
    return "?";
}

std::optional<RootPair> harmonic_roots(const Harmonic& h) {
    if (!(h.amp > 0.0)) return std::nullopt;
    const double x = -h.mean / h.amp;
    if (std::abs(x) > 1.0) return std::nullopt;
    const double th = std::acos(std::clamp(x, -1.0, 1.0));
    auto polish = [&](double t) {
        // a Newton step or two removes the trig rounding; skipped near
        // tangency where the derivative vanishes
        for (int i = 0; i < 3; ++i) {
            const double f = h(t), d = h.deriv(t);
            if (std::abs(d) < 1e-8) break;
            t -= f / d;
        }
        return wrap_unit(t);
    };
    RootPair r;
    r.rise = polish((h.phase - th) / two_pi);
    r.fall = polish((h.phase + th) / two_pi);
    return r;
}

namespace {

struct Arc {  // circular arc [start, start + len) on R/Z
    bool full = false;
    bool empty = true;
    double start = 0.0, len = 0.0;
};

Arc arc_where_positive(const Harmonic& h, const std::optional<RootPair>& roots) {
    Arc a;
    if (roots) {
        a.empty = false;
        a.start = roots->rise;
        a.len = wrap_unit(roots->fall - roots->rise);
        if (a.len == 0.0) a.len = 1e-15;
        return a;
    }
    if (h.mean > 0.0) {
        a.full = true;
        a.empty = false;
    }
    return a;
}

Arc arc_where_negative(const Harmonic& h, const std::optional<RootPair>& roots) {
    Arc a;
    if (roots) {
        a.empty = false;
        a.start = roots->fall;
        a.len = wrap_unit(roots->rise - roots->fall);
        if (a.len == 0.0) a.len = 1e-15;
        return a;
    }
    if (h.mean < 0.0) {
        a.full = true;
        a.empty = false;
    }
    return a;
}

bool near_tangent(const Harmonic& h) {
    return h.amp > 0.0 && std::abs(h.amp - std::abs(h.mean)) <= 1e-12 * std::max(1.0, h.amp);
}

}  // namespace

AttractingWitness detect_attracting(const ForcingParams& p) {
    const Harmonic hp = harmonic_plus(p);
    const Harmonic hm = harmonic_minus(p);
    const Arc neg_plus = arc_where_negative(hp, harmonic_roots(hp));
    const Arc pos_minus = arc_where_positive(hm, harmonic_roots(hm));
    AttractingWitness w;
    if (neg_plus.empty || pos_minus.empty) return w;

    auto verify = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi);
        if (f_plus(p, mid) < 0.0 && f_minus(p, mid) > 0.0) {
            w.present = true;
            w.lo = wrap_unit(lo);
            w.hi = w.lo + (hi - lo);
            return true;
        }
        return false;
    };
    if (neg_plus.full && pos_minus.full) {  // cannot happen: F+ - F- changes sign
        verify(0.0, 1.0);
        return w;
    }
    if (neg_plus.full) {
        verify(pos_minus.start, pos_minus.start + pos_minus.len);
        return w;
    }
    if (pos_minus.full) {
        verify(neg_plus.start, neg_plus.start + neg_plus.len);
        return w;
    }
    // both proper arcs: unroll one of them by -1, 0, +1 turns
    const double a0 = neg_plus.start, a1 = neg_plus.start + neg_plus.len;
    for (int k = -1; k <= 1; ++k) {
        const double b0 = pos_minus.start + k, b1 = pos_minus.start + pos_minus.len + k;
        const double lo = std::max(a0, b0), hi = std::min(a1, b1);
        if (hi - lo > 1e-12 && verify(lo, hi)) return w;
    }
    return w;
}

namespace {

bool entry_intact(const ForcingParams& p, bool spring) {
    const auto rp = harmonic_roots(harmonic_plus(p));
    const auto rm = harmonic_roots(harmonic_minus(p));
    if (!rp || !rm) return false;
    const double s0 = spring ? rp->rise : rm->fall;   // entry: t_a or t_c
    const double s1 = spring ? rm->rise : rp->fall;   // exit: t_b or t_d
    const double len = wrap_unit(s1 - s0);
    if (!(len > 0.0 && len < 0.5)) return false;  // ordering collapsed or inverted
    const AttractingWitness w = detect_attracting(p);
    if (!w.present) return true;
    const double wlen = w.hi - w.lo;
    for (int k = -1; k <= 1; ++k) {
        const double lo = std::max(s0, w.lo + k);
        const double hi = std::min(s0 + len, w.lo + wlen + k);
        if (hi >= lo - 1e-12) return false;  // attracting set touches the interval
    }
    return true;
}

}  // namespace

bool spring_entry_intact(const ForcingParams& p) { return entry_intact(p, true); }
bool autumn_entry_intact(const ForcingParams& p) { return entry_intact(p, false); }

SlidingIntervals find_boundary_times(const ForcingParams& p) {
    const Harmonic hp = harmonic_plus(p);
    const Harmonic hm = harmonic_minus(p);
    const auto rp = harmonic_roots(hp);
    const auto rm = harmonic_roots(hm);

    SlidingIntervals s;
    if (rp) {
        s.t_a = rp->rise;
        s.t_d = rp->fall;
    }
    if (rm) {
        s.t_b = rm->rise;
        s.t_c = rm->fall;
    }
    if (rp && rm) {
        s.width_s1 = wrap_unit(*s.t_b - *s.t_a);
        s.width_s2 = wrap_unit(*s.t_d - *s.t_c);
    }

    const AttractingWitness att = detect_attracting(p);
    if (att.present) {
        s.classification = BoundaryClass::attracting_present;
        s.reason = "F+ < 0 < F- on an interval near tau = " + std::to_string(att.lo);
        return s;
    }
    if (near_tangent(hp) || near_tangent(hm)) {
        s.classification = BoundaryClass::degenerate;
        s.reason = near_tangent(hp) ? "F+ tangent to zero (double root)" : "F- tangent to zero (double root)";
        return s;
    }
    if (rp && rm) {
        if (s.width_s1 > 0.0 && s.width_s2 > 0.0) {
            s.classification = BoundaryClass::two_repelling;
        } else {
            s.classification = BoundaryClass::degenerate;
            s.reason = "coincident F+ and F- roots (no albedo jump?)";
        }
        return s;
    }
    if (!rp && !rm) {
        if (hp.mean > 0.0 && hm.mean < 0.0) {
            s.classification = BoundaryClass::degenerate;
            s.reason = "F+ > 0 and F- < 0 all year: entire boundary repels";
        } else {
            s.classification = BoundaryClass::no_sliding;
            s.reason = hp.mean <= 0.0 ? "F+ <= 0 all year" : "F- >= 0 all year";
        }
        return s;
    }
    s.classification = BoundaryClass::degenerate;
    if (!rp)
        s.reason = std::string("F+ rootless (") + (hp.mean > 0.0 ? "always positive)" : "always negative)");
    else
        s.reason = std::string("F- rootless (") + (hm.mean > 0.0 ? "always positive)" : "always negative)");
    return s;
}

}  // namespace floe
