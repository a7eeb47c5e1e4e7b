#include "floe/param_map.hpp"

#include <cmath>

#include "floe/errors.hpp"

namespace floe {

void StandardTarget::validate() const {
    if (!(f_tilde_plus > 0.0)) throw infeasible_target_error("f_tilde_plus must be > 0");
    if (!(f_tilde_minus > 0.0)) throw infeasible_target_error("f_tilde_minus must be > 0");
    const double da = 0.5 * (f_bar_plus - f_bar_minus);
    if (!(da >= 0.0 && da <= 1.0))
        throw infeasible_target_error("(f_bar_plus - f_bar_minus)/2 = " + std::to_string(da) +
                                      " is not a valid delta_alpha in [0, 1]");
    const double lm = 1.0 - 0.5 * (f_bar_plus + f_bar_minus);
    if (!(lm >= 0.0))
        throw infeasible_target_error("1 - (f_bar_plus + f_bar_minus)/2 = " + std::to_string(lm) +
                                      " is not a valid l_m >= 0");
}

std::vector<double> solve_la_squared(const StandardTarget& target, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw degenerate_ratio_error("r = " + std::to_string(r) +
                                     " (delta_alpha in {0, 1} has no unique inversion)");
    const double fp2 = target.f_tilde_plus * target.f_tilde_plus;
    const double fm2 = target.f_tilde_minus * target.f_tilde_minus;
    const double sum = fm2 + r * r * fp2;
    const double dif = fm2 - r * r * fp2;
    const double omr = 1.0 - r;
    // constant term written with sin/cos instead of tan^2/(1+tan^2), which
    // stays finite at delta_psi = +-pi/2
    const double c = std::cos(target.delta_psi), s = std::sin(target.delta_psi);
    const double b_coef = -2.0 * sum / (omr * omr);
    const double c_coef = (dif * dif * c * c + sum * sum * s * s) / (omr * omr * omr * omr);
    const double disc = b_coef * b_coef - 4.0 * c_coef;
    if (disc < 0.0)
        throw no_real_root_error("discriminant " + std::to_string(disc) +
                                 " < 0: no real L_a^2 for this target");
    const double big = 0.5 * (-b_coef + std::sqrt(disc));  // -b_coef > 0
    const double small = big > 0.0 ? c_coef / big : 0.0;   // Vieta keeps the small root accurate
    std::vector<double> roots;
    if (small >= -1e-14) roots.push_back(std::max(small, 0.0));
    if (big >= -1e-14 && big != small) roots.push_back(std::max(big, 0.0));
    return roots;
}

namespace {

struct Branch {
    ForcingParams params;
    InverseIntermediates mid;
    bool feasible = false;
    std::string why;
    double recon_dpsi = 0.0;
};

Branch build_branch(const StandardTarget& target, double la2, const ForcingParams& thermo) {
    Branch out;
    const double da = 0.5 * (target.f_bar_plus - target.f_bar_minus);
    const double lm = 1.0 - 0.5 * (target.f_bar_plus + target.f_bar_minus);
    const double r = (1.0 - da) / (1.0 + da);
    const double fp2 = target.f_tilde_plus * target.f_tilde_plus;
    const double fm2 = target.f_tilde_minus * target.f_tilde_minus;

    out.mid.r = r;
    out.mid.l_a_squared_roots = {la2};

    const double sp2 = (r * fp2 - fm2 + la2 * (1.0 - r)) / (r * (1.0 - r));
    if (sp2 < 0.0) {
        out.why = "S+^2 = " + std::to_string(sp2) + " < 0";
        return out;
    }
    const double sp = std::sqrt(sp2);
    if (!(sp > 0.0)) {
        out.why = "S+ = 0: shortwave amplitude vanishes, l_ac undetermined";
        return out;
    }
    const double sp_lac = (r * r * fp2 - fm2 + la2 * (1.0 - r * r)) / (2.0 * r * (r - 1.0));
    const double lac = sp_lac / sp;
    const double las2 = la2 - lac * lac;
    if (las2 < -1e-10 * std::max(1.0, la2)) {
        out.why = "l_ac^2 = " + std::to_string(lac * lac) + " exceeds l_a^2 = " + std::to_string(la2);
        return out;
    }
    // sign of l_as: F+~ F-~ sin(dpsi) = (r - 1) S+ l_as with r < 1, so
    // sign(l_as) = -sign(sin(dpsi)); no tangent needed
    double las = std::sqrt(std::max(las2, 0.0));
    if (std::sin(target.delta_psi) > 0.0) las = -las;

    out.mid.s_plus = sp;
    out.mid.l_ac = lac;
    out.mid.l_as = las;

    ForcingParams p = thermo;
    p.delta_alpha = da;
    p.l_m = lm;
    p.s_a = sp / (1.0 + da);
    p.l_a = std::sqrt(la2);
    p.phi = wrap_phase(std::atan2(las, lac) / two_pi);
    out.params = p;

    const StandardForm recon = to_standard_form(p);
    out.recon_dpsi = recon.delta_psi;
    const double tol = 1e-6;
    const bool ok = std::abs(recon.f_tilde_plus - target.f_tilde_plus) <= tol * std::max(1.0, target.f_tilde_plus) &&
                    std::abs(recon.f_tilde_minus - target.f_tilde_minus) <= tol * std::max(1.0, target.f_tilde_minus) &&
                    std::abs(wrap_angle(recon.delta_psi - target.delta_psi)) <= tol;
    if (!ok) {
        out.why = "reconstructed (F~+, F~-, dpsi) = (" + std::to_string(recon.f_tilde_plus) + ", " +
                  std::to_string(recon.f_tilde_minus) + ", " + std::to_string(recon.delta_psi) +
                  ") misses the target";
        return out;
    }
    out.feasible = true;
    return out;
}

}  // namespace

InverseResult from_standard_form(const StandardTarget& target, RootChoice root_choice,
                                 const ForcingParams& thermo) {
    target.validate();
    const double da = 0.5 * (target.f_bar_plus - target.f_bar_minus);
    const double r = (1.0 - da) / (1.0 + da);
    const std::vector<double> roots = solve_la_squared(target, r);
    if (roots.empty()) throw no_real_root_error("both quadratic roots are negative");

    const double la2 = (root_choice == RootChoice::smaller) ? roots.front() : roots.back();
    Branch chosen = build_branch(target, la2, thermo);
    if (!chosen.feasible) {
        if (chosen.why.find("misses the target") != std::string::npos) {
            std::string detail = "chosen root " + std::to_string(la2) + ": " + chosen.why;
            if (roots.size() > 1) {
                const double other2 = (root_choice == RootChoice::smaller) ? roots.back() : roots.front();
                Branch other = build_branch(target, other2, thermo);
                detail += "; other root " + std::to_string(other2) + " gives delta_psi " +
                          std::to_string(other.recon_dpsi) +
                          (other.feasible ? " (feasible)" : " (infeasible)");
            }
            throw branch_selection_error(detail);
        }
        throw infeasible_target_error(chosen.why);
    }
    InverseResult res;
    res.params = chosen.params;
    res.mid = chosen.mid;
    res.mid.l_a_squared_roots = roots;
    res.used = root_choice;
    return res;
}

}  // namespace floe
