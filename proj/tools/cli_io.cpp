#include "cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace floe::cli {

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const ForcingParams& p) {
    return {{"delta_alpha", p.delta_alpha}, {"s_a", p.s_a},   {"l_m", p.l_m},
            {"l_a", p.l_a},                 {"phi", p.phi},   {"b", p.b},
            {"zeta", p.zeta},               {"delta_e", p.delta_e}};
}

nlohmann::json to_json(const StandardForm& s) {
    return {{"f_bar_plus", s.f_bar_plus},     {"f_bar_minus", s.f_bar_minus},
            {"f_tilde_plus", s.f_tilde_plus}, {"f_tilde_minus", s.f_tilde_minus},
            {"psi_plus", s.psi_plus},         {"psi_minus", s.psi_minus},
            {"delta_psi", s.delta_psi}};
}

namespace {

nlohmann::json opt(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

nlohmann::json to_json(const SlidingIntervals& s, const AttractingWitness& w) {
    nlohmann::json j{{"classification", to_string(s.classification)},
                     {"t_a", opt(s.t_a)},
                     {"t_b", opt(s.t_b)},
                     {"t_c", opt(s.t_c)},
                     {"t_d", opt(s.t_d)},
                     {"width_s1", s.width_s1},
                     {"width_s2", s.width_s2}};
    if (!s.reason.empty()) j["reason"] = s.reason;
    j["attracting"] = {{"present", w.present}};
    if (w.present) {
        j["attracting"]["lo"] = w.lo;
        j["attracting"]["hi"] = w.hi;
    }
    return j;
}

nlohmann::json to_json(const BranchPoint& bp) {
    nlohmann::json j{{"kind", to_string(bp.kind)}, {"l_m", bp.l_m},       {"e_init", bp.e_init},
                     {"floquet", bp.floquet},      {"stable", bp.stable}, {"min_e", bp.min_e},
                     {"t_ref", bp.t_ref}};
    j["e_c"] = opt(bp.e_c);
    j["t_m"] = opt(bp.t_m);
    j["t_f"] = opt(bp.t_f);
    if (!bp.note.empty()) j["note"] = bp.note;
    return j;
}

nlohmann::json to_json(const FixedPoint& fp) {
    return {{"e_star", fp.e_star},
            {"slope", fp.slope},
            {"stable", fp.stable},
            {"min_e", fp.min_e},
            {"max_e", fp.max_e}};
}

ForcingParams params_from_json(const nlohmann::json& j) {
    ForcingParams p;
    p.l_m = std::nan("");
    if (!j.is_object()) throw std::invalid_argument("parameter config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number())
            throw std::invalid_argument("parameter '" + key + "' must be a number");
        const double v = value.get<double>();
        if (key == "delta_alpha") p.delta_alpha = v;
        else if (key == "s_a") p.s_a = v;
        else if (key == "l_m") p.l_m = v;
        else if (key == "l_a") p.l_a = v;
        else if (key == "phi") p.phi = wrap_phase(v);
        else if (key == "b") p.b = v;
        else if (key == "zeta") p.zeta = v;
        else if (key == "delta_e") p.delta_e = v;
        else throw std::invalid_argument("unknown parameter key '" + key + "'");
    }
    return p;
}

TargetConfig target_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("target config must be a JSON object");
    TargetConfig cfg;
    bool have[5] = {false, false, false, false, false};
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw std::invalid_argument("target '" + key + "' must be a number");
        const double v = value.get<double>();
        if (key == "f_bar_plus") { cfg.target.f_bar_plus = v; have[0] = true; }
        else if (key == "f_bar_minus") { cfg.target.f_bar_minus = v; have[1] = true; }
        else if (key == "f_tilde_plus") { cfg.target.f_tilde_plus = v; have[2] = true; }
        else if (key == "f_tilde_minus") { cfg.target.f_tilde_minus = v; have[3] = true; }
        else if (key == "delta_psi") { cfg.target.delta_psi = v; have[4] = true; }
        else if (key == "b") cfg.thermo.b = v;
        else if (key == "zeta") cfg.thermo.zeta = v;
        else if (key == "delta_e") cfg.thermo.delta_e = v;
        else throw std::invalid_argument("unknown target key '" + key + "'");
    }
    const char* names[5] = {"f_bar_plus", "f_bar_minus", "f_tilde_plus", "f_tilde_minus",
                            "delta_psi"};
    for (int i = 0; i < 5; ++i)
        if (!have[i]) throw std::invalid_argument(std::string("missing target key '") + names[i] + "'");
    return cfg;
}

}  // namespace floe::cli
