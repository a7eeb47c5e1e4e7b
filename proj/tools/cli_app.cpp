#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_io.hpp"
#include "floe/errors.hpp"

namespace floe::cli {

namespace {

namespace fs = std::filesystem;

struct Common {
    std::string config_path;
    double lm_override = std::nan("");
    double delta_e_override = std::nan("");
    std::string out_dir;
    bool plot = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config_path, "JSON parameter file");
    sub->add_option("--lm", c.lm_override, "override l_m");
    sub->add_option("--delta-e", c.delta_e_override, "override delta_e");
    sub->add_option("--out", c.out_dir, "directory to write artifacts into (default: stdout)");
    sub->add_flag("--plot", c.plot, "also write a gnuplot script (requires --out)");
}

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ForcingParams resolve_params(const Common& c, bool need_lm) {
    ForcingParams p;
    p.l_m = std::nan("");
    if (!c.config_path.empty()) {
        std::ifstream in(c.config_path);
        if (!in) throw usage_error("cannot open config file '" + c.config_path + "'");
        nlohmann::json j;
        in >> j;
        p = params_from_json(j);
    }
    if (!std::isnan(c.lm_override)) p.l_m = c.lm_override;
    if (!std::isnan(c.delta_e_override)) p.delta_e = c.delta_e_override;
    if (need_lm && std::isnan(p.l_m))
        throw usage_error("missing required parameter: l_m (set it in the --config JSON or with --lm)");
    if (std::isnan(p.l_m)) p.l_m = 0.0;  // placeholder for sweep commands that scan l_m
    p.validate();
    return p;
}

std::vector<double> parse_range(const std::string& spec) {
    // "a:b:n" -> n points from a to b inclusive
    double a = 0, b = 0;
    int n = 0;
    std::istringstream is(spec);
    char c1 = 0, c2 = 0;
    if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 || !is.eof())
        throw usage_error("bad range '" + spec + "', expected a:b:n with n >= 1");
    std::vector<double> v;
    if (n == 1) {
        v.push_back(a);
        return v;
    }
    for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
    return v;
}

std::vector<double> parse_list(const std::string& spec) {
    std::vector<double> v;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            size_t pos = 0;
            const double x = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            throw usage_error("bad value list '" + spec + "'");
        }
    }
    if (v.empty()) throw usage_error("empty value list");
    return v;
}

/// Writes one command's artifacts: CSV/JSON to stdout by default, into
/// files under --out when given; every file begins with '#' comments
/// carrying the command and the fully resolved parameter set.
class Emitter {
public:
    Emitter(std::string command, const Common& c) : command_(std::move(command)), common_(c) {
        if (common_.plot && common_.out_dir.empty())
            throw usage_error("--plot requires --out (the script references the CSV file)");
        if (!common_.out_dir.empty()) fs::create_directories(common_.out_dir);
    }

    void set_params(const ForcingParams& p) { params_json_ = to_json(p).dump(); }
    void add_meta(const std::string& key, const std::string& value) {
        meta_.emplace_back(key, value);
    }

    std::string file_stem() const {
        std::string s = command_;
        for (char& ch : s)
            if (ch == '-') ch = '_';
        return s;
    }

    std::string header() const {
        std::ostringstream os;
        os << "# floe " << command_ << "\n";
        if (!params_json_.empty()) os << "# params: " << params_json_ << "\n";
        for (const auto& [k, v] : meta_) os << "# " << k << ": " << v << "\n";
        return os.str();
    }

    void csv(const std::string& header_row, const std::vector<std::string>& rows,
             const std::vector<std::string>& comments = {}) {
        std::ostringstream os;
        os << header();
        for (const auto& c : comments) os << "# " << c << "\n";
        os << header_row << "\n";
        for (const auto& r : rows) os << r << "\n";
        write(file_stem() + ".csv", os.str());
    }

    void json(const nlohmann::json& j, const std::string& suffix = "") {
        write(file_stem() + suffix + ".json", header() + j.dump(2) + "\n");
    }

    void gnuplot(const std::string& body) {
        if (!common_.plot) return;
        write(file_stem() + ".gp", "# gnuplot script generated by floe " + command_ + "\n" + body);
    }

private:
    void write(const std::string& name, const std::string& text) {
        if (common_.out_dir.empty()) {
            std::cout << text;
            return;
        }
        const fs::path path = fs::path(common_.out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw error("io", "cannot write " + path.string());
        out << text;
    }

    std::string command_;
    const Common& common_;
    std::string params_json_;
    std::vector<std::pair<std::string, std::string>> meta_;
};

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string row;
    bool first = true;
    for (const auto& c : cells) {
        if (!first) row += ',';
        row += c;
        first = false;
    }
    return row;
}

int cmd_sliding(const Common& c) {
    const ForcingParams p = resolve_params(c, true);
    Emitter em("sliding", c);
    em.set_params(p);
    const SlidingIntervals s = find_boundary_times(p);
    const AttractingWitness w = detect_attracting(p);
    em.json(to_json(s, w));
    return 0;
}

int cmd_branches(const Common& c) {
    const ForcingParams p = resolve_params(c, true);
    Emitter em("branches", c);
    em.set_params(p);
    nlohmann::json arr = nlohmann::json::array();
    if (const auto bp = ice_free_branch(p)) arr.push_back(to_json(*bp));
    if (const auto bp = ice_covered_branch(p)) arr.push_back(to_json(*bp));
    for (const auto& bp : seasonal_solutions(p)) arr.push_back(to_json(bp));
    em.json(arr);
    return 0;
}

int cmd_trajectory(const Common& c, const std::string& kind, int samples, int index) {
    const ForcingParams p = resolve_params(c, true);
    Emitter em("trajectory", c);
    em.set_params(p);
    std::optional<BranchPoint> bp;
    if (kind == "ice-free") {
        bp = ice_free_branch(p);
    } else if (kind == "ice-covered") {
        bp = ice_covered_branch(p);
    } else if (kind == "seasonal") {
        const auto sols = seasonal_solutions(p);
        if (index >= 0) {
            if (static_cast<size_t>(index) < sols.size()) bp = sols[static_cast<size_t>(index)];
        } else {
            for (const auto& s : sols)
                if (s.stable) {
                    bp = s;
                    break;
                }
            if (!bp && !sols.empty()) bp = sols.front();
        }
    } else {
        throw usage_error("unknown --kind '" + kind + "' (ice-free, ice-covered, seasonal)");
    }
    if (!bp) throw not_found_error("no " + kind + " periodic solution at l_m = " + fmt(p.l_m));
    const Trajectory tr = reconstruct_trajectory(*bp, p, samples);
    std::vector<std::string> rows;
    rows.reserve(tr.samples.size());
    for (const auto& [tau, e] : tr.samples) rows.push_back(csv_row({fmt(tau), fmt(e)}));
    em.add_meta("kind", kind);
    em.add_meta("floquet", fmt(bp->floquet));
    em.csv("tau,e", rows);
    em.gnuplot(
        "set datafile separator ','\n"
        "set terminal pngcairo size 800,500\n"
        "set output 'trajectory.png'\n"
        "set xlabel 'tau (years)'\nset ylabel 'E'\nset grid\n"
        "plot 'trajectory.csv' using 1:2 with lines lw 2 title 'E(tau)', 0 lc rgb 'gray' notitle\n");
    return 0;
}

int cmd_poincare(const Common& c, double t0, double e_min, double e_max, int n_grid) {
    const ForcingParams p = resolve_params(c, true);
    if (!(p.delta_e > 0.0))
        throw usage_error("poincare requires delta_e > 0 (use --delta-e or the config JSON)");
    Emitter em("poincare", c);
    em.set_params(p);
    const PoincareScan scan = poincare_fixed_points(p, t0, {e_min, e_max}, n_grid);
    std::vector<std::string> comments;
    nlohmann::json fps = nlohmann::json::array();
    for (const auto& fp : scan.fixed_points) {
        comments.push_back("fixed_point: " + to_json(fp).dump());
        fps.push_back(to_json(fp));
    }
    for (const auto& wmsg : scan.warnings) comments.push_back("warning: " + wmsg);
    std::vector<std::string> rows;
    for (size_t i = 0; i < scan.e_grid.size(); ++i)
        rows.push_back(csv_row({fmt(scan.e_grid[i]), fmt(scan.e_mapped[i]),
                                fmt(scan.e_grid[i] - scan.e_mapped[i])}));
    em.add_meta("t0", fmt(t0));
    em.csv("e0,image,g", rows, comments);
    if (!c.out_dir.empty()) em.json(fps, "_fixed");
    em.gnuplot(
        "set datafile separator ','\n"
        "set terminal pngcairo size 700,700\n"
        "set output 'poincare.png'\n"
        "set xlabel 'E(t0)'\nset ylabel 'E(t0+1)'\nset grid\n"
        "plot 'poincare.csv' using 1:2 with lines lw 2 title 'one-year map', x lc rgb 'gray' title 'identity'\n");
    return 0;
}

int cmd_diagram(const Common& c, double lm_lo, double lm_hi, int lm_steps, double e_min,
                double e_max, int n_grid) {
    const ForcingParams p = resolve_params(c, false);
    Emitter em("diagram", c);
    em.set_params(p);
    LmGrid grid;
    grid.lo = lm_lo;
    grid.hi = lm_hi;
    grid.n = lm_steps;
    Diagram d;
    if (p.delta_e > 0.0)
        d = smoothed_diagram(p, grid, {e_min, e_max}, n_grid);
    else
        d = branch_diagram(p, grid);

    std::vector<std::string> comments;
    auto point_comment = [&](const char* kind, double lm) {
        comments.push_back(std::string("bifurcation: kind=") + kind + " l_m=" + fmt(lm));
    };
    if (d.points.l_o) point_comment("l_o", *d.points.l_o);
    if (d.points.l_i) point_comment("l_i", *d.points.l_i);
    if (d.points.l_sn1) point_comment("l_sn1", *d.points.l_sn1);
    if (d.points.l_sn2) point_comment("l_sn2", *d.points.l_sn2);
    if (d.points.gs_cov) point_comment("gs_cov", *d.points.gs_cov);
    if (d.points.gs_free) point_comment("gs_free", *d.points.gs_free);
    for (double f : d.smoothed_folds) comments.push_back("fold: l_m=" + fmt(f));
    for (const auto& n : d.notes) comments.push_back("note: " + n);

    std::vector<std::string> rows;
    rows.reserve(d.rows.size());
    for (const auto& r : d.rows)
        rows.push_back(csv_row({fmt(r.l_m), to_string(r.kind), std::to_string(r.branch_id),
                                fmt(r.min_e), fmt(r.floquet), r.stable ? "1" : "0"}));
    em.csv("l_m,branch_kind,branch_id,min_e,floquet,stable", rows, comments);
    em.gnuplot(
        "set datafile separator ','\n"
        "set terminal pngcairo size 900,600\n"
        "set output 'diagram.png'\n"
        "set xlabel 'L_m (decreasing: more greenhouse gas)'\nset ylabel 'min E'\n"
        "set xrange [*:*] reverse\nset grid\n"
        "plot 'diagram.csv' using 1:($6==1?$4:1/0) with points pt 7 ps 0.4 title 'stable', \\\n"
        "     'diagram.csv' using 1:($6==0?$4:1/0) with points pt 6 ps 0.4 title 'unstable'\n");
    return 0;
}

int cmd_bifset(const Common& c, const std::string& vary, const std::string& values_spec,
               double lm_lo, double lm_hi) {
    const ForcingParams p = resolve_params(c, false);
    Emitter em("bifset", c);
    em.set_params(p);
    BifVary v;
    std::vector<double> values;
    if (vary == "delta_alpha") {
        v = BifVary::delta_alpha;
        values = values_spec.empty() ? parse_range("0.1:0.9:17") : parse_range(values_spec);
    } else if (vary == "phi") {
        v = BifVary::phi;
        values = values_spec.empty() ? parse_range("-0.48:0.48:25") : parse_range(values_spec);
    } else {
        throw usage_error("unknown --vary '" + vary + "' (delta_alpha or phi)");
    }
    const auto rows_out = bifurcation_set(v, values, p, {lm_lo, lm_hi});
    std::vector<std::string> rows;
    auto optf = [](const std::optional<double>& x) { return x ? fmt(*x) : std::string("nan"); };
    for (const auto& r : rows_out)
        rows.push_back(csv_row({fmt(r.value), optf(r.l_o), optf(r.l_i), optf(r.l_sn1),
                                optf(r.l_sn2), optf(r.lm_no_repelling), r.status}));
    em.add_meta("vary", vary);
    em.csv("value,l_o,l_i,l_sn1,l_sn2,lm_no_repelling,status", rows);
    em.gnuplot(
        "set datafile separator ','\n"
        "set terminal pngcairo size 800,600\n"
        "set output 'bifset.png'\n"
        "set xlabel '" + vary + "'\nset ylabel 'L_m'\nset grid\n"
        "plot 'bifset.csv' using 1:2 with linespoints title 'L_o', \\\n"
        "     'bifset.csv' using 1:3 with linespoints title 'L_i', \\\n"
        "     'bifset.csv' using 1:4 with linespoints title 'L_sn1', \\\n"
        "     'bifset.csv' using 1:5 with linespoints title 'L_sn2'\n");
    return 0;
}

int cmd_widths(const Common& c, const std::string& vary, const std::string& values_spec) {
    const ForcingParams p = resolve_params(c, false);
    Emitter em("widths", c);
    em.set_params(p);
    WidthVary v;
    std::vector<double> values;
    if (vary == "dpsi") {
        v = WidthVary::dpsi;
        values = values_spec.empty() ? std::vector<double>{-0.21, 0.0, 0.30, 0.51}
                                     : parse_list(values_spec);
    } else if (vary == "ftp") {
        v = WidthVary::ftilde_plus;
        values = values_spec.empty() ? std::vector<double>{1.45, 2.00, 2.64, 4.00}
                                     : parse_list(values_spec);
    } else if (vary == "ftm") {
        v = WidthVary::ftilde_minus;
        values = values_spec.empty() ? std::vector<double>{0.80, 1.41, 2.00, 2.50}
                                     : parse_list(values_spec);
    } else {
        throw usage_error("unknown --vary '" + vary + "' (dpsi, ftp, ftm)");
    }
    const auto sweep = sliding_width_sweep(v, values, p);
    std::vector<std::string> rows;
    for (const auto& r : sweep) {
        const auto g1 = r.gap_high, g2 = r.gap_low;
        rows.push_back(csv_row(
            {fmt(r.value), fmt(r.params.s_a), fmt(r.params.l_a), fmt(r.params.phi),
             g1 ? fmt(g1->lm_lo) : "nan", g1 ? fmt(g1->lm_hi) : "nan",
             g1 ? fmt(g1->median) : "nan", fmt(r.width_s1), g2 ? fmt(g2->lm_lo) : "nan",
             g2 ? fmt(g2->lm_hi) : "nan", g2 ? fmt(g2->median) : "nan", fmt(r.width_s2),
             r.status}));
    }
    em.add_meta("vary", vary);
    em.csv(
        "value,s_a,l_a,phi,gap1_lo,gap1_hi,gap1_median,width_s1,gap2_lo,gap2_hi,gap2_median,"
        "width_s2,status",
        rows);
    em.gnuplot(
        "set datafile separator ','\n"
        "set terminal pngcairo size 800,500\n"
        "set output 'widths.png'\n"
        "set xlabel '" + vary + "'\nset ylabel 'sliding interval width (years)'\nset grid\n"
        "plot 'widths.csv' using 1:8 with linespoints lw 2 title '|S1|', \\\n"
        "     'widths.csv' using 1:12 with linespoints lw 2 dt 2 title '|S2|'\n");
    return 0;
}

int cmd_jump_grid(const Common& c, const std::string& dpsi_spec, const std::string& dalpha_spec) {
    const ForcingParams p = resolve_params(c, false);
    Emitter em("jump-grid", c);
    em.set_params(p);
    const auto dpsis = parse_range(dpsi_spec.empty() ? "0:0.5:11" : dpsi_spec);
    const auto dalphas = parse_range(dalpha_spec.empty() ? "0.1:0.5:9" : dalpha_spec);
    const auto cells = jump_grid(dpsis, dalphas, p);
    std::vector<std::string> rows;
    for (const auto& cell : cells) {
        std::string outcome = "error", li = "nan", delta = "nan", cov = "nan", land = "nan";
        if (cell.result) {
            outcome = to_string(cell.result->outcome);
            li = fmt(cell.result->l_i);
            delta = fmt(cell.result->delta_min_e);
            cov = fmt(cell.result->covered_end_min_e);
            land = fmt(cell.result->landing_min_e);
        }
        rows.push_back(csv_row({fmt(cell.dpsi), fmt(cell.dalpha), fmt(cell.params.s_a),
                                fmt(cell.params.l_a), fmt(cell.params.phi), li, outcome, delta,
                                cov, land, cell.status}));
    }
    em.csv(
        "dpsi,dalpha,s_a,l_a,phi,l_i,outcome,delta_min_e,covered_end_min_e,landing_min_e,status",
        rows);
    em.gnuplot(
        "set datafile separator ','\n"
        "set terminal pngcairo size 800,600\n"
        "set output 'jump_grid.png'\n"
        "set xlabel 'delta psi'\nset ylabel 'delta alpha'\nset grid\n"
        "plot 'jump_grid.csv' using 1:2:8 with points pt 5 ps 3 palette title 'Delta(min E)'\n");
    return 0;
}

int cmd_map_params(const Common& c, const std::string& root_choice) {
    if (c.config_path.empty())
        throw usage_error("map-params requires --config with a standard-form target JSON");
    std::ifstream in(c.config_path);
    if (!in) throw usage_error("cannot open config file '" + c.config_path + "'");
    nlohmann::json j;
    in >> j;
    const TargetConfig cfg = target_from_json(j);
    const RootChoice rc = root_choice == "larger" ? RootChoice::larger : RootChoice::smaller;
    if (root_choice != "smaller" && root_choice != "larger")
        throw usage_error("--root must be 'smaller' or 'larger'");

    Emitter em("map-params", c);
    const InverseResult res = from_standard_form(cfg.target, rc, cfg.thermo);
    nlohmann::json out;
    out["params"] = to_json(res.params);
    out["root_choice"] = rc == RootChoice::smaller ? "smaller" : "larger";
    out["intermediates"] = {{"r", res.mid.r},
                            {"s_plus", res.mid.s_plus},
                            {"l_ac", res.mid.l_ac},
                            {"l_as", res.mid.l_as},
                            {"l_a_squared_roots", res.mid.l_a_squared_roots}};
    nlohmann::json branches = nlohmann::json::array();
    for (size_t k = 0; k < res.mid.l_a_squared_roots.size(); ++k) {
        const RootChoice alt = k == 0 ? RootChoice::smaller : RootChoice::larger;
        nlohmann::json b{{"root", k == 0 ? "smaller" : "larger"},
                         {"l_a_squared", res.mid.l_a_squared_roots[k]}};
        try {
            const InverseResult r2 = from_standard_form(cfg.target, alt, cfg.thermo);
            b["params"] = to_json(r2.params);
            b["reconstructed"] = to_json(to_standard_form(r2.params));
            b["feasible"] = true;
        } catch (const std::exception& e) {
            b["feasible"] = false;
            b["error"] = e.what();
        }
        branches.push_back(b);
    }
    out["branches"] = branches;
    em.json(out);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{
        "floe: periodic solutions, sliding intervals and bifurcation sets of a seasonally "
        "forced sea-ice energy balance model in its discontinuous-albedo limit"};
    app.require_subcommand(1);

    Common c_sliding, c_branches, c_traj, c_poinc, c_diag, c_bifset, c_widths, c_jump, c_map;

    auto* sc_sliding = app.add_subcommand("sliding", "boundary times and sliding-interval widths");
    add_common(sc_sliding, c_sliding);

    auto* sc_branches = app.add_subcommand("branches", "all periodic solutions at one l_m");
    add_common(sc_branches, c_branches);

    auto* sc_traj = app.add_subcommand("trajectory", "sample one period of a branch as CSV");
    add_common(sc_traj, c_traj);
    std::string traj_kind;
    int traj_samples = 1000, traj_index = -1;
    sc_traj->add_option("--kind", traj_kind, "ice-free, ice-covered or seasonal")->required();
    sc_traj->add_option("--samples", traj_samples, "samples per period (default 1000)");
    sc_traj->add_option("--index", traj_index,
                        "which seasonal solution, by melt time (default: the stable one)");

    auto* sc_poinc = app.add_subcommand("poincare", "one-year map scan of the smoothed system");
    add_common(sc_poinc, c_poinc);
    double poinc_t0 = 0.0, poinc_emin = -3.0, poinc_emax = 2.0;
    int poinc_n = 512;
    sc_poinc->add_option("--t0", poinc_t0, "section phase (default 0)");
    sc_poinc->add_option("--e-min", poinc_emin, "grid lower end (default -3)");
    sc_poinc->add_option("--e-max", poinc_emax, "grid upper end (default 2)");
    sc_poinc->add_option("--n-grid", poinc_n, "grid size (default 512)");

    auto* sc_diag = app.add_subcommand(
        "diagram", "bifurcation diagram over l_m (Filippov, or smoothed when delta_e > 0)");
    add_common(sc_diag, c_diag);
    double diag_lo = 0.6, diag_hi = 1.6, diag_emin = -3.0, diag_emax = 2.0;
    int diag_steps = 400, diag_n = 512;
    sc_diag->add_option("--lm-lo", diag_lo, "sweep start (default 0.6)");
    sc_diag->add_option("--lm-hi", diag_hi, "sweep end (default 1.6)");
    sc_diag->add_option("--lm-steps", diag_steps, "sweep points (default 400)");
    sc_diag->add_option("--e-min", diag_emin, "smoothed scans: grid lower end");
    sc_diag->add_option("--e-max", diag_emax, "smoothed scans: grid upper end");
    sc_diag->add_option("--n-grid", diag_n, "smoothed scans: grid size");

    auto* sc_bifset =
        app.add_subcommand("bifset", "bifurcation set over delta_alpha or phi");
    add_common(sc_bifset, c_bifset);
    std::string bifset_vary, bifset_values;
    double bifset_lo = 0.4, bifset_hi = 2.2;
    sc_bifset->add_option("--vary", bifset_vary, "delta_alpha or phi")->required();
    sc_bifset->add_option("--values", bifset_values, "a:b:n sweep values");
    sc_bifset->add_option("--lm-lo", bifset_lo, "l_m window for saddle-node search");
    sc_bifset->add_option("--lm-hi", bifset_hi);

    auto* sc_widths =
        app.add_subcommand("widths", "sliding widths at the gap medians over a standard-form sweep");
    add_common(sc_widths, c_widths);
    std::string widths_vary, widths_values;
    sc_widths->add_option("--vary", widths_vary, "dpsi, ftp or ftm")->required();
    sc_widths->add_option("--values", widths_values, "comma-separated sweep values");

    auto* sc_jump = app.add_subcommand("jump-grid", "Delta(min E) over a (dpsi, dalpha) grid");
    add_common(sc_jump, c_jump);
    std::string jump_dpsi, jump_dalpha;
    sc_jump->add_option("--dpsi", jump_dpsi, "a:b:n grid (default 0:0.5:11)");
    sc_jump->add_option("--dalpha", jump_dalpha, "a:b:n grid (default 0.1:0.5:9)");

    auto* sc_map = app.add_subcommand("map-params",
                                      "invert a standard-form target to physical parameters");
    add_common(sc_map, c_map);
    std::string map_root = "smaller";
    sc_map->add_option("--root", map_root, "quadratic root: smaller (default) or larger");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_sliding->parsed()) return cmd_sliding(c_sliding);
        if (sc_branches->parsed()) return cmd_branches(c_branches);
        if (sc_traj->parsed()) return cmd_trajectory(c_traj, traj_kind, traj_samples, traj_index);
        if (sc_poinc->parsed()) return cmd_poincare(c_poinc, poinc_t0, poinc_emin, poinc_emax, poinc_n);
        if (sc_diag->parsed())
            return cmd_diagram(c_diag, diag_lo, diag_hi, diag_steps, diag_emin, diag_emax, diag_n);
        if (sc_bifset->parsed()) return cmd_bifset(c_bifset, bifset_vary, bifset_values, bifset_lo, bifset_hi);
        if (sc_widths->parsed()) return cmd_widths(c_widths, widths_vary, widths_values);
        if (sc_jump->parsed()) return cmd_jump_grid(c_jump, jump_dpsi, jump_dalpha);
        if (sc_map->parsed()) return cmd_map_params(c_map, map_root);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace floe::cli
