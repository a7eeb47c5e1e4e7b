#include "floe/smoothed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "floe/errors.hpp"
#include "floe/forcing.hpp"
#include "floe/roots.hpp"

namespace floe {

namespace {

// Dormand-Prince 5(4) pair.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

}  // namespace

double integrate_smoothed(const ForcingParams& p, double e0, double t0, double t1,
                          const IntegratorOptions& opts, double* orbit_min, double* orbit_max) {
    if (!(p.delta_e > 0.0))
        throw std::invalid_argument("integrate_smoothed requires delta_e > 0");
    if (!(t1 >= t0)) throw std::invalid_argument("integrate_smoothed: t1 < t0");

    const bool track = orbit_min != nullptr || orbit_max != nullptr;
    double lo = e0, hi = e0;
    double t = t0, y = e0;
    double h = std::min(opts.init_step, t1 - t0);
    auto f = [&](double tau, double e) { return rhs(p, tau, e); };

    while (t < t1) {
        const double cap =
            (track || std::abs(y) < 4.0 * p.delta_e) ? opts.boundary_max_step : opts.max_step;
        h = std::min({h, cap, t1 - t});
        const double k1 = f(t, y);
        const double k2 = f(t + c2 * h, y + h * a21 * k1);
        const double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = f(t + h, y5);
        const double err =
            std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        if (!std::isfinite(y5))
            throw integration_error("non-finite state at tau = " + std::to_string(t));
        const double scale = opts.abs_tol + opts.rel_tol * std::max(std::abs(y), std::abs(y5));
        const double ratio = err / scale;
        if (ratio <= 1.0) {
            t += h;
            y = y5;
            if (track) {
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
        }
        const double grow = 0.9 * std::pow(std::max(ratio, 1e-10), -0.2);
        h *= std::clamp(grow, 0.2, 5.0);
    }
    if (orbit_min) *orbit_min = lo;
    if (orbit_max) *orbit_max = hi;
    return y;
}

double integrate_year(const ForcingParams& p, double e0, double t0, const IntegratorOptions& opts) {
    return integrate_smoothed(p, e0, t0, t0 + 1.0, opts);
}

PoincareScan poincare_fixed_points(const ForcingParams& p, double t0,
                                   std::pair<double, double> e_range, int n_grid,
                                   const IntegratorOptions& opts) {
    if (n_grid < 64) throw std::invalid_argument("poincare_fixed_points: n_grid must be >= 64");
    if (!(e_range.second > e_range.first))
        throw std::invalid_argument("poincare_fixed_points: empty e_range");

    PoincareScan scan;
    scan.params = p;
    scan.t0 = t0;
    scan.e_grid.resize(static_cast<size_t>(n_grid));
    scan.e_mapped.resize(static_cast<size_t>(n_grid));
    for (int i = 0; i < n_grid; ++i) {
        const double e = e_range.first + (e_range.second - e_range.first) * i / (n_grid - 1);
        scan.e_grid[static_cast<size_t>(i)] = e;
        scan.e_mapped[static_cast<size_t>(i)] = integrate_year(p, e, t0, opts);
    }

    // roots are refined against a tighter flow map than the grid pass so
    // the fixed-point residual is not limited by the scan tolerance
    IntegratorOptions tight = opts;
    tight.abs_tol = std::min(opts.abs_tol, 1e-12);
    tight.rel_tol = std::min(opts.rel_tol, 1e-12);
    auto g = [&](double e) { return e - integrate_year(p, e, t0, tight); };
    std::vector<double> roots;
    for (int i = 0; i + 1 < n_grid; ++i) {
        const double g0 = scan.e_grid[static_cast<size_t>(i)] - scan.e_mapped[static_cast<size_t>(i)];
        const double g1 =
            scan.e_grid[static_cast<size_t>(i + 1)] - scan.e_mapped[static_cast<size_t>(i + 1)];
        if (g0 == 0.0) {
            roots.push_back(scan.e_grid[static_cast<size_t>(i)]);
        } else if (std::signbit(g0) != std::signbit(g1)) {
            roots.push_back(brent(g, scan.e_grid[static_cast<size_t>(i)],
                                  scan.e_grid[static_cast<size_t>(i + 1)], 1e-12));
        }
    }
    const double cell = (e_range.second - e_range.first) / (n_grid - 1);
    for (size_t k = 0; k + 1 < roots.size(); ++k) {
        if (roots[k + 1] - roots[k] < 2.0 * cell) {
            scan.warnings.push_back("fixed points " + std::to_string(roots[k]) + " and " +
                                    std::to_string(roots[k + 1]) +
                                    " are closer than two grid cells; consider a finer n_grid");
        }
    }
    const double fd_h = 1e-6;
    for (double r : roots) {
        FixedPoint fp;
        fp.e_star = r;
        fp.slope =
            (integrate_year(p, r + fd_h, t0, tight) - integrate_year(p, r - fd_h, t0, tight)) /
            (2.0 * fd_h);
        fp.stable = fp.slope < 1.0;
        if (fp.slope <= 0.0)
            scan.warnings.push_back("non-positive map slope " + std::to_string(fp.slope) +
                                    " at fixed point " + std::to_string(r));
        integrate_smoothed(p, r, t0, t0 + 1.0, opts, &fp.min_e, &fp.max_e);
        scan.fixed_points.push_back(fp);
    }
    return scan;
}

}  // namespace floe
