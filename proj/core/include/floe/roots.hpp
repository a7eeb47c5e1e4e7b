#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace floe {

/// Brent's method on [lo, hi]; f(lo) and f(hi) must have opposite signs
/// (or one of them be zero). Converges to |hi - lo| <= xtol.
double brent(const std::function<double(double)>& f, double lo, double hi, double xtol = 1e-13);

/// Scan [lo, hi] with n uniform cells and refine every sign change with
/// brent. Cells where f is NaN are skipped. Roots are returned ascending.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n,
                               double xtol = 1e-13);

/// First bracket [a, b] in [lo, hi] with a sign change, scanning n cells.
std::optional<std::pair<double, double>> scan_bracket(const std::function<double(double)>& f,
                                                      double lo, double hi, int n);

}  // namespace floe
