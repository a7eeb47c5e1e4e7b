#include "floe/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace floe {

double brent(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw std::invalid_argument("brent: endpoints do not bracket a root");
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa;
    bool mflag = true;
    double d = 0.0;
    for (int it = 0; it < 200; ++it) {
        if (fb == 0.0 || std::abs(b - a) <= xtol) return b;
        double s;
        if (fa != fc && fb != fc) {
            // inverse quadratic interpolation
            s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);  // secant
        }
        const double m = 0.5 * (a + b);
        const bool between = (s > std::min(b, m) && s < std::max(b, m));
        const double db = std::abs(b - c), dc = std::abs(c - d);
        if (!between || (mflag && std::abs(s - b) >= 0.5 * db) ||
            (!mflag && std::abs(s - b) >= 0.5 * dc) || (mflag && db < xtol) ||
            (!mflag && dc < xtol)) {
            s = m;
            mflag = true;
        } else {
            mflag = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if (std::signbit(fa) != std::signbit(fs)) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n,
                               double xtol) {
    std::vector<double> roots;
    double x0 = lo, f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / n;
        const double f1 = f(x1);
        if (std::isfinite(f0) && std::isfinite(f1)) {
            if (f0 == 0.0) {
                if (roots.empty() || roots.back() != x0) roots.push_back(x0);
            } else if (std::signbit(f0) != std::signbit(f1)) {
                roots.push_back(brent(f, x0, x1, xtol));
            }
        }
        x0 = x1;
        f0 = f1;
    }
    if (std::isfinite(f0) && f0 == 0.0) roots.push_back(x0);
    return roots;
}

std::optional<std::pair<double, double>> scan_bracket(const std::function<double(double)>& f,
                                                      double lo, double hi, int n) {
    double x0 = lo, f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / n;
        const double f1 = f(x1);
        if (std::isfinite(f0) && std::isfinite(f1) && std::signbit(f0) != std::signbit(f1))
            return std::make_pair(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    return std::nullopt;
}

}  // namespace floe
