#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace dpm {

inline const double kE = std::exp(1.0);
inline const double kRhoMax = kE / (kE - 1.0);  // ~1.58198, best robustness

// Root of f on [lo, hi], assuming f(lo) <= 0 <= f(hi).
// Plain bisection; iterates until the bracket collapses to machine precision.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int max_iter = 200) {
    double flo = f(lo);
    // tiny positive slack: roots sitting exactly on lo can round up
    if (flo > 1e-9) throw std::invalid_argument("bisect: f(lo) > 0");
    if (flo >= 0.0) return lo;
    for (int i = 0; i < max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) <= 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace detail {
inline double simpson(const std::function<double(double)>& f, double a, double fa,
                      double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double b, double fa, double fb, double fm,
                                   double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, flm);
    double right = simpson(f, m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}
}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int max_depth = 40) {
    if (b <= a) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = detail::simpson(f, a, fa, b, fb, fm);
    return detail::adaptive_simpson_rec(f, a, b, fa, fb, fm, whole, tol, max_depth);
}

}  // namespace dpm
