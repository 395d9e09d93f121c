#pragma once

#include <cmath>
#include <utility>

#include "paretax/errors.hpp"

namespace paretax {

inline double relative_error(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

// Bisection root of f on [lo, hi]; f(lo) and f(hi) must bracket a sign change.
template <class F>
double find_root(F&& f, double lo, double hi, double rel_tol = 1e-10,
                 int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw estimation_error("find_root: interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0 || (hi - lo) <= rel_tol * std::abs(mid)) return mid;
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimum of a unimodal f on [lo, hi], to absolute x-tolerance.
template <class F>
double golden_section_min(F&& f, double lo, double hi, double tol = 1e-8) {
    constexpr double inv_phi = 0.6180339887498948;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while ((b - a) > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace paretax
