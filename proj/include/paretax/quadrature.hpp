#pragma once

#include <functional>

namespace paretax {

// Adaptive Gauss-Kronrod 7/15 over a finite interval. Refines the panel with
// the largest error estimate until the total estimate meets rel_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10);

// Tanh-sinh rule on (a, b). Converges on integrable endpoint singularities
// (e.g. u^{-0.95} at u = 0) where panel subdivision stalls. The integrand
// receives points strictly inside (a, b).
double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10);

// Integral of g over [x_c, inf) through the substitution u = x_c/x, which
// maps the tail onto (0, 1]. Suitable for Pareto-type integrands; the
// transformed integrand may carry a u^{gamma-3} endpoint singularity, so the
// tanh-sinh rule is used underneath.
double integrate_pareto_tail(const std::function<double(double)>& g,
                             double x_c, double rel_tol = 1e-10);

}  // namespace paretax
