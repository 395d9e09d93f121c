#include "paretax/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "paretax/errors.hpp"

namespace paretax {
namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kron_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kron_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double err;
};

PanelResult gauss_kronrod_15(const std::function<double(double)>& f, double a,
                             double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_nodes[i]);
        fv[14 - i] = f(c + h * kron_nodes[i]);
    }
    fv[7] = f(c);
    double kron = kron_weights[7] * fv[7];
    for (int i = 0; i < 7; ++i) kron += kron_weights[i] * (fv[i] + fv[14 - i]);
    // Gauss-7 uses the odd Kronrod nodes.
    double gauss = gauss_weights[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        gauss += gauss_weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    return {kron * h, std::abs(kron - gauss) * h};
}

struct Panel {
    double a, b, integral, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
    if (a == b) return 0.0;
    constexpr int max_panels = 4000;
    std::priority_queue<Panel> panels;
    auto first = gauss_kronrod_15(f, a, b);
    panels.push({a, b, first.integral, first.err});
    double total = first.integral;
    double total_err = first.err;
    int n_panels = 1;
    while (total_err > rel_tol * std::max(std::abs(total), 1e-300) &&
           n_panels < max_panels) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval exhausted machine precision; keep its estimate.
            total_err -= worst.err;
            continue;
        }
        auto left = gauss_kronrod_15(f, worst.a, mid);
        auto right = gauss_kronrod_15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.err + right.err - worst.err;
        panels.push({worst.a, mid, left.integral, left.err});
        panels.push({mid, worst.b, right.integral, right.err});
        ++n_panels;
    }
    if (total_err > rel_tol * std::max(std::abs(total), 1e-300) * 10.0)
        throw error("integrate: adaptive refinement did not converge");
    return total;
}

double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, double rel_tol) {
    if (a == b) return 0.0;
    const double half = 0.5 * (b - a);
    constexpr double t_max = 6.5;       // weights underflow beyond this
    constexpr double min_gap = 1e-290;  // keep nodes strictly inside (a, b)

    // Node at parameter t: x = (a+b)/2 + half*tanh(y), y = (pi/2) sinh(t).
    // The distance to the nearer endpoint is computed without cancellation:
    // 1 - tanh(y) = 2 / (e^{2y} + 1).
    const auto term = [&](double t) -> double {
        const double y = 1.5707963267948966 * std::sinh(t);
        const double gap = (b - a) / (std::exp(2.0 * std::abs(y)) + 1.0);
        if (gap < min_gap) return 0.0;
        const double x = (y >= 0.0) ? b - gap : a + gap;
        const double cy = std::cosh(y);
        const double w = half * 1.5707963267948966 * std::cosh(t) / (cy * cy);
        return w * f(x);
    };

    double h = 1.0;
    double sum = term(0.0);
    for (int k = 1; k * h <= t_max; ++k) sum += term(k * h) + term(-k * h);
    double prev = sum * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        // Add the new midpoints only.
        double extra = 0.0;
        for (int k = 1; k * h <= t_max; k += 2)
            extra += term(k * h) + term(-k * h);
        sum += extra;
        const double cur = sum * h;
        if (level >= 3 &&
            std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300))
            return cur;
        prev = cur;
    }
    return prev;
}

double integrate_pareto_tail(const std::function<double(double)>& g,
                             double x_c, double rel_tol) {
    if (x_c <= 0.0) throw domain_error("integrate_pareto_tail: x_c must be > 0");
    // x = x_c/u, dx = (x_c/u^2) du maps [x_c, inf) onto (0, 1].
    const auto h = [&](double u) -> double {
        const double x = x_c / u;
        return g(x) * x_c / (u * u);
    };
    return integrate_tanh_sinh(h, 0.0, 1.0, rel_tol);
}

}  // namespace paretax
