#include "paretax/policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "paretax/errors.hpp"
#include "paretax/units.hpp"

namespace paretax {

double poverty_gap(double x_pov, double x_bar, double m_lab) {
    if (!(x_pov > 0.0)) throw domain_error("poverty_gap: x_pov must be > 0");
    if (!(x_bar > 0.0)) throw domain_error("poverty_gap: x_bar must be > 0");
    if (!(m_lab >= 0.0)) throw domain_error("poverty_gap: m_lab must be >= 0");
    const double r = x_pov / x_bar;
    return m_lab * (r - (-std::expm1(-r)));
}

double post_tax_exponent(double m_cap, double delta_m, double n_cap,
                         double x_c) {
    if (!(delta_m >= 0.0))
        throw domain_error("post_tax_exponent: delta_m must be >= 0");
    const double floor = n_cap * x_c;
    const double remaining = m_cap - delta_m;
    if (!(remaining > floor))
        throw infeasible_error(
            "post_tax_exponent: levy of " +
            std::to_string(units::to_geur(delta_m)) +
            " GEUR leaves no Pareto tail above x_c; maximum feasible "
            "delta_m is " +
            std::to_string(units::to_geur(m_cap - floor)) + " GEUR");
    return (2.0 * remaining - floor) / (remaining - floor);
}

double tau_parameter(double gamma, double eta) {
    if (!(gamma > 1.0))
        throw domain_error("tau_parameter: gamma must be > 1");
    if (!(eta >= gamma))
        throw domain_error(
            "tau_parameter: eta must be >= gamma (a tax cannot fatten the "
            "tail)");
    return (gamma - 1.0) / (eta - 1.0);
}

double post_tax_income(double x, double tau, double x_c) {
    if (!(x >= x_c))
        throw domain_error("post_tax_income: x must be >= x_c");
    if (!(tau > 0.0 && tau <= 1.0))
        throw domain_error("post_tax_income: tau must be in (0, 1]");
    return std::pow(x_c, 1.0 - tau) * std::pow(x, tau);
}

double post_tax_income_derivative(double x, double tau, double x_c) {
    return tau * post_tax_income(x, tau, x_c) / x;
}

double tax_rate(double x, double tau, double x_c) {
    if (!(x >= x_c)) throw domain_error("tax_rate: x must be >= x_c");
    if (!(tau > 0.0 && tau <= 1.0))
        throw domain_error("tax_rate: tau must be in (0, 1]");
    return 1.0 - std::pow(x_c / x, 1.0 - tau);
}

double revenue(double gamma, double tau, double n_cap, double x_c) {
    if (!(gamma > 2.0)) throw domain_error("revenue: gamma must be > 2");
    if (!(tau > 0.0 && tau <= 1.0))
        throw domain_error("revenue: tau must be in (0, 1]");
    if (!(gamma - tau > 1.0))
        throw domain_error(
            "revenue: gamma - tau must exceed 1, otherwise the post-tax "
            "income integral diverges");
    if (n_cap == 0.0) return 0.0;
    const double m_cap = n_cap * x_c * (gamma - 1.0) / (gamma - 2.0);
    const double m_post = n_cap * x_c * (gamma - 1.0) / (gamma - 1.0 - tau);
    return m_cap - m_post;
}

double max_feasible_levy(double m_cap, double n_cap, double x_c) {
    return m_cap - n_cap * x_c;
}

double flat_tax_alpha(double delta_m, double m_lab) {
    if (!(delta_m >= 0.0))
        throw domain_error("flat_tax_alpha: delta_m must be >= 0");
    if (!(delta_m <= m_lab))
        throw domain_error(
            "flat_tax_alpha: delta_m cannot exceed total labor income");
    return 1.0 - delta_m / m_lab;
}

TaxPolicy build_policy(const EconomySnapshot& snap, double delta_m) {
    snap.validate();
    if (!snap.m_cap)
        throw domain_error(
            "build_policy: snapshot has no resolved m_cap; estimate it first");
    TaxPolicy p;
    p.m_cap = *snap.m_cap;
    p.n_cap = snap.n_cap;
    p.x_c = snap.x_c;
    p.delta_m = delta_m;
    p.gamma = gamma_from_capital(p.m_cap, p.n_cap, p.x_c);
    p.eta = post_tax_exponent(p.m_cap, delta_m, p.n_cap, p.x_c);
    p.tau = tau_parameter(p.gamma, p.eta);
    return p;
}

TaxPolicy build_policy_from_tau(const EconomySnapshot& snap, double tau) {
    snap.validate();
    if (!snap.m_cap)
        throw domain_error(
            "build_policy_from_tau: snapshot has no resolved m_cap");
    if (!(tau > 0.0 && tau <= 1.0))
        throw domain_error("build_policy_from_tau: tau must be in (0, 1]");
    TaxPolicy p;
    p.m_cap = *snap.m_cap;
    p.n_cap = snap.n_cap;
    p.x_c = snap.x_c;
    p.tau = tau;
    p.gamma = gamma_from_capital(p.m_cap, p.n_cap, p.x_c);
    p.eta = 1.0 + (p.gamma - 1.0) / tau;
    p.delta_m = revenue(p.gamma, tau, p.n_cap, p.x_c);
    return p;
}

std::vector<ScheduleRow> schedule_table(const TaxPolicy& policy,
                                        std::span<const double> grid) {
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw domain_error("schedule_table: grid must be sorted ascending");
    if (!grid.empty() && grid.front() < policy.x_c)
        throw domain_error("schedule_table: grid points must be >= x_c");
    std::vector<ScheduleRow> rows;
    rows.reserve(grid.size());
    for (double x : grid)
        rows.push_back({x, tax_rate(x, policy.tau, policy.x_c),
                        post_tax_income(x, policy.tau, policy.x_c)});
    return rows;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0 && hi > lo))
        throw domain_error("geometric_grid: need 0 < lo < hi");
    if (n < 2) throw domain_error("geometric_grid: need at least 2 points");
    std::vector<double> out(n);
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo * std::exp(step * static_cast<double>(i));
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace paretax
