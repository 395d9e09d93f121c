#pragma once

#include <span>
#include <vector>

#include "paretax/economy.hpp"

namespace paretax {

// A validated capital-income tax: raises delta_m from the Pareto(gamma) class
// above x_c and leaves a Pareto(eta) class behind. tau = (gamma-1)/(eta-1).
struct TaxPolicy {
    double delta_m = 0;  // EUR raised from the capital class
    double gamma = 0;    // pre-tax exponent
    double eta = 0;      // post-tax exponent, eta >= gamma
    double tau = 1;      // in (0, 1]; 1 iff delta_m == 0
    double x_c = 0;      // EUR, taxation threshold
    double n_cap = 0;
    double m_cap = 0;    // EUR, pre-tax capital income
};

// Money needed to top all labor incomes below x_pov up to x_pov:
//   m_lab [ x_pov/x_bar - (1 - exp(-x_pov/x_bar)) ].
double poverty_gap(double x_pov, double x_bar, double m_lab);

// Exponent of the post-tax Pareto tail once delta_m has been levied; equals
// gamma_from_capital(m_cap - delta_m, ...). Requires
// 0 <= delta_m < m_cap - n_cap x_c.
double post_tax_exponent(double m_cap, double delta_m, double n_cap,
                         double x_c);

// (gamma-1)/(eta-1), in (0, 1]; eta >= gamma > 1.
double tau_parameter(double gamma, double eta);

// Net income map X = x_c^{1-tau} x^tau, the geometric average of x and x_c.
// Continuous at x_c, strictly increasing, X(x) <= x.
double post_tax_income(double x, double tau, double x_c);

// dX/dx = tau X / x, used for change-of-variable checks.
double post_tax_income_derivative(double x, double tau, double x_c);

// Average rate T(x) = 1 - (x_c/x)^{1-tau}; zero at x_c, increasing to 1.
double tax_rate(double x, double tau, double x_c);

// Total levy implied by (gamma, tau):
//   m_cap - n_cap x_c (gamma-1)/(gamma-1-tau),
// finite only when gamma - tau > 1.
double revenue(double gamma, double tau, double n_cap, double x_c);

// Largest levy the capital class can bear, m_cap - n_cap x_c (open bound).
double max_feasible_levy(double m_cap, double n_cap, double x_c);

// Flat-tax scale on labor income: x -> alpha x with alpha = 1 - delta_m/m_lab
// maps Exponential(x_bar) onto Exponential(alpha x_bar) and raises delta_m.
double flat_tax_alpha(double delta_m, double m_lab);

// Compose gamma, eta, tau from a snapshot with resolved m_cap and a revenue
// target. Throws infeasible_error naming the maximum feasible delta_m.
TaxPolicy build_policy(const EconomySnapshot& snap, double delta_m);

// Same, but parameterized by tau directly; delta_m becomes the implied levy.
TaxPolicy build_policy_from_tau(const EconomySnapshot& snap, double tau);

struct ScheduleRow {
    double income = 0;    // EUR
    double rate = 0;      // dimensionless fraction
    double post_tax = 0;  // EUR
};

// Pointwise rate schedule over a sorted grid of incomes >= x_c.
std::vector<ScheduleRow> schedule_table(const TaxPolicy& policy,
                                        std::span<const double> grid);

// n geometrically spaced points from lo to hi inclusive; n >= 2, hi > lo > 0.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

}  // namespace paretax
