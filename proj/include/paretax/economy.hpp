#pragma once

#include <optional>
#include <string>
#include <vector>

namespace paretax {

// Mean income of the additive class, m_lab / n_lab.
double mean_labor(double m_lab, double n_lab);

// Pareto exponent implied by the class aggregates:
//   gamma = (2 m_cap - n_cap x_c) / (m_cap - n_cap x_c),
// defined (and > 2) only when m_cap > n_cap x_c.
double gamma_from_capital(double m_cap, double n_cap, double x_c);

// Inverse of gamma_from_capital: total capital income implied by an exponent,
//   m_cap = n_cap x_c (gamma-1)/(gamma-2), gamma > 2.
double capital_from_gamma(double gamma, double n_cap, double x_c);

// Fit-implied capital mass minus declared mass. Positive values point to
// undeclared income; negative values are returned as-is.
double evasion_gap(double gamma_fit, double n_cap, double x_c,
                   double m_declared);

// Capital income such that m_cap/(m_cap + m_lab) equals the given share of
// total income; share in (0, 1).
double capital_share_estimate(double m_lab, double share);

// Share used when a scenario provides neither a declared m_cap nor a share.
inline constexpr double default_capital_share = 0.26;

// Aggregate class totals of one tax year.
struct EconomySnapshot {
    double n_tot = 0;
    double n_lab = 0;
    double n_cap = 0;
    double m_lab = 0;                // EUR
    std::optional<double> m_cap;     // EUR; may be estimated later
    double x_pov = 0;                // EUR
    double x_c = 0;                  // EUR

    // Checks count additivity, threshold ordering and (when m_cap is present)
    // m_cap > n_cap x_c. Throws domain_error / infeasible_error.
    void validate() const;

    double mean_labor() const;
    // x_c in units of the labor-class mean income.
    double crossover_ratio() const;
    // Soft consistency findings; empirically the crossover sits at 3-4 mean
    // incomes, so a ratio outside [3, 4] is flagged but accepted.
    std::vector<std::string> warnings() const;
};

// The three routes to m_cap, reported side by side.
struct CapitalEstimates {
    std::optional<double> declared;
    double share_implied = 0;
    std::optional<double> fit_implied;
};

CapitalEstimates estimate_capital(const EconomySnapshot& snap,
                                  double share = default_capital_share,
                                  std::optional<double> gamma_fit = {});

// Declared m_cap when present, otherwise the share-implied estimate.
double resolved_capital(const EconomySnapshot& snap,
                        double share = default_capital_share);

}  // namespace paretax
