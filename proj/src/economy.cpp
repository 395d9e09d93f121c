#include "paretax/economy.hpp"

#include <cmath>

#include "paretax/errors.hpp"
#include "paretax/numeric.hpp"
#include "paretax/units.hpp"

namespace paretax {

double mean_labor(double m_lab, double n_lab) {
    if (!(n_lab > 0.0)) throw domain_error("mean_labor: n_lab must be > 0");
    if (!(m_lab >= 0.0)) throw domain_error("mean_labor: m_lab must be >= 0");
    return m_lab / n_lab;
}

double gamma_from_capital(double m_cap, double n_cap, double x_c) {
    const double floor = n_cap * x_c;
    if (!(floor > 0.0))
        throw domain_error("gamma_from_capital: n_cap and x_c must be > 0");
    if (!(m_cap > floor))
        throw infeasible_error(
            "gamma_from_capital: m_cap must exceed n_cap*x_c = " +
            std::to_string(units::to_geur(floor)) +
            " GEUR, otherwise no Pareto tail with gamma > 2 exists");
    return (2.0 * m_cap - floor) / (m_cap - floor);
}

double capital_from_gamma(double gamma, double n_cap, double x_c) {
    if (!(gamma > 2.0))
        throw domain_error("capital_from_gamma: gamma must be > 2, got " +
                           std::to_string(gamma));
    if (!(n_cap >= 0.0 && x_c > 0.0))
        throw domain_error("capital_from_gamma: need n_cap >= 0 and x_c > 0");
    return n_cap * x_c * (gamma - 1.0) / (gamma - 2.0);
}

double evasion_gap(double gamma_fit, double n_cap, double x_c,
                   double m_declared) {
    if (!(m_declared >= 0.0))
        throw domain_error("evasion_gap: m_declared must be >= 0");
    return capital_from_gamma(gamma_fit, n_cap, x_c) - m_declared;
}

double capital_share_estimate(double m_lab, double share) {
    if (!(share > 0.0 && share < 1.0))
        throw domain_error("capital_share_estimate: share must be in (0, 1)");
    if (!(m_lab >= 0.0))
        throw domain_error("capital_share_estimate: m_lab must be >= 0");
    return m_lab * share / (1.0 - share);
}

void EconomySnapshot::validate() const {
    if (!(n_lab >= 0.0 && n_cap >= 0.0 && n_tot >= 0.0))
        throw domain_error("EconomySnapshot: counts must be >= 0");
    if (relative_error(n_lab + n_cap, n_tot) > 1e-9)
        throw domain_error("EconomySnapshot: n_lab + n_cap must equal n_tot");
    if (!(x_pov > 0.0 && x_pov < x_c))
        throw domain_error("EconomySnapshot: need 0 < x_pov < x_c");
    if (!(m_lab >= 0.0))
        throw domain_error("EconomySnapshot: m_lab must be >= 0");
    if (m_cap && !(*m_cap > n_cap * x_c))
        throw infeasible_error(
            "EconomySnapshot: m_cap must exceed n_cap*x_c = " +
            std::to_string(units::to_geur(n_cap * x_c)) + " GEUR");
}

double EconomySnapshot::mean_labor() const {
    return paretax::mean_labor(m_lab, n_lab);
}

double EconomySnapshot::crossover_ratio() const { return x_c / mean_labor(); }

std::vector<std::string> EconomySnapshot::warnings() const {
    std::vector<std::string> out;
    const double ratio = crossover_ratio();
    if (ratio < 3.0 || ratio > 4.0)
        out.push_back("crossover x_c is " + std::to_string(ratio) +
                      " labor-class mean incomes; 3-4 is typical");
    return out;
}

CapitalEstimates estimate_capital(const EconomySnapshot& snap, double share,
                                  std::optional<double> gamma_fit) {
    CapitalEstimates est;
    est.declared = snap.m_cap;
    est.share_implied = capital_share_estimate(snap.m_lab, share);
    if (gamma_fit)
        est.fit_implied = capital_from_gamma(*gamma_fit, snap.n_cap, snap.x_c);
    return est;
}

double resolved_capital(const EconomySnapshot& snap, double share) {
    if (snap.m_cap) return *snap.m_cap;
    return capital_share_estimate(snap.m_lab, share);
}

}  // namespace paretax
