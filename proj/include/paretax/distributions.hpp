#pragma once

#include <cstdint>
#include <vector>

namespace paretax {

// Exponential (Boltzmann-Gibbs) income distribution of the additive class.
// The density integrates to n_lab over [0, inf); the normalized law has mean
// x_bar exactly.
class LaborModel {
public:
    // x_bar > 0 (EUR), n_lab >= 0 (person mass, a continuum normalization).
    LaborModel(double x_bar, double n_lab);

    double x_bar() const { return x_bar_; }
    double n_lab() const { return n_lab_; }

    // (n_lab/x_bar) exp(-x/x_bar), persons per EUR; x >= 0.
    double density(double x) const;
    // Normalized CDF 1 - exp(-x/x_bar).
    double cdf(double x) const;
    // Inverse CDF, q in [0, 1).
    double quantile(double q) const;
    double total_income() const { return n_lab_ * x_bar_; }

private:
    double x_bar_;
    double n_lab_;
};

// Pareto income distribution of the multiplicative class above x_c.
class CapitalModel {
public:
    // gamma > 2 (finite total income), x_c > 0 (EUR), n_cap >= 0.
    CapitalModel(double gamma, double x_c, double n_cap);

    double gamma() const { return gamma_; }
    double x_c() const { return x_c_; }
    double n_cap() const { return n_cap_; }

    // ((gamma-1) n_cap / x_c) (x/x_c)^{-gamma}, persons per EUR; x >= x_c.
    double density(double x) const;
    // Normalized CDF 1 - (x/x_c)^{1-gamma}; x >= x_c.
    double cdf(double x) const;
    // Inverse CDF x_c (1-q)^{1/(1-gamma)}, q in [0, 1).
    double quantile(double q) const;
    // n_cap x_c (gamma-1)/(gamma-2).
    double total_income() const;

private:
    double gamma_;
    double x_c_;
    double n_cap_;
};

// Seeded i.i.d. draws by inverse CDF; identical seeds give identical output.
std::vector<double> sample(const LaborModel& m, std::size_t n,
                           std::uint64_t seed);
std::vector<double> sample(const CapitalModel& m, std::size_t n,
                           std::uint64_t seed);

}  // namespace paretax
