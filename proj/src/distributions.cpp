#include "paretax/distributions.hpp"

#include <cmath>
#include <string>

#include "paretax/errors.hpp"
#include "paretax/random.hpp"

namespace paretax {

LaborModel::LaborModel(double x_bar, double n_lab)
    : x_bar_(x_bar), n_lab_(n_lab) {
    if (!(x_bar > 0.0))
        throw domain_error("LaborModel: x_bar must be > 0, got " +
                           std::to_string(x_bar));
    if (!(n_lab >= 0.0))
        throw domain_error("LaborModel: n_lab must be >= 0");
}

double LaborModel::density(double x) const {
    if (!(x >= 0.0))
        throw domain_error("LaborModel::density: x must be >= 0");
    return n_lab_ / x_bar_ * std::exp(-x / x_bar_);
}

double LaborModel::cdf(double x) const {
    if (!(x >= 0.0)) throw domain_error("LaborModel::cdf: x must be >= 0");
    return -std::expm1(-x / x_bar_);
}

double LaborModel::quantile(double q) const {
    if (!(q >= 0.0 && q < 1.0))
        throw domain_error("LaborModel::quantile: q must be in [0, 1)");
    return -x_bar_ * std::log1p(-q);
}

CapitalModel::CapitalModel(double gamma, double x_c, double n_cap)
    : gamma_(gamma), x_c_(x_c), n_cap_(n_cap) {
    if (!(gamma > 2.0))
        throw domain_error("CapitalModel: gamma must be > 2, got " +
                           std::to_string(gamma));
    if (!(x_c > 0.0)) throw domain_error("CapitalModel: x_c must be > 0");
    if (!(n_cap >= 0.0)) throw domain_error("CapitalModel: n_cap must be >= 0");
}

double CapitalModel::density(double x) const {
    if (!(x >= x_c_))
        throw domain_error("CapitalModel::density: x must be >= x_c");
    return (gamma_ - 1.0) * n_cap_ / x_c_ * std::pow(x / x_c_, -gamma_);
}

double CapitalModel::cdf(double x) const {
    if (!(x >= x_c_)) throw domain_error("CapitalModel::cdf: x must be >= x_c");
    return 1.0 - std::pow(x / x_c_, 1.0 - gamma_);
}

double CapitalModel::quantile(double q) const {
    if (!(q >= 0.0 && q < 1.0))
        throw domain_error("CapitalModel::quantile: q must be in [0, 1)");
    return x_c_ * std::pow(1.0 - q, 1.0 / (1.0 - gamma_));
}

double CapitalModel::total_income() const {
    return n_cap_ * x_c_ * (gamma_ - 1.0) / (gamma_ - 2.0);
}

std::vector<double> sample(const LaborModel& m, std::size_t n,
                           std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(n);
    for (double& x : out) x = -m.x_bar() * std::log1p(-rng.uniform01());
    return out;
}

std::vector<double> sample(const CapitalModel& m, std::size_t n,
                           std::uint64_t seed) {
    Rng rng(seed);
    const double inv_exp = 1.0 / (1.0 - m.gamma());
    std::vector<double> out(n);
    for (double& x : out)
        x = m.x_c() * std::pow(1.0 - rng.uniform01(), inv_exp);
    return out;
}

}  // namespace paretax
