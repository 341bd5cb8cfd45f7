#include "annih/integrals.hpp"

#include "annih/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace annih {

namespace {

void check_window(double beta, DeltaWindow w) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_input("beta must lie in [0, 1]");
    if (!(w.delta > 0.0 && w.delta <= std::numbers::pi / 2 + 1e-15))
        throw invalid_input("delta window must satisfy 0 < delta <= pi/2");
}

// (1/beta) ln((1 + beta*s)/(1 - beta*s)); series branch avoids cancellation
// for beta*s < 1e-6 and covers beta = 0.
double log_ratio_over_beta(double beta, double s) {
    const double x = beta * s;
    if (x >= 1.0)
        throw degenerate_kinematics("beta*sin(delta) >= 1");
    if (x < 1e-6) return 2.0 * s * (1.0 + x * x / 3.0);
    return (std::log1p(x) - std::log1p(-x)) / beta;
}

} // namespace

double int_theta_1(double beta, DeltaWindow w) {
    check_window(beta, w);
    return log_ratio_over_beta(beta, std::sin(w.delta));
}

double int_theta_2(double beta, DeltaWindow w) {
    check_window(beta, w);
    const double s = std::sin(w.delta);
    const double x = beta * s;
    if (x >= 1.0)
        throw degenerate_kinematics("beta*sin(delta) >= 1");
    return s / (1.0 - x * x) + 0.5 * log_ratio_over_beta(beta, s);
}

double f_delta(double beta, double chi1, double chi2, DeltaWindow w) {
    const double i1 = int_theta_1(beta, w);
    const double i2 = int_theta_2(beta, w);
    const double s = std::sin(w.delta);
    const double c1 = std::cos(chi1);
    const double c2 = std::cos(chi2);
    const double g = std::cos(chi1 - chi2) - 2.0 * c1 * c2;
    const double u = 1.0 - beta * beta;
    return (1.0 - 4.0 * u * c1 * c2 * g) * i1
         - 4.0 * u * u * c1 * c1 * c2 * c2 * i2
         - 2.0 * s * g * g;
}

double n_delta(double beta, DeltaWindow w) {
    const double i1 = int_theta_1(beta, w);
    const double s = std::sin(w.delta);
    const double x = beta * s;
    const double u = 1.0 - beta * beta;
    return (4.0 + 4.0 * u - 2.0 * u * u) * i1
         - 4.0 * u * u * s / (1.0 - x * x)
         - 4.0 * s;
}

double n_delta_sum(double beta, double chi1, double chi2, DeltaWindow w) {
    constexpr double h = std::numbers::pi / 2;
    return f_delta(beta, chi1, chi2, w) + f_delta(beta, chi1 + h, chi2, w)
         + f_delta(beta, chi1, chi2 + h, w) + f_delta(beta, chi1 + h, chi2 + h, w);
}

std::pair<double, double> marginal_sums_delta(double beta, double chi1, double chi2,
                                              DeltaWindow w) {
    const double i1 = int_theta_1(beta, w);
    const double s = std::sin(w.delta);
    const double x = beta * s;
    const double u = 1.0 - beta * beta;
    const double b2 = beta * beta;
    const double c1sq = std::cos(chi1) * std::cos(chi1);
    const double c2sq = std::cos(chi2) * std::cos(chi2);
    const double first = (2.0 + 2.0 * (1.0 - b2 * b2) * c1sq) * i1
                       - 4.0 * u * u * c1sq * s / (1.0 - x * x) - 2.0 * s;
    const double second = (2.0 + 2.0 * (1.0 - b2 * b2) * c2sq) * i1
                        - 4.0 * u * u * c2sq * s / (1.0 - x * x) - 2.0 * s;
    return {first, second};
}

std::pair<double, double> phi_integrals(double chi1, double chi2) {
    const double cd = std::cos(chi1 - chi2);
    return {std::numbers::pi * cd, std::numbers::pi / 4.0 * (1.0 + 2.0 * cd * cd)};
}

double a_of_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_input("beta must lie in [0, 1]");
    if (beta == 1.0) return std::numeric_limits<double>::infinity();
    const double u = 1.0 - beta * beta;
    const double lb = log_ratio_over_beta(beta, 1.0);
    return (4.0 * (2.0 - beta * beta) - u * u) / 4.0 * lb - 1.5 + 0.5 * beta * beta;
}

double b_of_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_input("beta must lie in [0, 1]");
    if (beta == 1.0) return 0.0;
    const double u = 1.0 - beta * beta;
    const double lb = log_ratio_over_beta(beta, 1.0);
    return -u * (1.0 + 0.5 * u * lb);
}

double n_of_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_input("beta must lie in [0, 1]");
    if (beta == 1.0) return std::numeric_limits<double>::infinity();
    const double u = 1.0 - beta * beta;
    const double lb = log_ratio_over_beta(beta, 1.0);
    // Direct closed form; equals 2 [2 A(beta) + B(beta)], checked by the oracles.
    return (4.0 * (2.0 - beta * beta) - 2.0 * u * u) * lb - 8.0 + 4.0 * beta * beta;
}

} // namespace annih
