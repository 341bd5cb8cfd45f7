#include "annih/closed_form.hpp"

#include "annih/error.hpp"
#include "annih/integrals.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace annih {

namespace {

constexpr double half_pi = std::numbers::pi / 2;

void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_input("beta must lie in [0, 1]");
}

// Probabilities may undershoot/overshoot [0,1] only at round-off level;
// anything larger indicates a formula bug and must not be masked.
double clamp_probability(double raw) {
    if (raw < -1e-12 || raw > 1.0 + 1e-12)
        throw internal_error("computed probability outside [0,1] beyond round-off");
    return raw < 0.0 ? 0.0 : (raw > 1.0 ? 1.0 : raw);
}

constexpr double default_deltas[] = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3,
                                     3e-4, 1e-4, 3e-5, 1e-5, 3e-6, 1e-6};

} // namespace

JointProbability joint_p1(double beta, double chi1, double chi2) {
    check_beta(beta);
    const double b2 = beta * beta;
    const double g = std::cos(chi1 - chi2) - 2.0 * b2 * std::cos(chi1) * std::cos(chi2);
    const double raw = (1.0 - g * g) / (2.0 * (1.0 + 2.0 * b2 * (1.0 - b2)));
    return {clamp_probability(raw), Process::One, beta, chi1, chi2};
}

MarginalProbability marginal_p1(double beta, double chi, Which which) {
    check_beta(beta);
    const double b2 = beta * beta;
    const double c = std::cos(chi);
    const double raw = (1.0 + 4.0 * b2 * (1.0 - b2) * c * c)
                     / (2.0 * (1.0 + 2.0 * b2 * (1.0 - b2)));
    return {clamp_probability(raw), which, Process::One, beta, chi};
}

JointProbability joint_p2(double beta, double chi1, double chi2) {
    check_beta(beta);
    if (beta == 1.0)
        return {0.25, Process::Two, beta, chi1, chi2};
    const double a = a_of_beta(beta);
    const double b = b_of_beta(beta);
    const double cd = std::cos(chi1 - chi2);
    const double raw = (a + b * cd * cd) / (2.0 * (2.0 * a + b));
    return {clamp_probability(raw), Process::Two, beta, chi1, chi2};
}

MarginalProbability marginal_p2(double beta, double chi, Which which) {
    check_beta(beta);
    return {0.5, which, Process::Two, beta, chi};
}

JointProbability joint(Process process, double beta, double chi1, double chi2) {
    return process == Process::One ? joint_p1(beta, chi1, chi2) : joint_p2(beta, chi1, chi2);
}

MarginalProbability marginal(Process process, double beta, double chi, Which which) {
    return process == Process::One ? marginal_p1(beta, chi, which)
                                   : marginal_p2(beta, chi, which);
}

std::array<double, 4> outcome_quadruple(Process process, double beta, double chi1,
                                        double chi2) {
    return {joint(process, beta, chi1, chi2).value,
            joint(process, beta, chi1 + half_pi, chi2).value,
            joint(process, beta, chi1, chi2 + half_pi).value,
            joint(process, beta, chi1 + half_pi, chi2 + half_pi).value};
}

DeltaLimitResult joint_p1_via_delta_limit(double beta, double chi1, double chi2,
                                          std::span<const double> deltas) {
    check_beta(beta);
    if (deltas.empty()) deltas = default_deltas;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double value = prev;
    int evals = 0;
    double last = 0.0;
    for (double d : deltas) {
        if (!(d > 0.0))
            throw invalid_input("delta sequence entries must be positive");
        const DeltaWindow w{d};
        value = f_delta(beta, chi1, chi2, w) / n_delta(beta, w);
        ++evals;
        last = d;
        if (std::isfinite(prev) && std::abs(value - prev) < 1e-8)
            return {value, true, evals, d};
        prev = value;
    }
    return {value, false, evals, last};
}

double statistical_dependence_gap(Process process, double beta, double chi1, double chi2) {
    const double j = joint(process, beta, chi1, chi2).value;
    const double m1 = marginal(process, beta, chi1, Which::First).value;
    const double m2 = marginal(process, beta, chi2, Which::Second).value;
    return j - m1 * m2;
}

} // namespace annih
