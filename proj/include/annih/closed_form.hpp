#pragma once

#include "annih/amplitude.hpp"

#include <array>
#include <span>

namespace annih {

enum class Which { First, Second };

/// Joint conditional probability that both photons pass analyzers at chi1, chi2.
struct JointProbability {
    double value;
    Process process;
    double beta;
    double chi1, chi2;
};

/// Conditional probability for one photon when the other is unmeasured.
struct MarginalProbability {
    double value;
    Which which;
    Process process;
    double beta;
    double chi;
};

/// Process 1: [1 - (cos(chi1-chi2) - 2 beta^2 cos chi1 cos chi2)^2]
///            / (2 [1 + 2 beta^2 (1 - beta^2)]).
JointProbability joint_p1(double beta, double chi1, double chi2);

/// Process 1 marginal: [1 + 4 beta^2 (1-beta^2) cos^2 chi]
///                     / (2 [1 + 2 beta^2 (1 - beta^2)]).
MarginalProbability marginal_p1(double beta, double chi, Which which);

/// Process 2: [A + B cos^2(chi1-chi2)] / (2 [2A + B]); 1/4 at beta = 1.
JointProbability joint_p2(double beta, double chi1, double chi2);

/// Process 2 marginal: exactly 1/2 for all inputs.
MarginalProbability marginal_p2(double beta, double chi, Which which);

JointProbability joint(Process process, double beta, double chi1, double chi2);
MarginalProbability marginal(Process process, double beta, double chi, Which which);

/// The four joint probabilities over the outcome settings
/// (chi1,chi2), (chi1+pi/2,chi2), (chi1,chi2+pi/2), (chi1+pi/2,chi2+pi/2).
std::array<double, 4> outcome_quadruple(Process process, double beta, double chi1,
                                        double chi2);

struct DeltaLimitResult {
    double estimate;
    bool converged;
    int evaluations;
    double last_delta;
};

/// Evaluate F_delta / N_delta along a decreasing delta sequence, declaring
/// convergence when successive values differ by less than 1e-8. The default
/// sequence is geometric from 1e-1 down to 1e-6.
DeltaLimitResult joint_p1_via_delta_limit(double beta, double chi1, double chi2,
                                          std::span<const double> deltas = {});

/// P(chi1, chi2) - P(chi1, -) P(-, chi2).
double statistical_dependence_gap(Process process, double beta, double chi1, double chi2);

} // namespace annih
