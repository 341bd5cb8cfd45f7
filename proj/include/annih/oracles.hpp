#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annih {

/// One verification check: the largest deviation observed against its bound.
struct CheckResult {
    std::string name;
    double max_deviation;
    double tolerance;
    bool pass;
};

/// Analytic theta/phi integrals and the A/B/N normalization identities against
/// adaptive quadrature.
std::vector<CheckResult> oracle_integrals();

/// F_delta/N_delta limit against the Process-1 closed form on a 5x5x5 grid.
std::vector<CheckResult> oracle_delta_limit();

/// Covariant, c.m. and process-specialized evaluations of the relative
/// probability against each other on random parameter tuples.
std::vector<CheckResult> oracle_amplitude(int tuples_per_process = 1000,
                                          std::uint64_t seed = 12345);

/// 2-D (theta, phi) quadrature of the Process-2 integrand: linearity in
/// cos^2(chi1-chi2) and agreement of the normalized probability with the
/// closed form.
std::vector<CheckResult> oracle_process2_angular(int points = 25,
                                                 std::uint64_t seed = 777);

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace annih
