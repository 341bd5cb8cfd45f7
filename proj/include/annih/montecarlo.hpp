#pragma once

#include "annih/bell.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace annih {

struct RngSeed {
    std::uint64_t value;
};

/// Which member of the four-outcome quadruple occurred, in the fixed order
/// (chi1,chi2), (chi1+pi/2,chi2), (chi1,chi2+pi/2), (chi1+pi/2,chi2+pi/2).
enum class Outcome : int {
    AlignedAligned = 0,
    OrthAligned = 1,
    AlignedOrth = 2,
    OrthOrth = 3,
};

/// Counter-based uniform stream: the splitmix64 output sequence for the given
/// seed, random-access by index, mapped to [0, 1) with 53 bits. Identical
/// across platforms; this is the reproducibility contract for all sampling.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);
double uniform01_at(std::uint64_t seed, std::uint64_t index);

/// i.i.d. draws from the exact four-outcome distribution at one analyzer
/// setting. Deterministic given the seed.
std::vector<Outcome> sample_outcomes(Process process, double beta, double chi1,
                                     double chi2, std::size_t n, RngSeed seed);

/// Empirical four-outcome distribution at one setting; p_hat sums to 1 exactly
/// (counts over n), se are binomial standard errors.
struct McJointEstimate {
    std::size_t n;
    std::array<double, 4> p_hat;
    std::array<double, 4> se;
};

McJointEstimate estimate_joint(Process process, double beta, double chi1, double chi2,
                               std::size_t n, RngSeed seed);

/// Monte Carlo estimate of S from four joint settings plus two marginal
/// settings, each an independent derived stream of the master seed.
/// shards is part of the reproducibility key; sampling here is unsharded.
struct McEstimate {
    std::size_t n_per_setting;
    std::array<double, 4> joint_hat;    // aligned-aligned frequency per joint setting
    std::array<double, 2> marginal_hat; // P(chi1',-) and P(-,chi2)
    double s_hat;
    double se; // propagated from the six binomial terms
    std::uint64_t seed;
    int shards = 1;
};

McEstimate estimate_s(Process process, double beta, const AngleQuad& q,
                      std::size_t n_per_setting, RngSeed seed);

} // namespace annih
