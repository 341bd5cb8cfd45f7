#pragma once

#include "annih/closed_form.hpp"

#include <array>
#include <span>
#include <vector>

namespace annih {

/// The four analyzer angles entering the Bell-CH statistic.
struct AngleQuad {
    double chi1, chi2, chi1p, chi2p;
};

enum class Verdict { WithinLHV, ViolatesAbove, ViolatesBelow };

/// S and its six signed contributions:
/// +P(chi1,chi2) -P(chi1,chi2') +P(chi1',chi2) +P(chi1',chi2') -P(chi1',-) -P(-,chi2).
struct SReport {
    double s;
    std::array<double, 6> terms;
    Process process;
    double beta;
    Verdict verdict;
};

/// Local-hidden-variable verdict for -1 <= S <= 0, with a 1e-12 boundary
/// tolerance (exact boundary counts as WithinLHV).
Verdict classify(double s);

SReport s_statistic(Process process, double beta, const AngleQuad& q);

std::vector<SReport> s_beta_scan(Process process, const AngleQuad& q,
                                 std::span<const double> betas);

} // namespace annih
