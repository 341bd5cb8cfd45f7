#include "annih/montecarlo.hpp"

#include "annih/error.hpp"

#include <cmath>

namespace annih {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01_at(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

std::vector<Outcome> sample_outcomes(Process process, double beta, double chi1,
                                     double chi2, std::size_t n, RngSeed seed) {
    if (n < 1)
        throw invalid_input("sample count must be >= 1");
    const std::array<double, 4> p = outcome_quadruple(process, beta, chi1, chi2);
    // cumulative thresholds; the last is pinned to 1 so every u lands somewhere
    double cum[4] = {p[0], p[0] + p[1], p[0] + p[1] + p[2], 1.0};
    std::vector<Outcome> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = uniform01_at(seed.value, i);
        int k = 0;
        while (k < 3 && u >= cum[k]) ++k;
        out.push_back(static_cast<Outcome>(k));
    }
    return out;
}

McJointEstimate estimate_joint(Process process, double beta, double chi1, double chi2,
                               std::size_t n, RngSeed seed) {
    const auto samples = sample_outcomes(process, beta, chi1, chi2, n, seed);
    std::array<std::size_t, 4> counts{};
    for (Outcome o : samples) ++counts[static_cast<int>(o)];
    McJointEstimate est;
    est.n = n;
    for (int k = 0; k < 4; ++k) {
        est.p_hat[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
        est.se[k] = std::sqrt(est.p_hat[k] * (1.0 - est.p_hat[k]) / static_cast<double>(n));
    }
    return est;
}

McEstimate estimate_s(Process process, double beta, const AngleQuad& q,
                      std::size_t n_per_setting, RngSeed seed) {
    if (n_per_setting < 100)
        throw invalid_input("n_per_setting must be >= 100");
    const double settings[4][2] = {{q.chi1, q.chi2},
                                   {q.chi1, q.chi2p},
                                   {q.chi1p, q.chi2},
                                   {q.chi1p, q.chi2p}};
    McEstimate est;
    est.n_per_setting = n_per_setting;
    est.seed = seed.value;
    est.shards = 1;
    const double nd = static_cast<double>(n_per_setting);
    double var = 0.0;

    for (int k = 0; k < 4; ++k) {
        const RngSeed stream{splitmix64_at(seed.value, static_cast<std::uint64_t>(k))};
        const auto samples =
            sample_outcomes(process, beta, settings[k][0], settings[k][1], n_per_setting, stream);
        std::size_t hits = 0;
        for (Outcome o : samples)
            if (o == Outcome::AlignedAligned) ++hits;
        est.joint_hat[k] = static_cast<double>(hits) / nd;
        var += est.joint_hat[k] * (1.0 - est.joint_hat[k]) / nd;
    }

    // Marginal settings: first photon at chi1' (partner unmeasured, recorded
    // but ignored), second photon at chi2.
    {
        const RngSeed stream{splitmix64_at(seed.value, 4)};
        const auto samples =
            sample_outcomes(process, beta, q.chi1p, q.chi2, n_per_setting, stream);
        std::size_t hits = 0;
        for (Outcome o : samples)
            if (o == Outcome::AlignedAligned || o == Outcome::AlignedOrth) ++hits;
        est.marginal_hat[0] = static_cast<double>(hits) / nd;
        var += est.marginal_hat[0] * (1.0 - est.marginal_hat[0]) / nd;
    }
    {
        const RngSeed stream{splitmix64_at(seed.value, 5)};
        const auto samples =
            sample_outcomes(process, beta, q.chi1, q.chi2, n_per_setting, stream);
        std::size_t hits = 0;
        for (Outcome o : samples)
            if (o == Outcome::AlignedAligned || o == Outcome::OrthAligned) ++hits;
        est.marginal_hat[1] = static_cast<double>(hits) / nd;
        var += est.marginal_hat[1] * (1.0 - est.marginal_hat[1]) / nd;
    }

    est.s_hat = est.joint_hat[0] - est.joint_hat[1] + est.joint_hat[2] + est.joint_hat[3]
              - est.marginal_hat[0] - est.marginal_hat[1];
    est.se = std::sqrt(var);
    return est;
}

} // namespace annih
