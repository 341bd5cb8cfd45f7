#include "annih/bell.hpp"

namespace annih {

Verdict classify(double s) {
    if (s > 1e-12) return Verdict::ViolatesAbove;
    if (s < -1.0 - 1e-12) return Verdict::ViolatesBelow;
    return Verdict::WithinLHV;
}

SReport s_statistic(Process process, double beta, const AngleQuad& q) {
    SReport r;
    r.process = process;
    r.beta = beta;
    r.terms = {
        +joint(process, beta, q.chi1, q.chi2).value,
        -joint(process, beta, q.chi1, q.chi2p).value,
        +joint(process, beta, q.chi1p, q.chi2).value,
        +joint(process, beta, q.chi1p, q.chi2p).value,
        -marginal(process, beta, q.chi1p, Which::First).value,
        -marginal(process, beta, q.chi2, Which::Second).value,
    };
    double s = 0.0;
    for (double t : r.terms) s += t;
    r.s = s;
    r.verdict = classify(s);
    return r;
}

std::vector<SReport> s_beta_scan(Process process, const AngleQuad& q,
                                 std::span<const double> betas) {
    std::vector<SReport> out;
    out.reserve(betas.size());
    for (double b : betas) out.push_back(s_statistic(process, b, q));
    return out;
}

} // namespace annih
