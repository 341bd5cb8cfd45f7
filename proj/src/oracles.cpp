#include "annih/oracles.hpp"

#include "annih/amplitude.hpp"
#include "annih/closed_form.hpp"
#include "annih/integrals.hpp"
#include "annih/kinematics.hpp"
#include "annih/montecarlo.hpp"
#include "annih/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace annih {

namespace {

constexpr double pi = std::numbers::pi;

double rel_dev(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
    return std::abs(a - b) / scale;
}

CheckResult make_check(std::string name, double max_dev, double tol) {
    return {std::move(name), max_dev, tol, max_dev < tol};
}

} // namespace

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> oracle_integrals() {
    std::vector<CheckResult> out;
    const QuadratureSpec tight{1e-14, 1e-13, 20000};

    const double betas[10] = {0.0, 0.1, 0.2, 0.3, 0.45, 0.6, 0.7, 0.8, 0.9, 0.99};
    const double deltas[5] = {0.05, 0.2, 0.5, 1.0, pi / 2};

    double dev1 = 0.0, dev2 = 0.0;
    for (double b : betas)
        for (double d : deltas) {
            auto integrand1 = [b](double t) {
                const double c = std::cos(t);
                return std::sin(t) / (1.0 - b * b * c * c);
            };
            auto integrand2 = [b](double t) {
                const double c = std::cos(t);
                const double den = 1.0 - b * b * c * c;
                return std::sin(t) / (den * den);
            };
            const double q1 = quad_adaptive(integrand1, pi / 2 - d, pi / 2 + d, tight);
            const double q2 = quad_adaptive(integrand2, pi / 2 - d, pi / 2 + d, tight);
            dev1 = std::max(dev1, rel_dev(q1, int_theta_1(b, {d})));
            dev2 = std::max(dev2, rel_dev(q2, int_theta_2(b, {d})));
        }
    out.push_back(make_check("theta integral 1/(1-b^2 cos^2) vs quadrature", dev1, 1e-10));
    out.push_back(make_check("theta integral squared denominator vs quadrature", dev2, 1e-10));

    double devp = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 5; ++j) {
            const double chi1 = 0.11 + 0.31 * i;
            const double chi2 = 0.07 + 0.59 * j;
            auto f1 = [=](double p) { return std::cos(p + chi1) * std::cos(p + chi2); };
            auto f2 = [=](double p) {
                const double v = std::cos(p + chi1) * std::cos(p + chi2);
                return v * v;
            };
            const auto [a1, a2] = phi_integrals(chi1, chi2);
            devp = std::max(devp, std::abs(quad_adaptive(f1, 0, 2 * pi, tight) - a1));
            devp = std::max(devp, rel_dev(quad_adaptive(f2, 0, 2 * pi, tight), a2));
        }
    out.push_back(make_check("phi integrals vs quadrature", devp, 1e-10));

    double devn = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double b = i / 100.0;
        devn = std::max(devn,
                        rel_dev(n_of_beta(b), 2.0 * (2.0 * a_of_beta(b) + b_of_beta(b))));
    }
    out.push_back(make_check("N(beta) = 2[2A + B] identity", devn, 1e-12));

    double devnd = 0.0;
    for (double b : betas)
        for (double d : {0.05, 0.2, 0.7}) {
            const DeltaWindow w{d};
            devnd = std::max(devnd, rel_dev(n_delta(b, w), n_delta_sum(b, 0.3, 1.1, w)));
            devnd = std::max(devnd, rel_dev(n_delta(b, w), n_delta_sum(b, 1.9, 0.45, w)));
        }
    out.push_back(make_check("N_delta closed form vs four-term sum", devnd, 1e-11));

    double devf = 0.0;
    for (double b : {0.0, 0.3, 0.6, 0.9})
        for (double d : {0.1, 0.4, 1.0})
            for (double chi1 : {0.2, 1.3})
                for (double chi2 : {0.7, 2.1}) {
                    auto integrand = [=](double t) {
                        return pr_process1(b, t, chi1, chi2) * std::sin(t);
                    };
                    const double q =
                        quad_adaptive(integrand, pi / 2 - d, pi / 2 + d, tight);
                    devf = std::max(devf, rel_dev(q, f_delta(b, chi1, chi2, {d})));
                }
    out.push_back(make_check("F_delta vs theta quadrature of the integrand", devf, 1e-9));

    double devm = 0.0;
    for (double b : {0.0, 0.4, 0.8})
        for (double d : {0.1, 0.6}) {
            const DeltaWindow w{d};
            constexpr double h = pi / 2;
            const double chi1 = 0.9, chi2 = 1.7;
            const auto [m1, m2] = marginal_sums_delta(b, chi1, chi2, w);
            devm = std::max(devm, rel_dev(m1, f_delta(b, chi1, chi2, w)
                                                + f_delta(b, chi1, chi2 + h, w)));
            devm = std::max(devm, rel_dev(m2, f_delta(b, chi1, chi2, w)
                                                + f_delta(b, chi1 + h, chi2, w)));
        }
    out.push_back(make_check("marginal delta sums vs explicit F_delta sums", devm, 1e-11));

    return out;
}

std::vector<CheckResult> oracle_delta_limit() {
    double dev = 0.0;
    bool all_converged = true;
    const double betas[5] = {0.0, 0.25, 0.5, 0.75, 0.99};
    const double chis[5] = {0.0, 0.6, 1.2, 1.8, 2.4};
    for (double b : betas)
        for (double c1 : chis)
            for (double c2 : chis) {
                const auto res = joint_p1_via_delta_limit(b, c1, c2);
                all_converged = all_converged && res.converged;
                dev = std::max(dev, std::abs(res.estimate - joint_p1(b, c1, c2).value));
            }
    std::vector<CheckResult> out;
    out.push_back(make_check("delta-limit vs closed form on 5x5x5 grid", dev, 1e-7));
    out.push_back({"delta-limit convergence flags", all_converged ? 0.0 : 1.0, 0.5,
                   all_converged});
    return out;
}

std::vector<CheckResult> oracle_amplitude(int tuples_per_process, std::uint64_t seed) {
    const ThreeVector zhat{0, 0, 1};
    double dev1 = 0.0, dev2 = 0.0;
    std::uint64_t ctr = 0;
    auto next = [&] { return uniform01_at(seed, ctr++); };

    for (int i = 0; i < tuples_per_process; ++i) {
        const double beta = 0.999 * next();
        const double theta = pi * next();
        const double phi = 2 * pi * next();
        const double chi1 = 2 * pi * next();
        const double chi2 = 2 * pi * next();

        // Process 1: beam along z, photon at (theta, phi).
        {
            const ThreeVector kdir = photon_direction(theta, phi);
            const ThreeVector e1 = polarization_p1(theta, phi, chi1);
            const ThreeVector e2 = polarization_p1(theta, phi, chi2);
            const CmEvent ev = build_cm_event(beta, zhat, kdir);
            const FourVector eps1 =
                gauge_projected_polarization({0.0, e1}, ev.p1, ev.k1);
            const FourVector eps2 =
                gauge_projected_polarization({0.0, e2}, ev.p1, ev.k2);
            const double v_cov =
                relative_probability_covariant(ev.p1, ev.k1, ev.k2, eps1, eps2);
            const double v_cm = relative_probability_cm(ev, e1, e2);
            const double v_sp = pr_process1(beta, theta, chi1, chi2);
            const double hi = std::max({v_cov, v_cm, v_sp});
            const double lo = std::min({v_cov, v_cm, v_sp});
            dev1 = std::max(dev1, (hi - lo) / std::max({1.0, std::abs(hi), std::abs(lo)}));
        }
        // Process 2: photons along z, beam at (theta, phi).
        {
            const ThreeVector pdir = photon_direction(theta, phi);
            const ThreeVector e1 = polarization_p2(chi1);
            const ThreeVector e2 = polarization_p2(chi2);
            const CmEvent ev = build_cm_event(beta, pdir, zhat);
            const FourVector eps1 =
                gauge_projected_polarization({0.0, e1}, ev.p1, ev.k1);
            const FourVector eps2 =
                gauge_projected_polarization({0.0, e2}, ev.p1, ev.k2);
            const double v_cov =
                relative_probability_covariant(ev.p1, ev.k1, ev.k2, eps1, eps2);
            const double v_cm = relative_probability_cm(ev, e1, e2);
            const double v_sp = pr_process2(beta, theta, phi, chi1, chi2);
            const double hi = std::max({v_cov, v_cm, v_sp});
            const double lo = std::min({v_cov, v_cm, v_sp});
            dev2 = std::max(dev2, (hi - lo) / std::max({1.0, std::abs(hi), std::abs(lo)}));
        }
    }
    return {make_check("process 1: covariant vs c.m. vs scalar form", dev1, 1e-11),
            make_check("process 2: covariant vs c.m. vs scalar form", dev2, 1e-11)};
}

std::vector<CheckResult> oracle_process2_angular(int points, std::uint64_t seed) {
    const QuadratureSpec inner{1e-13, 1e-12, 20000};
    const QuadratureSpec outer{1e-12, 1e-12, 20000};
    const double betas[5] = {0.1, 0.3, 0.5, 0.7, 0.9};

    double fit_residual = 0.0;
    double prob_dev = 0.0;
    double ab_dev = 0.0;
    std::uint64_t ctr = 0;

    for (double b : betas) {
        constexpr int nd = 12;
        double cs[nd], ival[nd];
        for (int j = 0; j < nd; ++j) {
            const double delta_chi = j * pi / nd;
            auto over_theta = [&](double t) {
                auto over_phi = [&](double p) {
                    return pr_process2(b, t, p, delta_chi, 0.0);
                };
                return std::sin(t) * quad_adaptive(over_phi, 0, 2 * pi, inner);
            };
            ival[j] = quad_adaptive(over_theta, 0, pi, outer);
            const double c = std::cos(delta_chi);
            cs[j] = c * c;
        }
        // least-squares fit I = a + b * cos^2(delta_chi)
        double sx = 0, sxx = 0, sy = 0, sxy = 0;
        for (int j = 0; j < nd; ++j) {
            sx += cs[j];
            sxx += cs[j] * cs[j];
            sy += ival[j];
            sxy += cs[j] * ival[j];
        }
        const double det = nd * sxx - sx * sx;
        const double bfit = (nd * sxy - sx * sy) / det;
        const double afit = (sy - bfit * sx) / nd;
        double imax = 0.0;
        for (int j = 0; j < nd; ++j) imax = std::max(imax, std::abs(ival[j]));
        for (int j = 0; j < nd; ++j)
            fit_residual =
                std::max(fit_residual, std::abs(ival[j] - (afit + bfit * cs[j])) / imax);

        // the fitted coefficients carry the solid-angle factor 2*pi
        ab_dev = std::max(ab_dev, rel_dev(afit / (2 * pi), a_of_beta(b)));
        ab_dev = std::max(ab_dev, rel_dev(bfit / (2 * pi), b_of_beta(b)));

        const int per_beta = std::max(1, points / 5);
        for (int k = 0; k < per_beta; ++k) {
            const double chi1 = 2 * pi * uniform01_at(seed, ctr++);
            const double chi2 = 2 * pi * uniform01_at(seed, ctr++);
            const double c = std::cos(chi1 - chi2);
            const double pnum = (afit + bfit * c * c) / (2.0 * (2.0 * afit + bfit));
            prob_dev = std::max(prob_dev,
                                std::abs(pnum - joint_p2(b, chi1, chi2).value));
        }
    }
    return {make_check("A + B cos^2 linearity of the angular integral", fit_residual, 1e-9),
            make_check("fitted A, B vs closed forms", ab_dev, 1e-8),
            make_check("normalized quadrature probability vs closed form", prob_dev, 1e-8)};
}

} // namespace annih
