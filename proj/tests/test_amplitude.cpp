#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "annih/amplitude.hpp"
#include "annih/error.hpp"
#include "annih/montecarlo.hpp"
#include "annih/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace annih;

namespace {
constexpr double pi = std::numbers::pi;
const ThreeVector zhat{0, 0, 1};
} // namespace

TEST_CASE("threshold values of the process-1 form") {
    // beta = 0, parallel analyzers: forbidden
    for (double t : {0.2, 1.0, 2.5})
        CHECK(pr_process1(0.0, t, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    // beta = 0, crossed analyzers: the maximum, twice the quadruple average
    for (double t : {0.2, 1.0, 2.5}) {
        const double v = pr_process1(0.0, t, 0.0, pi / 2);
        double quad_sum = 0.0;
        for (double a : {0.0, pi / 2})
            for (double b : {0.0, pi / 2})
                quad_sum += pr_process1(0.0, t, a, b + pi / 2);
        CHECK(v == doctest::Approx(1.0));
        CHECK(v == doctest::Approx(2.0 * quad_sum / 4.0));
    }
}

TEST_CASE("chi periodicity and symmetry") {
    const double base = pr_process1(0.5, 1.0, 0.4, 1.3);
    CHECK(pr_process1(0.5, 1.0, 0.4 + pi, 1.3 + pi) == doctest::Approx(base).epsilon(1e-13));
    CHECK(pr_process1(0.5, pi - 1.0, 0.4, 1.3) == doctest::Approx(base).epsilon(1e-13));

    // process 2 shift: common chi shift equals a phi shift
    const double a = pr_process2(0.7, 0.9, 0.3, 0.4 + 0.25, 1.3 + 0.25);
    const double b = pr_process2(0.7, 0.9, 0.3 + 0.25, 0.4, 1.3);
    CHECK(a == doctest::Approx(b).epsilon(1e-13));

    // theta = pi/2 removes the beta dependence of the denominators
    const double v1 = pr_process2(0.9, pi / 2, 0.3, 0.4, 1.3);
    const double c1 = std::cos(0.3 + 0.4), c2 = std::cos(0.3 + 1.3);
    const double g = std::cos(0.4 - 1.3) - 2 * c1 * c2;
    const double u = 1 - 0.81;
    CHECK(v1 == doctest::Approx(1 - 4 * u * c1 * c2 * g - 4 * u * u * c1 * c1 * c2 * c2 -
                                g * g)
                    .epsilon(1e-13));
}

TEST_CASE("degenerate kinematics raise") {
    CHECK_THROWS_AS(pr_process1(1.0, 0.0, 0.1, 0.2), degenerate_kinematics);
    CHECK_THROWS_AS(pr_process2(1.0, pi, 0.0, 0.1, 0.2), degenerate_kinematics);
}

TEST_CASE("three-level consistency on random tuples") {
    const auto checks = oracle_amplitude(300, 4242);
    for (const auto& c : checks) {
        INFO(c.name, " max deviation ", c.max_deviation);
        CHECK(c.pass);
    }
}

TEST_CASE("gauge invariance of the covariant form") {
    for (int i = 0; i < 50; ++i) {
        const double beta = 0.95 * uniform01_at(31, 6 * i);
        const double theta = 0.2 + (pi - 0.4) * uniform01_at(31, 6 * i + 1);
        const double phi = 2 * pi * uniform01_at(31, 6 * i + 2);
        const double chi1 = 2 * pi * uniform01_at(31, 6 * i + 3);
        const double chi2 = 2 * pi * uniform01_at(31, 6 * i + 4);
        const double shift = -10.0 + 20.0 * uniform01_at(31, 6 * i + 5);

        const CmEvent ev = build_cm_event(beta, zhat, photon_direction(theta, phi));
        const FourVector e1{0.0, polarization_p1(theta, phi, chi1)};
        const FourVector e2{0.0, polarization_p1(theta, phi, chi2)};
        const FourVector eps1 = gauge_projected_polarization(e1, ev.p1, ev.k1);
        const FourVector eps2 = gauge_projected_polarization(e2, ev.p1, ev.k2);
        const FourVector eps1s =
            gauge_projected_polarization(e1 + shift * ev.k1, ev.p1, ev.k1);

        const double a = relative_probability_covariant(ev.p1, ev.k1, ev.k2, eps1, eps2);
        const double b = relative_probability_covariant(ev.p1, ev.k1, ev.k2, eps1s, eps2);
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("non-negativity over a parameter grid") {
    for (int ib = 0; ib < 10; ++ib) {
        const double beta = ib < 9 ? ib * 0.1 : 0.99;
        for (int it = 0; it < 25; ++it) {
            const double theta = (it + 0.5) * pi / 25;
            for (int ic = 0; ic < 25; ++ic) {
                const double chi1 = ic * pi / 25;
                for (int jc = 0; jc < 25; ++jc) {
                    const double chi2 = jc * pi / 25;
                    CHECK(pr_process1(beta, theta, chi1, chi2) >= -1e-10);
                }
            }
        }
    }
    for (double beta : {0.0, 0.3, 0.7, 0.99})
        for (int it = 0; it < 12; ++it)
            for (int ip = 0; ip < 12; ++ip)
                for (int ic = 0; ic < 12; ++ic)
                    CHECK(pr_process2(beta, (it + 0.5) * pi / 12, ip * 2 * pi / 12,
                                      ic * pi / 12, 0.77) >= -1e-10);
}
