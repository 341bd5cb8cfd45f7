#include "annih/amplitude.hpp"

#include "annih/error.hpp"

#include <cmath>

namespace annih {

double relative_probability_covariant(const FourVector& p1, const FourVector& k1,
                                      const FourVector& k2, const FourVector& eps1,
                                      const FourVector& eps2) {
    const double pk1 = mdot(p1, k1);
    const double pk2 = mdot(p1, k2);
    if (std::abs(pk1) < 1e-300 || std::abs(pk2) < 1e-300)
        throw degenerate_kinematics("(p1.k1)(p1.k2) vanishes");
    const double kk = mdot(k1, k2);
    const double ee = mdot(eps1, eps2);
    return 0.25 * kk * kk / (pk1 * pk2) - ee * ee;
}

double relative_probability_cm(const CmEvent& event, const ThreeVector& e1,
                               const ThreeVector& e2) {
    const double pk1 = mdot(event.p1, event.k1);
    const double pk2 = mdot(event.p1, event.k2);
    if (std::abs(pk1) < 1e-300 || std::abs(pk2) < 1e-300)
        throw degenerate_kinematics("(p1.k1)(p1.k2) vanishes");
    const double kk = mdot(event.k1, event.k2);
    const double corr = dot(e1, e2) + dot(e1, event.p1.s) * dot(e2, event.p1.s) * kk / (pk1 * pk2);
    return 0.25 * kk * kk / (pk1 * pk2) - corr * corr;
}

double pr_process1(double beta, double theta, double chi1, double chi2) {
    const double c1 = std::cos(chi1);
    const double c2 = std::cos(chi2);
    const double g = std::cos(chi1 - chi2) - 2.0 * c1 * c2;
    const double ct = std::cos(theta);
    const double d = 1.0 - beta * beta * ct * ct;
    if (d <= 0.0)
        throw degenerate_kinematics("1 - beta^2 cos^2(theta) vanishes");
    const double u = 1.0 - beta * beta;
    return (1.0 - 4.0 * u * c1 * c2 * g) / d
         - 4.0 * u * u * c1 * c1 * c2 * c2 / (d * d)
         - g * g;
}

double pr_process2(double beta, double theta, double phi, double chi1, double chi2) {
    const double c1 = std::cos(phi + chi1);
    const double c2 = std::cos(phi + chi2);
    const double g = std::cos(chi1 - chi2) - 2.0 * c1 * c2;
    const double ct = std::cos(theta);
    const double d = 1.0 - beta * beta * ct * ct;
    if (d <= 0.0)
        throw degenerate_kinematics("1 - beta^2 cos^2(theta) vanishes");
    const double u = 1.0 - beta * beta;
    return (1.0 - 4.0 * u * c1 * c2 * g) / d
         - 4.0 * u * u * c1 * c1 * c2 * c2 / (d * d)
         - g * g;
}

} // namespace annih
