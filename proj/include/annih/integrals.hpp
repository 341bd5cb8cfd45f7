#pragma once

#include <utility>

namespace annih {

/// Half-width of the polar-angle window around pi/2, 0 < delta <= pi/2.
struct DeltaWindow {
    double delta;
};

/// Integral of sin(t)/(1 - beta^2 cos^2 t) over [pi/2 - delta, pi/2 + delta]:
/// (1/beta) ln((1 + beta sin d)/(1 - beta sin d)), with a series branch for
/// beta sin d < 1e-6. Throws degenerate_kinematics when beta sin d >= 1.
double int_theta_1(double beta, DeltaWindow w);

/// Same with the squared denominator:
/// sin d / (1 - beta^2 sin^2 d) + int_theta_1 / 2.
double int_theta_2(double beta, DeltaWindow w);

/// Theta-window integral of the Process-1 relative probability times sin(theta).
double f_delta(double beta, double chi1, double chi2, DeltaWindow w);

/// Normalization: closed-form sum of f_delta over the four outcome settings.
double n_delta(double beta, DeltaWindow w);

/// The same normalization as the explicit four-term sum of f_delta; kept as an
/// independent route for cross-checking the closed form.
double n_delta_sum(double beta, double chi1, double chi2, DeltaWindow w);

/// Partial sums over the unmeasured analyzer:
/// first = F(chi1, chi2) + F(chi1, chi2 + pi/2)   (depends on chi1 only),
/// second = F(chi1, chi2) + F(chi1 + pi/2, chi2)  (depends on chi2 only).
std::pair<double, double> marginal_sums_delta(double beta, double chi1, double chi2,
                                              DeltaWindow w);

/// Azimuthal integrals over [0, 2pi]:
/// first = integral of cos(phi+chi1) cos(phi+chi2) = pi cos(chi1-chi2),
/// second = integral of the squared product = (pi/4)(1 + 2 cos^2(chi1-chi2)).
std::pair<double, double> phi_integrals(double chi1, double chi2);

/// Angle-independent part of the sphere-averaged Process-2 probability.
/// A(0) = 2; A(1) diverges (+infinity is returned).
double a_of_beta(double beta);

/// Coefficient of cos^2(chi1-chi2) in the sphere-averaged Process-2
/// probability. B(0) = -2, B(1) = 0.
double b_of_beta(double beta);

/// Process-2 normalization, N = 2 [2 A + B].
double n_of_beta(double beta);

} // namespace annih
