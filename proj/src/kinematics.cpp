#include "annih/kinematics.hpp"

#include "annih/error.hpp"

#include <cmath>

namespace annih {

namespace {
constexpr double kUnitTol = 1e-9;

void require_unit(const ThreeVector& v, const char* what) {
    if (std::abs(norm(v) - 1.0) > kUnitTol)
        throw invalid_input(std::string(what) + " must be a unit vector");
}
} // namespace

Mat3 rotation_matrix(double phi, const ThreeVector& axis) {
    require_unit(axis, "rotation axis");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double ax = axis.x, ay = axis.y, az = axis.z;
    Mat3 r;
    // R = I + sin(phi) K + (1 - cos(phi)) K^2, K v = axis x v
    r.m[0][0] = c + (1 - c) * ax * ax;
    r.m[0][1] = (1 - c) * ax * ay - s * az;
    r.m[0][2] = (1 - c) * ax * az + s * ay;
    r.m[1][0] = (1 - c) * ay * ax + s * az;
    r.m[1][1] = c + (1 - c) * ay * ay;
    r.m[1][2] = (1 - c) * ay * az - s * ax;
    r.m[2][0] = (1 - c) * az * ax - s * ay;
    r.m[2][1] = (1 - c) * az * ay + s * ax;
    r.m[2][2] = c + (1 - c) * az * az;
    return r;
}

ThreeVector photon_direction(double theta, double phi) {
    const double st = std::sin(theta);
    return {std::cos(phi) * st, std::sin(phi) * st, std::cos(theta)};
}

ThreeVector polarization_p1(double theta, double phi, double chi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cc = std::cos(chi), sc = std::sin(chi);
    const double cp = std::cos(phi), sp = std::sin(phi);
    return {-ct * cc * cp - sc * sp, sc * cp - ct * cc * sp, st * cc};
}

ThreeVector polarization_p2(double chi) {
    return {-std::cos(chi), std::sin(chi), 0.0};
}

PolarizationBasis polarization_basis(double theta, double phi, double chi) {
    constexpr double half_pi = 1.5707963267948966;
    return {polarization_p1(theta, phi, chi), polarization_p1(theta, phi, chi + half_pi)};
}

CmEvent build_cm_event(double beta, const ThreeVector& p_dir, const ThreeVector& k_dir) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw invalid_input("beta must lie in [0, 1]");
    require_unit(p_dir, "p direction");
    require_unit(k_dir, "k direction");
    CmEvent ev;
    ev.beta = beta;
    ev.p1 = {1.0, beta * p_dir};
    ev.p2 = {1.0, -beta * p_dir};
    ev.k1 = {1.0, k_dir};
    ev.k2 = {1.0, -k_dir};
    return ev;
}

FourVector gauge_projected_polarization(const FourVector& e, const FourVector& p1,
                                        const FourVector& k) {
    if (std::abs(mdot(k, e)) > 1e-9)
        throw invalid_input("polarization must satisfy k.e = 0");
    const double pk = mdot(p1, k);
    if (std::abs(pk) < 1e-300)
        throw degenerate_kinematics("p1.k vanishes; gauge projection undefined");
    return e - (mdot(p1, e) / pk) * k;
}

} // namespace annih
