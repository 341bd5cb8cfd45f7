#pragma once

#include "annih/vec.hpp"

namespace annih {

/// Center-of-momentum event: e+ (p1), e- (p2) annihilating into photons k1, k2,
/// all with common energy p0 = 1. beta = |p|/p0 is the single dynamical parameter.
struct CmEvent {
    double beta = 0.0;
    FourVector p1, p2, k1, k2;
};

/// Two orthonormal polarization directions transverse to one photon.
struct PolarizationBasis {
    ThreeVector e1, e2;
};

/// Rotation by angle phi about a unit axis (counterclockwise, right-hand rule);
/// with axis = z this carries (sin t, 0, cos t) to (cos phi sin t, sin phi sin t, cos t).
Mat3 rotation_matrix(double phi, const ThreeVector& axis);

/// Unit photon direction (cos phi sin theta, sin phi sin theta, cos theta).
ThreeVector photon_direction(double theta, double phi);

/// Linear polarization direction at analyzer angle chi for a photon along
/// photon_direction(theta, phi), with the beam along z. At phi = 0 this is
/// (-cos theta cos chi, sin chi, sin theta cos chi).
ThreeVector polarization_p1(double theta, double phi, double chi);

/// Polarization direction for a photon along z: (-cos chi, sin chi, 0).
ThreeVector polarization_p2(double chi);

/// The transverse basis {e(chi), e(chi + pi/2)} for a photon along (theta, phi).
PolarizationBasis polarization_basis(double theta, double phi, double chi = 0.0);

/// Build the c.m. configuration: p1 = (1, beta*p_dir), k1 = (1, k_dir), with
/// p2, k2 the spatial opposites. Throws invalid_input for beta outside [0,1]
/// or non-unit directions.
CmEvent build_cm_event(double beta, const ThreeVector& p_dir, const ThreeVector& k_dir);

/// Gauge projection eps = e - k (p1.e)/(p1.k), for e with k.e = 0.
/// Throws degenerate_kinematics when p1.k vanishes (collinear massless limit).
FourVector gauge_projected_polarization(const FourVector& e, const FourVector& p1,
                                        const FourVector& k);

} // namespace annih
