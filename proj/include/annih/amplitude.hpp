#pragma once

#include "annih/kinematics.hpp"

namespace annih {

/// Process 1: e+e- beam along z, photon detectors on the x axis.
/// Process 2: photons along z, beam orientation averaged over the sphere.
enum class Process { One = 1, Two = 2 };

/// Relative two-photon transition probability from the covariant invariants:
/// (1/4) (k1.k2)^2 / ((p1.k1)(p1.k2)) - (eps1.eps2)^2,
/// with eps the gauge-projected polarizations.
double relative_probability_covariant(const FourVector& p1, const FourVector& k1,
                                      const FourVector& k2, const FourVector& eps1,
                                      const FourVector& eps2);

/// Same quantity from c.m. three-vector data: polarization directions e1, e2
/// transverse to the photon axis, spatial products against p.
double relative_probability_cm(const CmEvent& event, const ThreeVector& e1,
                               const ThreeVector& e2);

/// Process-1 scalar reduction: beam along z, photon at polar angle theta,
/// analyzer angles chi1, chi2. Azimuth drops out.
double pr_process1(double beta, double theta, double chi1, double chi2);

/// Process-2 scalar reduction: photons along z, beam at (theta, phi).
double pr_process2(double beta, double theta, double phi, double chi1, double chi2);

} // namespace annih
