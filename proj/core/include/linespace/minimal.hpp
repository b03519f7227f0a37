#pragma once

#include <vector>

#include "linespace/jets.hpp"
#include "linespace/space.hpp"

// Minimal (Euclidean) / maximal (Lorentzian) surface machinery.  A Lagrangian
// graph section is the normal congruence of a mean-curvature-zero surface
// exactly when
//
//   delbar( del Fbar / (1 +/- xi xibar)^2 ) = 0,
//
// a holomorphic condition.  Its local solutions form the power series
//
//   F = sum_n 2 lambda_n xi^{n+3}
//         - conj(lambda_n) xibar^{n+1} ( +/- (n+2)(n+3) + 2(n+1)(n+3) xi xibar
//                                        +/- (n+1)(n+2) xi^2 xibar^2 ),
//
// and the surfaces themselves are generated from a holomorphic potential w.

namespace linespace {

// delbar( del Fbar / (1 +/- xi xibar)^2 ) at xi.
complex minimal_residual(SpaceKind space, const SectionJet& sec, complex xi);

struct SeriesSection {
  SpaceKind space;
  std::vector<complex> lambdas;  // lambda_0 ... lambda_N
};

// The truncated series as an analytic section.
SectionJet series_section_build(const SeriesSection& ss);

// The closed-form support potential of the series section,
//   r = -2 sum_n (3+n +/- (1+n) xi xibar)(lambda_n xi^{n+2} + conj) / (1 +/- xi xibar).
double series_potential_r(const SeriesSection& ss, complex xi);

// Mean-curvature-zero surface generated by the holomorphic potential w:
//   z = -/+ ( xi^2 w''/2 - xi w' + w ) + conj(w'')/2
//   t = -/+ Re( xi w'' - w' ),
// immersed where w''' != 0.
SpacePoint weierstrass_surface(SpaceKind space, const HoloPoly& w, complex xi);

// Fibre coordinate of the associated normal congruence,
//   eta = (1 +/- s)^2 conj(w'')/4 -/+ xi (1 +/- s) conj(w')/2
//         + xi^2 conj(w)/2 -/+ w/2,   s = xi xibar.
complex weierstrass_eta(SpaceKind space, const HoloPoly& w, complex xi);

// The same congruence as an analytic graph section (bidegree polynomial).
SectionJet weierstrass_section(SpaceKind space, const HoloPoly& w);

// True when w''' vanishes at xi (no immersion there).
bool weierstrass_flat_point(const HoloPoly& w, complex xi, double tol = 1e-12);

// Winding number of sigma0 about 0 along the circle |xi - center| = radius,
// by continuous argument tracking at `samples` points.  Throws
// std::invalid_argument when sigma0 comes within `clearance` of zero on the
// contour.
int umbilic_winding(SpaceKind space, const SectionJet& sec, complex center,
                    double radius, int samples = 512, double clearance = 1e-9);

}  // namespace linespace
