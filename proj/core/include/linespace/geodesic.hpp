#pragma once

#include <vector>

#include "linespace/line_map.hpp"
#include "linespace/space.hpp"

// Geodesics of G on TN.  The affinely parameterized equations are
//
//   xi''  = -2 del u xi'^2
//   eta'' = -4 del u xi' eta' - 2 (eta del del u - etabar del delbar u) xi'^2.
//
// Fibre curves (xi' = 0) are straight null lines.  On TH^2 the non-fibre
// geodesics through (0,0) have the closed form
//
//   xi  = tanh(C2 s) e^{i theta}
//   eta = (C5 sinh(2 C2 s) - i C1 s) e^{i theta} / (4 C2 cosh^2(C2 s)),
//
// with first integral C1 (zero iff the geodesic is null; G(c',c') = 2 C1).

namespace linespace {

struct GeodesicState {
  complex xi, eta;
  complex dxi, deta;
  double s = 0.0;
};

struct GeodesicParams {
  double c1 = 0.0;
  double c2 = 1.0;  // must be nonzero
  double c5 = 0.0;
  double theta = 0.0;
};

struct Acceleration {
  complex ddxi, ddeta;
};

Acceleration geodesic_rhs(SpaceKind space, const GeodesicState& st);

// Fixed-step RK4 with dense output at multiples of step.  If the trajectory
// leaves the chart, integration stops and the states so far are returned
// (last entry is the final in-domain state).
std::vector<GeodesicState> integrate_geodesic(SpaceKind space, GeodesicState st0,
                                              double s1, double step);

// First integral of the TH^2 geodesic flow (throws on the Euclidean space).
double first_integral(SpaceKind space, const GeodesicState& st);

// Closed-form TH^2 geodesic; rejects c2 == 0 (fibre/degenerate data belongs
// to integrate_geodesic).
LinePoint closed_form_th2(const GeodesicParams& gp, double s);

// Same point together with the velocity, as a GeodesicState at parameter s.
GeodesicState closed_form_th2_state(const GeodesicParams& gp, double s);

// Ruled surface swept in 3-space by the lines of a geodesic: grid of
// to_space((xi(s), eta(s)), r) over s x r, row-major in s.
struct RuledSurface {
  std::vector<double> s_values;
  std::vector<double> r_values;
  std::vector<SpacePoint> points;  // points[i*r_values.size() + j]

  const SpacePoint& at(std::size_t i, std::size_t j) const {
    return points[i * r_values.size() + j];
  }
};

RuledSurface ruled_surface(SpaceKind space, const std::vector<GeodesicState>& trajectory,
                           double r0, double r1, int nr);

RuledSurface ruled_surface(SpaceKind space, const GeodesicParams& gp, double s0,
                           double s1, int ns, double r0, double r1, int nr);

}  // namespace linespace
