#pragma once

#include <complex>

// Base types for the neutral Kahler structure on TN, where N is the round
// 2-sphere (oriented lines of Euclidean 3-space) or the hyperbolic plane
// (future-pointing time-like lines of Lorentzian 3-space).  N carries the
// constant-curvature metric e^{2u} dxi dxibar with e^{2u} = 4/(1 + sign*xi*xibar)^2;
// sign = +1 selects the Euclidean case (kappa = +1), sign = -1 the Lorentzian
// one (kappa = -1, chart restricted to the unit disc).

namespace linespace {

using complex = std::complex<double>;

// The Lorentzian chart is the open unit disc; evaluation is cut off this far
// inside the boundary because the conformal factor blows up there.
inline constexpr double kDiscMargin = 1e-9;

struct SpaceKind {
  int sign;     // +1 Euclidean (base S^2), -1 Lorentzian (base H^2)
  int kappa;    // Gauss curvature of the base; equals sign for the two models
  int epsilon;  // metric signature flag; -1 (neutral) for both models

  constexpr bool euclidean() const { return sign > 0; }
  constexpr bool lorentzian() const { return sign < 0; }
  const char* name() const { return sign > 0 ? "euclidean" : "lorentzian"; }
};

inline constexpr SpaceKind kEuclidean{+1, +1, -1};
inline constexpr SpaceKind kLorentzian{-1, -1, -1};

// A point of TN: base coordinate xi, fibre coordinate eta.
struct LinePoint {
  complex xi;
  complex eta;
};

// A real tangent vector of TN stored by its holomorphic components:
//   v = dxi d/dxi + conj(dxi) d/dxibar + deta d/deta + conj(deta) d/detabar.
struct TangentVector {
  complex dxi;
  complex deta;
};

// A point of E^3 / E^3_1, split as z = x^1 + i x^2 and t = x^3.
struct SpacePoint {
  complex z;
  double t;
};

// Conformal data of the base metric at xi.
struct ConformalData {
  double e2u;      // e^{2u}
  complex du;      // del u
  complex ddu;     // del del u
  double dbar_du;  // del delbar u  (real; equals -kappa e^{2u}/4)
};

// True when xi lies in the chart of the given space.
bool in_domain(SpaceKind space, complex xi);

// Throws std::domain_error when xi is outside the chart.
void require_in_domain(SpaceKind space, complex xi);

// Exact conformal data e^{2u} = 4/(1 + sign*xi*xibar)^2 and its derivatives.
ConformalData conformal_data(SpaceKind space, complex xi);

// del(e^{2u}) = 2 e^{2u} del u.
complex de2u(SpaceKind space, complex xi);

}  // namespace linespace
