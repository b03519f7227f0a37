#pragma once

#include "linespace/space.hpp"

// Coordinate realization of the Kahler triple (G, J, Omega) on TN:
//
//   G     = 2 Im( e^{2u} detabar dxi - eta del(e^{2u}) dxi dxibar )
//   Omega = 2 Re( e^{2u} deta ^ dxibar + eta del(e^{2u}) dxi ^ dxibar )
//   J     = j (+) j,  (dxi, deta) -> (i dxi, i deta)
//
// with the symmetrization conventions
//   dA dB (v, w)  = (dA(v) dB(w) + dB(v) dA(w)) / 2
//   dA ^ dB (v,w) = (dA(v) dB(w) - dA(w) dB(v)) / 2,
// under which G(.,.) = Omega(J.,.) holds exactly and the plane identity
//   Omega(v,w)^2 + epsilon sigma^2(v,w) = det G(v_i, v_j)
// is an algebraic identity (epsilon = -1 for the neutral models here).

namespace linespace {

double metric_value(SpaceKind space, LinePoint p, TangentVector v, TangentVector w);

double symplectic_value(SpaceKind space, LinePoint p, TangentVector v, TangentVector w);

inline TangentVector apply_complex_structure(TangentVector v) {
  return {complex(0, 1) * v.dxi, complex(0, 1) * v.deta};
}

// sigma^2(v,w) = e^{4u} |dxi(v) deta(w) - deta(v) dxi(w)|^2; zero exactly when
// v, w span a complex plane (or are dependent).
double sigma_squared(SpaceKind space, LinePoint p, TangentVector v, TangentVector w);

// Omega(v,w)^2 + epsilon sigma^2(v,w) - [G(v,v)G(w,w) - G(v,w)^2].
double wirtinger_residual(SpaceKind space, LinePoint p, TangentVector v, TangentVector w);

}  // namespace linespace
