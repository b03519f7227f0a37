#include "linespace/kahler.hpp"

#include <algorithm>
#include <cmath>

namespace linespace {

double metric_value(SpaceKind space, LinePoint p, TangentVector v, TangentVector w) {
  const ConformalData cd = conformal_data(space, p.xi);
  const complex B = p.eta * 2.0 * cd.e2u * cd.du;  // eta del(e^{2u})
  const complex t1 = cd.e2u * 0.5 * (std::conj(v.deta) * w.dxi + v.dxi * std::conj(w.deta));
  const double dxidxib = (v.dxi * std::conj(w.dxi)).real();
  return 2.0 * (t1 - B * dxidxib).imag();
}

double symplectic_value(SpaceKind space, LinePoint p, TangentVector v, TangentVector w) {
  const ConformalData cd = conformal_data(space, p.xi);
  const complex B = p.eta * 2.0 * cd.e2u * cd.du;
  const complex t1 = cd.e2u * 0.5 * (v.deta * std::conj(w.dxi) - w.deta * std::conj(v.dxi));
  const complex t2 = B * 0.5 * (v.dxi * std::conj(w.dxi) - w.dxi * std::conj(v.dxi));
  return 2.0 * (t1 + t2).real();
}

double sigma_squared(SpaceKind space, LinePoint p, TangentVector v, TangentVector w) {
  const ConformalData cd = conformal_data(space, p.xi);
  const double m = std::abs(v.dxi * w.deta - v.deta * w.dxi);
  return cd.e2u * cd.e2u * m * m;
}

double wirtinger_residual(SpaceKind space, LinePoint p, TangentVector v, TangentVector w) {
  const double om = symplectic_value(space, p, v, w);
  const double s2 = sigma_squared(space, p, v, w);
  const double gvv = metric_value(space, p, v, v);
  const double gww = metric_value(space, p, w, w);
  const double gvw = metric_value(space, p, v, w);
  return om * om + space.epsilon * s2 - (gvv * gww - gvw * gvw);
}

}  // namespace linespace
