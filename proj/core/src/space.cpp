#include "linespace/space.hpp"

#include <stdexcept>
#include <string>

namespace linespace {

bool in_domain(SpaceKind space, complex xi) {
  if (space.euclidean()) return true;
  return std::norm(xi) <= (1.0 - kDiscMargin) * (1.0 - kDiscMargin);
}

void require_in_domain(SpaceKind space, complex xi) {
  if (!in_domain(space, xi)) {
    throw std::domain_error("xi = " + std::to_string(xi.real()) + (xi.imag() < 0 ? "" : "+") +
                            std::to_string(xi.imag()) + "i lies outside the hyperbolic disc chart");
  }
}

ConformalData conformal_data(SpaceKind space, complex xi) {
  require_in_domain(space, xi);
  const double s = std::norm(xi);
  const double q = 1.0 + space.sign * s;
  ConformalData out;
  out.e2u = 4.0 / (q * q);
  out.du = -static_cast<double>(space.sign) * std::conj(xi) / q;
  out.ddu = std::conj(xi) * std::conj(xi) / (q * q);
  out.dbar_du = -static_cast<double>(space.sign) / (q * q);  // = -kappa e^{2u}/4
  return out;
}

complex de2u(SpaceKind space, complex xi) {
  const ConformalData cd = conformal_data(space, xi);
  return 2.0 * cd.e2u * cd.du;
}

}  // namespace linespace
