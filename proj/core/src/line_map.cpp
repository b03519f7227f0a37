#include "linespace/line_map.hpp"

#include <cmath>
#include <stdexcept>

namespace linespace {

SpacePoint to_space(SpaceKind space, const LineWithParam& lw) {
  const complex xi = lw.line.xi;
  const complex eta = lw.line.eta;
  require_in_domain(space, xi);
  const double sg = space.sign;
  const double s = std::norm(xi);
  const double q = 1.0 + sg * s;
  const complex z = (2.0 * (eta - sg * std::conj(eta) * xi * xi) + 2.0 * xi * q * lw.r) / (q * q);
  const double t = (-sg * 2.0 * (eta * std::conj(xi) + std::conj(eta) * xi).real() +
                    (1.0 - s * s) * lw.r) / (q * q);
  return {z, t};
}

LineWithParam from_space(SpaceKind space, complex xi, SpacePoint p) {
  require_in_domain(space, xi);
  const double sg = space.sign;
  const double s = std::norm(xi);
  const complex eta = 0.5 * (p.z - 2.0 * p.t * xi - sg * std::conj(p.z) * xi * xi);
  const double r = ((sg * (std::conj(xi) * p.z + xi * std::conj(p.z))).real() +
                    (1.0 - sg * s) * p.t) / (1.0 + sg * s);
  return {{xi, eta}, r};
}

Direction direction_vector(SpaceKind space, complex xi) {
  require_in_domain(space, xi);
  const double sg = space.sign;
  const double s = std::norm(xi);
  const double q = 1.0 + sg * s;
  return {2.0 * xi / q, (1.0 - sg * s) / q};
}

LinePoint line_from_point_direction(SpaceKind space, SpacePoint p, Direction d, double tol) {
  const double n = std::norm(d.z) + space.sign * d.t * d.t;
  if (std::abs(n - space.sign) > tol) {
    throw std::invalid_argument("direction is not normalized for this space");
  }
  if (space.lorentzian() && d.t <= 0.0) {
    throw std::invalid_argument("direction is not future-pointing");
  }
  if (space.euclidean() && d.t <= -1.0 + tol) {
    throw std::domain_error("direction at the south pole has no chart coordinate");
  }
  const complex xi = d.z / (1.0 + d.t);
  return from_space(space, xi, p).line;
}

}  // namespace linespace
