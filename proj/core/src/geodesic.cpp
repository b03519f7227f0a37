#include "linespace/geodesic.hpp"

#include <cmath>
#include <stdexcept>

namespace linespace {

Acceleration geodesic_rhs(SpaceKind space, const GeodesicState& st) {
  const ConformalData cd = conformal_data(space, st.xi);
  const complex ddxi = -2.0 * cd.du * st.dxi * st.dxi;
  const complex ddeta = -4.0 * cd.du * st.dxi * st.deta -
                        2.0 * (st.eta * cd.ddu - std::conj(st.eta) * cd.dbar_du) *
                            st.dxi * st.dxi;
  return {ddxi, ddeta};
}

std::vector<GeodesicState> integrate_geodesic(SpaceKind space, GeodesicState st0,
                                              double s1, double step) {
  if (step <= 0.0) throw std::invalid_argument("step must be positive");
  require_in_domain(space, st0.xi);

  struct Y {
    complex xi, eta, dxi, deta;
  };
  auto f = [&](const Y& y) -> Y {
    const Acceleration a = geodesic_rhs(space, {y.xi, y.eta, y.dxi, y.deta, 0.0});
    return {y.dxi, y.deta, a.ddxi, a.ddeta};
  };
  auto axpy = [](const Y& y, double c, const Y& d) -> Y {
    return {y.xi + c * d.xi, y.eta + c * d.eta, y.dxi + c * d.dxi, y.deta + c * d.deta};
  };

  const long n = std::lround(s1 / step);
  std::vector<GeodesicState> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  Y y{st0.xi, st0.eta, st0.dxi, st0.deta};
  out.push_back({y.xi, y.eta, y.dxi, y.deta, 0.0});
  for (long k = 0; k < n; ++k) {
    Y ynext = y;
    try {
      const Y k1 = f(y);
      const Y k2 = f(axpy(y, 0.5 * step, k1));
      const Y k3 = f(axpy(y, 0.5 * step, k2));
      const Y k4 = f(axpy(y, step, k3));
      ynext = axpy(ynext, step / 6.0, k1);
      ynext = axpy(ynext, step / 3.0, k2);
      ynext = axpy(ynext, step / 3.0, k3);
      ynext = axpy(ynext, step / 6.0, k4);
    } catch (const std::domain_error&) {
      break;  // an RK4 stage left the chart: stop at the last valid state
    }
    if (!in_domain(space, ynext.xi)) break;
    y = ynext;
    out.push_back({y.xi, y.eta, y.dxi, y.deta, (k + 1) * step});
  }
  return out;
}

double first_integral(SpaceKind space, const GeodesicState& st) {
  if (!space.lorentzian()) {
    throw std::invalid_argument("the closed-form first integral lives on TH^2");
  }
  require_in_domain(space, st.xi);
  const double s = std::norm(st.xi);
  const double q = 1.0 - s;
  const complex v = (2.0 * complex(0, 1) / (q * q)) *
                    (st.deta * std::conj(st.dxi) - std::conj(st.deta) * st.dxi -
                     2.0 * (st.xi * std::conj(st.eta) - std::conj(st.xi) * st.eta) *
                         st.dxi * std::conj(st.dxi) / q);
  return v.real();
}

LinePoint closed_form_th2(const GeodesicParams& gp, double s) {
  const GeodesicState st = closed_form_th2_state(gp, s);
  return {st.xi, st.eta};
}

GeodesicState closed_form_th2_state(const GeodesicParams& gp, double s) {
  if (gp.c2 == 0.0) {
    throw std::invalid_argument("c2 = 0 is the fibre/degenerate case; integrate it directly");
  }
  const complex ph = std::polar(1.0, gp.theta);
  const double ch = std::cosh(gp.c2 * s);
  const double sh2 = std::sinh(2.0 * gp.c2 * s);
  const complex num = gp.c5 * sh2 - complex(0, 1) * gp.c1 * s;
  const double den = 4.0 * gp.c2 * ch * ch;

  GeodesicState st;
  st.s = s;
  st.xi = std::tanh(gp.c2 * s) * ph;
  st.eta = num * ph / den;
  st.dxi = gp.c2 / (ch * ch) * ph;
  const complex num_d = 2.0 * gp.c2 * gp.c5 * std::cosh(2.0 * gp.c2 * s) - complex(0, 1) * gp.c1;
  const double den_d = 4.0 * gp.c2 * gp.c2 * sh2;
  st.deta = ph * (num_d * den - num * den_d) / (den * den);
  return st;
}

RuledSurface ruled_surface(SpaceKind space, const std::vector<GeodesicState>& trajectory,
                           double r0, double r1, int nr) {
  if (nr < 2) throw std::invalid_argument("need at least two rule samples");
  RuledSurface out;
  out.s_values.reserve(trajectory.size());
  out.r_values.resize(static_cast<std::size_t>(nr));
  for (int j = 0; j < nr; ++j)
    out.r_values[static_cast<std::size_t>(j)] = r0 + (r1 - r0) * j / (nr - 1);
  out.points.reserve(trajectory.size() * static_cast<std::size_t>(nr));
  for (const GeodesicState& st : trajectory) {
    out.s_values.push_back(st.s);
    for (double r : out.r_values) {
      out.points.push_back(to_space(space, {{st.xi, st.eta}, r}));
    }
  }
  return out;
}

RuledSurface ruled_surface(SpaceKind space, const GeodesicParams& gp, double s0,
                           double s1, int ns, double r0, double r1, int nr) {
  if (ns < 2) throw std::invalid_argument("need at least two s samples");
  std::vector<GeodesicState> traj;
  traj.reserve(static_cast<std::size_t>(ns));
  for (int i = 0; i < ns; ++i) {
    traj.push_back(closed_form_th2_state(gp, s0 + (s1 - s0) * i / (ns - 1)));
  }
  return ruled_surface(space, traj, r0, r1, nr);
}

}  // namespace linespace
