#include "linespace/isometry.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "linespace/kahler.hpp"
#include "linespace/line_map.hpp"

namespace linespace {

namespace {

constexpr complex kI{0.0, 1.0};

// 2x2 complex matrix, row-major.
struct Mat2 {
  complex m00, m01, m10, m11;

  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
  Mat2 dagger() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
};

// Spinor of the rotation part, chosen so that the induced projective action
// on the direction coordinate matches the fractional linear transformation
// used by motion_act_on_line.
Mat2 spinor(SpaceKind space, const RigidMotion& m) {
  if (space.euclidean()) {
    return {std::conj(m.alpha), -std::conj(m.beta), m.beta, m.alpha};
  }
  return {std::conj(m.alpha), std::conj(m.beta), m.beta, m.alpha};
}

}  // namespace

std::array<KillingField, 6> killing_basis(SpaceKind space) {
  // Rotations/boosts: a0 = bdot + 2 adot xi + q conj(bdot) xi^2 with adot
  // imaginary; q = +1 in the Euclidean case (SU(2) action), -1 in the
  // Lorentzian one (SU(1,1) action).
  const double q = space.euclidean() ? 1.0 : -1.0;
  std::array<KillingField, 6> out;
  out[0].a0 = {0.0, 2.0 * (0.5 * kI), 0.0};                  // adot = i/2: rotation about the t-axis
  out[1].a0 = {0.5, 0.0, q * 0.5};                           // bdot = 1/2
  out[2].a0 = {0.5 * kI, 0.0, q * std::conj(0.5 * kI)};      // bdot = i/2
  // Translations: b1 = (gdot - 2 ddot xi - sign conj(gdot) xi^2)/2.
  const double sg = space.sign;
  out[3].b1 = {0.5, 0.0, -sg * 0.5};                         // gdot = 1: x^1
  out[4].b1 = {0.5 * kI, 0.0, -sg * std::conj(0.5 * kI)};    // gdot = i: x^2
  out[5].b1 = {0.0, -1.0, 0.0};                              // ddot = 1: x^3
  return out;
}

TangentVector killing_eval(const KillingField& f, SpaceKind space, LinePoint p) {
  if (f.a1 != 0.0) {
    throw std::invalid_argument("a1 != 0 only occurs over flat bases");
  }
  const ConformalData cd = conformal_data(space, p.xi);
  const complex a = f.a0(p.xi);
  const complex c = std::conj(f.a0.deriv(p.xi)) + 2.0 * a * cd.du +
                    2.0 * std::conj(a) * std::conj(cd.du);
  return {a, f.b1(p.xi) - c * p.eta};
}

namespace {

// Real 4x4 matrix of G in coordinates (x, y, p, q), xi = x+iy, eta = p+iq.
std::array<std::array<double, 4>, 4> metric_matrix(SpaceKind space, LinePoint pt) {
  const TangentVector basis[4] = {{1.0, 0.0}, {kI, 0.0}, {0.0, 1.0}, {0.0, kI}};
  std::array<std::array<double, 4>, 4> g{};
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      g[i][j] = metric_value(space, pt, basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
  return g;
}

}  // namespace

double killing_residual(const KillingField& f, SpaceKind space, LinePoint p, double h) {
  if (h <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
  if (f.a1 != 0.0) throw std::invalid_argument("a1 != 0 only occurs over flat bases");

  // dG by central differences over the four real coordinates.
  double dG[4][4][4];
  for (int i = 0; i < 4; ++i) {
    LinePoint pp = p, pm = p;
    const complex dxi = (i == 0) ? complex(h, 0) : (i == 1) ? complex(0, h) : complex(0, 0);
    const complex det = (i == 2) ? complex(h, 0) : (i == 3) ? complex(0, h) : complex(0, 0);
    pp.xi += dxi; pp.eta += det;
    pm.xi -= dxi; pm.eta -= det;
    const auto gp = metric_matrix(space, pp);
    const auto gm = metric_matrix(space, pm);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) dG[i][j][k] = (gp[j][k] - gm[j][k]) / (2.0 * h);
  }

  // Analytic Wirtinger derivatives of V.
  const ConformalData cd = conformal_data(space, p.xi);
  const complex a = f.a0(p.xi);
  const complex ad = f.a0.deriv(p.xi);
  const complex add = f.a0.deriv2();
  const complex c = std::conj(ad) + 2.0 * a * cd.du + 2.0 * std::conj(a) * std::conj(cd.du);
  const complex dc_dxi = 2.0 * ad * cd.du + 2.0 * a * cd.ddu +
                         2.0 * std::conj(a) * cd.dbar_du;
  const complex dc_dxib = std::conj(add) + 2.0 * a * cd.dbar_du +
                          2.0 * std::conj(ad) * std::conj(cd.du) +
                          2.0 * std::conj(a) * std::conj(cd.ddu);
  const complex v_xi = a;
  const complex v_eta = f.b1(p.xi) - c * p.eta;
  const complex dveta_dxi = f.b1.deriv(p.xi) - dc_dxi * p.eta;
  const complex dveta_dxib = -dc_dxib * p.eta;

  // Real Jacobian dV_i/dx_j from the Wirtinger pairs.
  double JV[4][4] = {};
  auto fill = [&JV](int row_re, const complex& wz, const complex& wzb, int col) {
    const complex ddx = wz + wzb;
    const complex ddy = kI * (wz - wzb);
    JV[row_re][col] = ddx.real();
    JV[row_re + 1][col] = ddx.imag();
    JV[row_re][col + 1] = ddy.real();
    JV[row_re + 1][col + 1] = ddy.imag();
  };
  fill(0, ad, 0.0, 0);            // V^xi depends holomorphically on xi
  fill(2, dveta_dxi, dveta_dxib, 0);
  fill(2, -c, 0.0, 2);            // d V^eta / d eta = -c, / d etabar = 0

  const auto g = metric_matrix(space, p);
  const double v[4] = {v_xi.real(), v_xi.imag(), v_eta.real(), v_eta.imag()};

  double worst = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      double r = 0.0;
      for (int i = 0; i < 4; ++i)
        r += v[i] * dG[i][j][k] + g[k][i] * JV[i][j] + g[j][i] * JV[i][k];
      worst = std::max(worst, std::abs(r));
    }
  return worst;
}

RigidMotion RigidMotion::rotation(complex alpha, complex beta) {
  return {alpha, beta, 0.0, 0.0};
}

RigidMotion RigidMotion::rotation_about_t(double phi) {
  return {std::polar(1.0, phi / 2.0), 0.0, 0.0, 0.0};
}

RigidMotion RigidMotion::translation(complex gamma, double delta) {
  return {1.0, 0.0, gamma, delta};
}

void require_normalized(SpaceKind space, const RigidMotion& m, double tol) {
  // alpha conj(alpha) +/- beta conj(beta) = 1 (upper Euclidean, lower Lorentzian)
  const double n = std::norm(m.alpha) + space.sign * std::norm(m.beta);
  if (std::abs(n - 1.0) > tol) {
    throw std::invalid_argument("rotation parameters violate the unit normalization");
  }
}

SpacePoint rotate_point(SpaceKind space, const RigidMotion& m, SpacePoint p) {
  require_normalized(space, m);
  const Mat2 g = spinor(space, m);
  // Euclidean: H = [[t, zbar],[z, -t]];  Lorentzian: X = [[t, zbar],[z, t]].
  const Mat2 H = {p.t, std::conj(p.z), p.z, space.euclidean() ? -p.t : p.t};
  const Mat2 Hp = g * H * g.dagger();
  return {Hp.m10, Hp.m00.real()};
}

SpacePoint motion_apply_point(SpaceKind space, const RigidMotion& m, SpacePoint p) {
  SpacePoint q = rotate_point(space, m, p);
  return {q.z + m.gamma, q.t + m.delta};
}

LinePoint motion_act_on_line(SpaceKind space, const RigidMotion& m, LinePoint lp) {
  require_normalized(space, m);
  require_in_domain(space, lp.xi);
  const double sg = space.sign;
  const complex den = -sg * std::conj(m.beta) * lp.xi + std::conj(m.alpha);
  if (std::norm(den) < 1e-24) {
    throw std::domain_error("image line leaves the chart (south pole)");
  }
  const complex xi2 = (m.alpha * lp.xi + m.beta) / den;
  require_in_domain(space, xi2);
  complex eta2 = lp.eta / (den * den);
  eta2 += 0.5 * (m.gamma - 2.0 * m.delta * xi2 - sg * std::conj(m.gamma) * xi2 * xi2);
  return {xi2, eta2};
}

LinePoint motion_act_on_line_via_space(SpaceKind space, const RigidMotion& m, LinePoint lp) {
  const SpacePoint p0 = motion_apply_point(space, m, to_space(space, {lp, 0.0}));
  const SpacePoint p1 = motion_apply_point(space, m, to_space(space, {lp, 1.0}));
  Direction d{p1.z - p0.z, p1.t - p0.t};
  const double n2 = std::norm(d.z) + space.sign * d.t * d.t;
  const double sc = std::sqrt(std::abs(n2));
  d.z /= sc;
  d.t /= sc;
  return line_from_point_direction(space, p0, d);
}

RigidMotion motion_compose(SpaceKind space, const RigidMotion& outer, const RigidMotion& inner) {
  require_normalized(space, outer);
  require_normalized(space, inner);
  // FLT matrices [[alpha, beta],[-/+ conj(beta), conj(alpha)]] multiply.
  const double sg = space.sign;
  RigidMotion out;
  out.alpha = outer.alpha * inner.alpha - sg * outer.beta * std::conj(inner.beta);
  out.beta = outer.alpha * inner.beta + outer.beta * std::conj(inner.alpha);
  const SpacePoint tau = rotate_point(space, outer, {inner.gamma, inner.delta});
  out.gamma = tau.z + outer.gamma;
  out.delta = tau.t + outer.delta;
  return out;
}

}  // namespace linespace
