#include "linespace/minimal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "linespace/congruence.hpp"

namespace linespace {

complex minimal_residual(SpaceKind space, const SectionJet& sec, complex xi) {
  require_in_domain(space, xi);
  const Jet3 j = sec.jet(xi);
  const double sg = space.sign;
  const double q = 1.0 + sg * std::norm(xi);
  // delbar( conj(delbar F) / q^2 ) with delbar(conj(delbar F)) = conj(del delbar F)
  return std::conj(j.f_xxb) / (q * q) - 2.0 * sg * xi * std::conj(j.f_xb) / (q * q * q);
}

SectionJet series_section_build(const SeriesSection& ss) {
  const double sg = ss.space.sign;
  const int N = static_cast<int>(ss.lambdas.size());
  BiPoly F(N + 3, N + 3);
  for (int n = 0; n < N; ++n) {
    const complex lam = ss.lambdas[static_cast<std::size_t>(n)];
    const complex lb = std::conj(lam);
    const double n1 = n + 1.0, n2 = n + 2.0, n3 = n + 3.0;
    F.at(n + 3, 0) += 2.0 * lam;
    F.at(0, n + 1) += -lb * (sg * n2 * n3);
    F.at(1, n + 2) += -lb * (2.0 * n1 * n3);
    F.at(2, n + 3) += -lb * (sg * n1 * n2);
  }
  return SectionJet(F);
}

double series_potential_r(const SeriesSection& ss, complex xi) {
  require_in_domain(ss.space, xi);
  const double sg = ss.space.sign;
  const double s = std::norm(xi);
  double total = 0.0;
  complex xp = xi * xi;  // xi^{n+2}
  for (std::size_t n = 0; n < ss.lambdas.size(); ++n) {
    const double nn = static_cast<double>(n);
    total += (3.0 + nn + sg * (1.0 + nn) * s) * 2.0 * (ss.lambdas[n] * xp).real();
    xp *= xi;
  }
  return -2.0 * total / (1.0 + sg * s);
}

SpacePoint weierstrass_surface(SpaceKind space, const HoloPoly& w, complex xi) {
  require_in_domain(space, xi);
  const double sg = space.sign;
  const complex w0 = w.eval(xi), w1 = w.d1(xi), w2 = w.d2(xi);
  const complex z = -sg * (0.5 * xi * xi * w2 - xi * w1 + w0) + 0.5 * std::conj(w2);
  const double t = -sg * (xi * w2 - w1).real();
  return {z, t};
}

complex weierstrass_eta(SpaceKind space, const HoloPoly& w, complex xi) {
  require_in_domain(space, xi);
  const double sg = space.sign;
  const double q = 1.0 + sg * std::norm(xi);
  const complex w0 = w.eval(xi), w1 = w.d1(xi), w2 = w.d2(xi);
  return 0.25 * q * q * std::conj(w2) - sg * 0.5 * xi * q * std::conj(w1) +
         0.5 * xi * xi * std::conj(w0) - sg * 0.5 * w0;
}

SectionJet weierstrass_section(SpaceKind space, const HoloPoly& w) {
  // eta = q^2 conj(w'')/4 -/+ xi q conj(w')/2 + xi^2 conj(w)/2 -/+ w/2 is a
  // bidegree polynomial in (xi, xibar); q = 1 +/- xi xibar.
  const double sg = space.sign;
  const int deg = static_cast<int>(w.coeffs().size()) - 1;
  const int d = std::max(deg, 2);
  BiPoly F(d + 2, d + 2);

  auto add_xik_times_conj = [&F](int k, const std::vector<complex>& holo, complex scale) {
    // scale * xi^k * conj(holo(xi)) = scale * xi^k * sum conj(c_j) xibar^j
    for (int jj = 0; jj < static_cast<int>(holo.size()); ++jj) {
      F.at(k, jj) += scale * std::conj(holo[static_cast<std::size_t>(jj)]);
    }
  };

  const auto& c = w.coeffs();
  std::vector<complex> w1c, w2c;
  for (std::size_t k = 1; k < c.size(); ++k) w1c.push_back(static_cast<double>(k) * c[k]);
  for (std::size_t k = 1; k < w1c.size(); ++k) w2c.push_back(static_cast<double>(k) * w1c[k]);
  if (w2c.empty()) w2c.push_back(0.0);
  if (w1c.empty()) w1c.push_back(0.0);

  // q^2/4 conj(w'') = (1 + 2 sg s + s^2)/4 conj(w''),  s = xi xibar
  add_xik_times_conj(0, w2c, 0.25);
  for (int jj = 0; jj < static_cast<int>(w2c.size()); ++jj) {
    F.at(1, jj + 1) += 0.5 * sg * std::conj(w2c[static_cast<std::size_t>(jj)]);
    F.at(2, jj + 2) += 0.25 * std::conj(w2c[static_cast<std::size_t>(jj)]);
  }
  // -/+ xi q conj(w')/2 = -/+ (xi + sg xi^2 xibar) conj(w')/2
  add_xik_times_conj(1, w1c, -sg * 0.5);
  for (int jj = 0; jj < static_cast<int>(w1c.size()); ++jj) {
    F.at(2, jj + 1) += -0.5 * std::conj(w1c[static_cast<std::size_t>(jj)]);
  }
  // + xi^2 conj(w)/2
  add_xik_times_conj(2, c, 0.5);
  // -/+ w/2
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    F.at(k, 0) += -sg * 0.5 * c[static_cast<std::size_t>(k)];
  }
  return SectionJet(F);
}

bool weierstrass_flat_point(const HoloPoly& w, complex xi, double tol) {
  return std::abs(w.d3(xi)) < tol;
}

int umbilic_winding(SpaceKind space, const SectionJet& sec, complex center,
                    double radius, int samples, double clearance) {
  if (samples < 16) throw std::invalid_argument("need at least 16 contour samples");
  double total = 0.0;
  double prev_arg = 0.0;
  for (int k = 0; k <= samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    const complex xi = center + std::polar(radius, th);
    const Slopes sl = slopes(space, sec, xi);
    if (std::abs(sl.sigma0) < clearance) {
      throw std::invalid_argument("sigma0 vanishes on the winding contour");
    }
    const double a = std::arg(sl.sigma0);
    if (k > 0) {
      double d = a - prev_arg;
      while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
      while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
      total += d;
    }
    prev_arg = a;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace linespace
