#include "linespace/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "linespace/kahler.hpp"

namespace linespace {

namespace {
constexpr complex kI{0.0, 1.0};
}

Slopes slopes(SpaceKind space, const SectionJet& sec, complex xi) {
  const ConformalData cd = conformal_data(space, xi);
  const Jet3 j = sec.jet(xi);
  return {-std::conj(j.f_xb), j.f_x + 2.0 * j.f * cd.du};
}

std::pair<complex, complex> dplus_dminus(SpaceKind space,
                                         const ParametricCongruence& cong,
                                         complex nu, double r) {
  const CongruenceJet j = cong.jet(nu);
  require_in_domain(space, j.xi);
  const double s = std::norm(j.xi);
  const complex fib = -static_cast<double>(space.sign) * 2.0 * std::conj(j.xi) * j.eta /
                      (1.0 + space.sign * s);
  const complex dplus = j.eta_nu + (r + fib) * j.xi_nu;
  const complex dminus = j.eta_nub + (r + fib) * j.xi_nub;
  return {dplus, dminus};
}

OpticalScalars spin_coefficients_parametric(SpaceKind space,
                                            const ParametricCongruence& cong,
                                            complex nu, double r,
                                            double degenerate_tol) {
  const CongruenceJet j = cong.jet(nu);
  const auto [dplus, dminus] = dplus_dminus(space, cong, nu, r);
  const double den = std::norm(dplus) - std::norm(dminus);
  const double scale = std::norm(dplus) + std::norm(dminus) +
                       std::norm(j.xi_nu) + std::norm(j.xi_nub);
  if (std::abs(den) < degenerate_tol * std::max(1.0, scale)) {
    throw std::domain_error("degenerate null frame: |d+eta|^2 - |d-eta|^2 ~ 0");
  }
  const complex rho = (dplus * std::conj(j.xi_nu) - dminus * std::conj(j.xi_nub)) / den;
  const complex sigma =
      (std::conj(dplus) * std::conj(j.xi_nub) - std::conj(dminus) * std::conj(j.xi_nu)) / den;
  return {rho, sigma};
}

OpticalScalars spin_coefficients_from_slopes(const Slopes& sl, double r) {
  const complex R = r + sl.rho0;
  const double den = std::norm(R) - std::norm(sl.sigma0);
  return {R / den, sl.sigma0 / den};
}

double lagrangian_residual(SpaceKind space, const ParametricCongruence& cong, complex nu) {
  const CongruenceJet j = cong.jet(nu);
  const ConformalData cd = conformal_data(space, j.xi);
  const complex t1 = j.eta_nu * std::conj(j.xi_nu) + std::conj(j.eta_nub) * j.xi_nub;
  const double t2 = std::norm(j.xi_nu) - std::norm(j.xi_nub);
  return 2.0 * cd.e2u * (t1 + 2.0 * j.eta * cd.du * t2).imag();
}

double lagrangian_residual(SpaceKind space, const SectionJet& sec, complex xi) {
  const ConformalData cd = conformal_data(space, xi);
  const Slopes sl = slopes(space, sec, xi);
  return 2.0 * cd.e2u * sl.rho0.imag();
}

double holomorphic_residual(SpaceKind space, const ParametricCongruence& cong, complex nu) {
  const CongruenceJet j = cong.jet(nu);
  const ConformalData cd = conformal_data(space, j.xi);
  const double m = std::abs(j.xi_nu * j.eta_nub - j.eta_nu * j.xi_nub);
  return cd.e2u * cd.e2u * m * m;
}

double holomorphic_residual(SpaceKind space, const SectionJet& sec, complex xi) {
  const ConformalData cd = conformal_data(space, xi);
  const Jet3 j = sec.jet(xi);
  return cd.e2u * cd.e2u * std::norm(j.f_xb);
}

InducedMetric induced_metric(SpaceKind space, const ParametricCongruence& cong,
                             complex nu, double degenerate_tol) {
  const CongruenceJet j = cong.jet(nu);
  const LinePoint p{j.xi, j.eta};
  const TangentVector eu{j.xi_nu + j.xi_nub, j.eta_nu + j.eta_nub};
  const TangentVector ev{kI * (j.xi_nu - j.xi_nub), kI * (j.eta_nu - j.eta_nub)};
  InducedMetric out;
  out.e = metric_value(space, p, eu, eu);
  out.f = metric_value(space, p, eu, ev);
  out.g = metric_value(space, p, ev, ev);
  out.det = out.e * out.g - out.f * out.f;
  const double scale = out.e * out.e + 2.0 * out.f * out.f + out.g * out.g;
  if (std::abs(out.det) <= degenerate_tol * std::max(1.0, scale)) {
    out.signature = InducedSignature::degenerate;
  } else {
    out.signature = out.det < 0 ? InducedSignature::lorentzian : InducedSignature::riemannian;
  }
  return out;
}

namespace {

// 8-point Gauss-Legendre nodes/weights on [0, 1].
constexpr int kGL = 8;
constexpr double kGLNode[kGL] = {
    0.01985507175123188415821957, 0.10166676129318663020422303,
    0.23723379504183550709113047, 0.40828267875217509753026193,
    0.59171732124782490246973807, 0.76276620495816449290886953,
    0.89833323870681336979577697, 0.98014492824876811584178043};
constexpr double kGLWeight[kGL] = {
    0.05061426814518812957626567, 0.11119051722668723527217800,
    0.15685332293894364366898110, 0.18134189168918099148257522,
    0.18134189168918099148257522, 0.15685332293894364366898110,
    0.11119051722668723527217800, 0.05061426814518812957626567};

complex support_one_form(SpaceKind space, const SectionJet& sec, complex xi) {
  // delbar r = +/- 2F/(1 +/- xi xibar)^2
  const double q = 1.0 + space.sign * std::norm(xi);
  return static_cast<double>(space.sign) * 2.0 * sec.eval(xi) / (q * q);
}

}  // namespace

double support_integrate(SpaceKind space, const SectionJet& sec,
                         std::span<const complex> path, double r0,
                         const SupportOptions& opt) {
  if (path.size() < 2) return r0;
  double r = r0;
  for (std::size_t e = 0; e + 1 < path.size(); ++e) {
    const complex a = path[e];
    const complex b = path[e + 1];
    const complex d = b - a;
    // gate: the 1-form is closed only on Lagrangian sections
    const complex mid = a + 0.5 * d;
    if (in_domain(space, mid) &&
        std::abs(lagrangian_residual(space, sec, mid)) > opt.lagrangian_tol) {
      throw std::invalid_argument("support function requested for a non-Lagrangian section");
    }
    const int n = std::max(1, opt.subdivisions);
    double acc = 0.0;
    for (int panel = 0; panel < n; ++panel) {
      for (int g = 0; g < kGL; ++g) {
        const double tau = (panel + kGLNode[g]) / n;
        const complex xi = a + tau * d;
        acc += kGLWeight[g] * 2.0 *
               (support_one_form(space, sec, xi) * std::conj(d)).real();
      }
    }
    r += acc / n;
  }
  return r;
}

complex slope_relation_residual(SpaceKind space, const SectionJet& sec, complex xi) {
  const ConformalData cd = conformal_data(space, xi);
  const Jet3 j = sec.jet(xi);

  // RHS: -e^{-2u} del(sigma0bar e^{2u}) - F e^{2u} kappa / 2, from the point jet.
  const complex rhs = j.f_xxb + 2.0 * j.f_xb * cd.du -
                      0.5 * j.f * cd.e2u * static_cast<double>(space.kappa);

  // LHS: delbar of the rho0 field, through its own differentiation route.
  complex lhs;
  if (sec.provenance() == JetProvenance::analytic) {
    lhs = j.f_xxb + 2.0 * j.f_xb * cd.du + 2.0 * j.f * cd.dbar_du;
  } else {
    // order-4 first-derivative stencils applied to the rho0 field
    const double h = sec.fd_step();
    auto rho0_field = [&](complex z) {
      const Jet3 jz = sec.jet(z);
      return jz.f_x + 2.0 * jz.f * conformal_data(space, z).du;
    };
    const double w[2] = {2.0 / 3.0, -1.0 / 12.0};
    complex dx{}, dy{};
    for (int k = 1; k <= 2; ++k) {
      dx += w[k - 1] * (rho0_field(xi + complex(k * h, 0)) - rho0_field(xi - complex(k * h, 0)));
      dy += w[k - 1] * (rho0_field(xi + complex(0, k * h)) - rho0_field(xi - complex(0, k * h)));
    }
    lhs = 0.5 * (dx / h + kI * (dy / h));
  }
  return lhs - rhs;
}

namespace {

double local_section_scale(const Jet3& j) {
  return 1.0 + std::abs(j.f) + std::abs(j.f_x) + std::abs(j.f_xb);
}

}  // namespace

double scalar_curvature_graph(SpaceKind space, const SectionJet& sec, complex xi,
                              double umbilic_tol) {
  const ConformalData cd = conformal_data(space, xi);
  const Jet3 j = sec.jet(xi);
  const complex sigma0 = -std::conj(j.f_xb);
  if (std::abs(sigma0) < umbilic_tol * local_section_scale(j)) {
    throw std::domain_error("scalar curvature undefined at an umbilic point (sigma0 ~ 0)");
  }
  // del(|sigma0|^2) and delbar(r + rho0) = -( del(sigma0bar) + 2 sigma0bar del u ).
  const complex d_s2 = j.f_xb * std::conj(j.f_xbxb) + std::conj(j.f_xb) * j.f_xxb;
  const complex dbar_rp = j.f_xxb + 2.0 * j.f_xb * cd.du;
  const double q = 1.0 + space.sign * std::norm(xi);
  const double s4 = std::norm(sigma0) * std::norm(sigma0);
  return -(q * q) / (8.0 * s4) * (d_s2 * dbar_rp).imag();
}

PrincipalCurvatures principal_curvatures(complex rho, complex sigma, double tol) {
  if (std::abs(rho.imag()) > tol * std::max(1.0, std::abs(rho))) {
    throw std::invalid_argument("rho is not real: congruence is not surface-orthogonal here");
  }
  const double m = std::abs(sigma);
  return {rho.real() + m, rho.real() - m, 0.5 * std::arg(sigma)};
}

SpinData analyze_graph_point(SpaceKind space, const SectionJet& sec, complex xi,
                             double r, double umbilic_tol) {
  const Slopes sl = slopes(space, sec, xi);
  const OpticalScalars os = spin_coefficients_from_slopes(sl, r);
  SpinData out;
  out.sigma0 = sl.sigma0;
  out.rho0 = sl.rho0.real();
  out.r = r;
  out.rho = os.rho.real();
  out.sigma = os.sigma;
  const Jet3 j = sec.jet(xi);
  out.umbilic = std::abs(sl.sigma0) < umbilic_tol * local_section_scale(j);
  const PrincipalCurvatures pc = principal_curvatures(os.rho, os.sigma);
  out.lambda1 = pc.lambda1;
  out.lambda2 = pc.lambda2;
  out.K = out.umbilic ? std::numeric_limits<double>::quiet_NaN()
                      : scalar_curvature_graph(space, sec, xi, umbilic_tol);
  return out;
}

WeingartenReport weingarten_test(SpaceKind space, const SectionJet& sec,
                                 const WeingartenOptions& opt) {
  const int n = opt.grid;
  if (n < 7) throw std::invalid_argument("weingarten grid must be at least 7x7");
  const double hg = 2.0 * opt.extent / (n - 1);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> l1(static_cast<std::size_t>(n) * n, nan);
  std::vector<double> l2(static_cast<std::size_t>(n) * n, nan);
  auto node = [&](int i, int j) {
    return complex(-opt.extent + i * hg, -opt.extent + j * hg);
  };

  WeingartenReport rep{};
  rep.max_abs_k = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int jx = 0; jx < n; ++jx) {
      const complex xi = node(i, jx);
      if (!in_domain(space, xi)) continue;
      if (std::abs(lagrangian_residual(space, sec, xi)) > 1e-6) {
        throw std::invalid_argument("weingarten test requires a Lagrangian section");
      }
      const complex pathpts[2] = {complex{0.0, 0.0}, xi};
      const double r = support_integrate(space, sec, pathpts, 0.0);
      const SpinData sd = analyze_graph_point(space, sec, xi, r, opt.umbilic_tol);
      ++rep.evaluated_cells;
      if (sd.umbilic) {
        ++rep.umbilic_cells;
        continue;
      }
      rep.max_abs_k = std::max(rep.max_abs_k, std::abs(sd.K));
      l1[static_cast<std::size_t>(i) * n + jx] = sd.lambda1;
      l2[static_cast<std::size_t>(i) * n + jx] = sd.lambda2;
    }
  }

  // wedge d l1 ^ d l2 by order-4 central differences over the grid
  auto at = [&](const std::vector<double>& v, int i, int j) {
    return v[static_cast<std::size_t>(i) * n + j];
  };
  auto d4 = [&](const std::vector<double>& v, int i, int j, bool in_i) {
    auto g = [&](int k) { return in_i ? at(v, i + k, j) : at(v, i, j + k); };
    return (g(-2) - 8.0 * g(-1) + 8.0 * g(1) - g(2)) / (12.0 * hg);
  };
  rep.max_abs_wedge = 0.0;
  rep.max_rel_wedge = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    for (int jx = 2; jx < n - 2; ++jx) {
      bool ok = true;
      for (int k = -2; k <= 2 && ok; ++k) {
        ok = std::isfinite(at(l1, i + k, jx)) && std::isfinite(at(l1, i, jx + k));
      }
      if (!ok) continue;
      const double d1x = d4(l1, i, jx, true), d1y = d4(l1, i, jx, false);
      const double d2x = d4(l2, i, jx, true), d2y = d4(l2, i, jx, false);
      const double wedge = d1x * d2y - d1y * d2x;
      const double mag = std::hypot(d1x, d1y) * std::hypot(d2x, d2y);
      rep.max_abs_wedge = std::max(rep.max_abs_wedge, std::abs(wedge));
      if (mag > 1e-12) {
        rep.max_rel_wedge = std::max(rep.max_rel_wedge, std::abs(wedge) / mag);
      }
    }
  }

  rep.is_weingarten = rep.max_abs_k <= opt.k_tol;
  rep.wedge_verdict = rep.max_rel_wedge <= opt.wedge_rel_tol;
  rep.detectors_agree = rep.is_weingarten == rep.wedge_verdict;
  return rep;
}

SectionJet transform_graph_section(SpaceKind space, const RigidMotion& m,
                                   const SectionJet& sec, double fd_step) {
  require_normalized(space, m);
  const bool pure_translation = m.alpha == complex(1.0) && m.beta == complex(0.0);
  const bool t_rotation = m.beta == complex(0.0) && std::abs(std::abs(m.alpha) - 1.0) < 1e-14;

  if (sec.poly() != nullptr && (pure_translation || t_rotation)) {
    BiPoly F = *sec.poly();
    if (t_rotation && m.alpha != complex(1.0)) {
      // xi' = e^{i phi} xi, eta' = e^{i phi} eta:
      // F'(xi') = e^{i phi} F(e^{-i phi} xi') scales c_mn by e^{i phi (1 - m + n)}
      const double phi = 2.0 * std::arg(m.alpha);
      BiPoly rot(F.deg_xi(), F.deg_xib());
      for (int mm = 0; mm <= F.deg_xi(); ++mm)
        for (int nn = 0; nn <= F.deg_xib(); ++nn)
          rot.at(mm, nn) = F.at(mm, nn) * std::polar(1.0, phi * (1 - mm + nn));
      F = rot;
    }
    // translation shift of eta: + (gamma - 2 delta xi - sign conj(gamma) xi^2)/2
    BiPoly shift(2, 0);
    shift.at(0, 0) = 0.5 * m.gamma;
    shift.at(1, 0) = -m.delta;
    shift.at(2, 0) = -0.5 * static_cast<double>(space.sign) * std::conj(m.gamma);
    F += shift;
    return SectionJet(F);
  }

  // general motion: go through the line-space action pointwise
  const RigidMotion inv_rot = RigidMotion::rotation(std::conj(m.alpha), -m.beta);
  const SectionJet base = sec;
  auto evaluator = [space, m, inv_rot, base](complex xi_image) -> complex {
    const double sg = space.sign;
    const complex den = -sg * std::conj(inv_rot.beta) * xi_image + std::conj(inv_rot.alpha);
    const complex xi = (inv_rot.alpha * xi_image + inv_rot.beta) / den;
    const LinePoint moved = motion_act_on_line(space, m, {xi, base.eval(xi)});
    return moved.eta;
  };
  return SectionJet(evaluator, fd_step);
}

}  // namespace linespace
