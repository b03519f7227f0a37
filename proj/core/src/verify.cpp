#include "linespace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "linespace/congruence.hpp"
#include "linespace/geodesic.hpp"
#include "linespace/isometry.hpp"
#include "linespace/kahler.hpp"
#include "linespace/line_map.hpp"
#include "linespace/minimal.hpp"
#include "linespace/rng.hpp"

// Randomized verification of every structural identity the library rests on.
// Each suite reports its worst residual; a suite passes when the residual is
// on the right side of its tolerance (mode "at_most" for identities, mode
// "at_least" for negative controls and winding bounds).

namespace linespace {

namespace {

constexpr complex kI{0.0, 1.0};

double xi_radius(SpaceKind space) { return space.lorentzian() ? 0.8 : 2.0; }

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name, SpaceKind space) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (char c : name) h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ull;
  return h ^ static_cast<std::uint64_t>(space.sign + 7);
}

// ---- fixtures -------------------------------------------------------------

BiPoly random_section_poly(Rng& rng, int deg, double scale) {
  BiPoly p(deg, deg);
  for (int m = 0; m <= deg; ++m)
    for (int n = 0; n <= deg; ++n)
      p.at(m, n) = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  return p;
}

// Rotationally symmetric sections F = xi g(xi xibar), g real, are Lagrangian
// and their orthogonal surfaces are surfaces of revolution.
BiPoly rotational_section(double g0, double g1) {
  BiPoly p(2, 1);
  p.at(1, 0) = g0;
  p.at(2, 1) = g1;
  return p;
}

// A Lagrangian perturbation that destroys the rotational symmetry:
// eps (1 + sign s)^2 (xi + xibar)/4 contributes the real constant
// eps (1 + sign s)^2/4 to rho0.
BiPoly perturbed_section(SpaceKind space, double g0, double g1, double eps) {
  BiPoly p = rotational_section(g0, g1);
  const double sg = space.sign;
  BiPoly q(3, 3);
  q.at(1, 0) = 0.25 * eps;
  q.at(0, 1) = 0.25 * eps;
  q.at(2, 1) = 0.5 * eps * sg;
  q.at(1, 2) = 0.5 * eps * sg;
  q.at(3, 2) = 0.25 * eps;
  q.at(2, 3) = 0.25 * eps;
  p += q;
  return p;
}

const complex kDesignatedPoint{0.3, 0.2};

// ---- independent curvature oracle ----------------------------------------
// Gauss curvature of the induced metric field by the Brioschi formula with
// central differences of the (analytically evaluated) metric entries.  This
// route never touches the slope-based curvature formula.

double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double brioschi_curvature_step(SpaceKind space, const SectionJet& sec, complex xi, double h);

// Richardson-extrapolated oracle: the two-step combination cancels the h^2
// truncation of the central differences.
double brioschi_curvature(SpaceKind space, const SectionJet& sec, complex xi, double h) {
  return (4.0 * brioschi_curvature_step(space, sec, xi, 0.5 * h) -
          brioschi_curvature_step(space, sec, xi, h)) /
         3.0;
}

double brioschi_curvature_step(SpaceKind space, const SectionJet& sec, complex xi, double h) {
  const ParametricCongruence cong = ParametricCongruence::graph(sec);
  auto entry = [&](double x, double y, int which) {
    const InducedMetric im = induced_metric(space, cong, complex(x, y));
    return which == 0 ? im.e : which == 1 ? im.f : im.g;
  };
  const double x = xi.real(), y = xi.imag();
  auto d1x = [&](int w) { return (entry(x + h, y, w) - entry(x - h, y, w)) / (2 * h); };
  auto d1y = [&](int w) { return (entry(x, y + h, w) - entry(x, y - h, w)) / (2 * h); };
  auto d2xx = [&](int w) {
    return (entry(x + h, y, w) - 2 * entry(x, y, w) + entry(x - h, y, w)) / (h * h);
  };
  auto d2yy = [&](int w) {
    return (entry(x, y + h, w) - 2 * entry(x, y, w) + entry(x, y - h, w)) / (h * h);
  };
  auto d2xy = [&](int w) {
    return (entry(x + h, y + h, w) - entry(x + h, y - h, w) - entry(x - h, y + h, w) +
            entry(x - h, y - h, w)) /
           (4 * h * h);
  };
  const double E = entry(x, y, 0), F = entry(x, y, 1), G = entry(x, y, 2);
  const double M1[3][3] = {
      {-0.5 * d2yy(0) + d2xy(1) - 0.5 * d2xx(2), 0.5 * d1x(0), d1x(1) - 0.5 * d1y(0)},
      {d1y(1) - 0.5 * d1x(2), E, F},
      {0.5 * d1y(2), F, G}};
  const double M2[3][3] = {{0.0, 0.5 * d1y(0), 0.5 * d1x(2)}, {0.5 * d1y(0), E, F},
                           {0.5 * d1x(2), F, G}};
  const double det = E * G - F * F;
  return (det3(M1) - det3(M2)) / (det * det);
}

// ---- suite registry -------------------------------------------------------

enum class Mode { at_most, at_least };

struct SuiteSpec {
  std::string name;
  std::vector<SpaceKind> spaces;
  long default_samples;
  double default_tol;
  Mode mode;
  std::function<double(SpaceKind, std::uint64_t, long)> worst;
};

double suite_wirtinger(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const LinePoint p{rng.chart_point(space, xi_radius(space)), rng.disc(2.0)};
    const TangentVector v{rng.disc(2.0), rng.disc(2.0)};
    const TangentVector w{rng.disc(2.0), rng.disc(2.0)};
    const double om = symplectic_value(space, p, v, w);
    const double s2 = sigma_squared(space, p, v, w);
    const double gvv = metric_value(space, p, v, v);
    const double gww = metric_value(space, p, w, w);
    const double gvw = metric_value(space, p, v, w);
    const double res = wirtinger_residual(space, p, v, w);
    const double scale = std::max({om * om, s2, std::abs(gvv * gww), gvw * gvw, 1.0});
    worst = std::max(worst, std::abs(res) / scale);
    // complex planes have vanishing sigma^2
    worst = std::max(worst, sigma_squared(space, p, v, apply_complex_structure(v)) / scale);
  }
  return worst;
}

double suite_compatibility(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const LinePoint p{rng.chart_point(space, xi_radius(space)), rng.disc(2.0)};
    const TangentVector v{rng.disc(2.0), rng.disc(2.0)};
    const TangentVector w{rng.disc(2.0), rng.disc(2.0)};
    const double g = metric_value(space, p, v, w);
    const double o = symplectic_value(space, p, apply_complex_structure(v), w);
    worst = std::max(worst, std::abs(g - o) / std::max(1.0, std::abs(g)));
  }
  return worst;
}

double suite_linemap_roundtrip(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const complex xi = rng.disc(0.9);
    const complex eta = rng.disc(1.0);
    const double r = rng.uniform(-1.0, 1.0);
    const SpacePoint p = to_space(space, {{xi, eta}, r});
    const LineWithParam back = from_space(space, xi, p);
    const double scale = std::max({1.0, std::abs(eta), std::abs(r)});
    worst = std::max(worst, std::abs(back.line.eta - eta) / scale);
    worst = std::max(worst, std::abs(back.r - r) / scale);
    // direction normalization and the reconstruction round trip
    const Direction d = direction_vector(space, xi);
    worst = std::max(worst,
                     std::abs(std::norm(d.z) + space.sign * d.t * d.t - space.sign));
    const LinePoint rec = line_from_point_direction(space, p, d);
    worst = std::max(worst, std::abs(rec.xi - xi) / scale);
    worst = std::max(worst, std::abs(rec.eta - eta) / scale);
  }
  return worst;
}

double suite_linemap_eta_invariance(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  const double h = 1e-3;
  for (long k = 0; k < n; ++k) {
    const complex xi = rng.disc(0.9);
    const complex eta = rng.disc(1.0);
    const double r = rng.uniform(-1.0, 1.0);
    const SpacePoint p = to_space(space, {{xi, eta}, r});
    const Direction d = direction_vector(space, xi);
    const SpacePoint pp{p.z + h * d.z, p.t + h * d.t};
    const SpacePoint pm{p.z - h * d.z, p.t - h * d.t};
    const complex deta =
        (from_space(space, xi, pp).line.eta - from_space(space, xi, pm).line.eta) / (2 * h);
    worst = std::max(worst, std::abs(deta));
  }
  return worst;
}

LinePoint killing_sample(Rng& rng) { return {rng.disc(0.6), rng.disc(1.0)}; }

double suite_killing(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  const auto basis = killing_basis(space);
  for (long k = 0; k < n; ++k) {
    const LinePoint p = killing_sample(rng);
    for (const KillingField& f : basis) {
      worst = std::max(worst, killing_residual(f, space, p, 1e-5));
    }
    // the isomorphism a0 -> b1 = i a0 sends rotations to Killing data
    for (int j = 0; j < 3; ++j) {
      KillingField img;
      img.b1 = {kI * basis[j].a0.c0, kI * basis[j].a0.c1, kI * basis[j].a0.c2};
      worst = std::max(worst, killing_residual(img, space, p, 1e-5));
    }
  }
  return worst;
}

double suite_killing_negative(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  KillingField bad;
  bad.a0 = {0.0, 0.0, 1.0};  // a0 = xi^2 alone breaks the rotation pairing
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    worst = std::max(worst, killing_residual(bad, space, killing_sample(rng), 1e-5));
  }
  return worst;
}

GeodesicParams random_params(Rng& rng) {
  GeodesicParams gp;
  gp.c1 = rng.uniform(-1.5, 1.5);
  gp.c2 = rng.uniform(0.1, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  gp.c5 = rng.uniform(-1.5, 1.5);
  gp.theta = rng.uniform(0.0, 6.283185307179586);
  return gp;
}

double suite_geodesic_closed_form(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const GeodesicParams gp = random_params(rng);
    const GeodesicState st0 = closed_form_th2_state(gp, 0.0);
    const auto traj = integrate_geodesic(space, st0, 1.0, 1e-3);
    for (std::size_t i = 0; i < traj.size(); i += 25) {
      const GeodesicState ref = closed_form_th2_state(gp, traj[i].s);
      worst = std::max(worst, std::abs(traj[i].xi - ref.xi));
      worst = std::max(worst, std::abs(traj[i].eta - ref.eta));
    }
  }
  return worst;
}

double suite_geodesic_conservation(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const GeodesicParams gp = random_params(rng);
    const GeodesicState st0 = closed_form_th2_state(gp, 0.0);
    const double g0 = metric_value(space, {st0.xi, st0.eta}, {st0.dxi, st0.deta},
                                   {st0.dxi, st0.deta});
    const auto traj = integrate_geodesic(space, st0, 1.0, 1e-3);
    for (std::size_t i = 0; i < traj.size(); i += 50) {
      const GeodesicState& st = traj[i];
      const double c1 = first_integral(space, st);
      const double g = metric_value(space, {st.xi, st.eta}, {st.dxi, st.deta},
                                    {st.dxi, st.deta});
      worst = std::max(worst, std::abs(c1 - gp.c1));          // C1 conserved (RK4 drift)
      worst = std::max(worst, std::abs(g - g0));              // affine parametrization
      worst = std::max(worst, std::abs(g - 2.0 * c1));        // null iff C1 = 0
      // closed form carries the same constants exactly
      const GeodesicState ref = closed_form_th2_state(gp, st.s);
      worst = std::max(worst, std::abs(first_integral(space, ref) - gp.c1));
    }
  }
  return worst;
}

double suite_geodesic_ruled(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    GeodesicParams gp;  // standard position: theta = 0, c5 = 0
    gp.c1 = rng.uniform(0.2, 2.0);
    gp.c2 = rng.uniform(0.2, 1.0);
    const RuledSurface rs = ruled_surface(space, gp, 0.0, 1.0, 9, -1.0, 1.0, 7);
    for (std::size_t i = 0; i < rs.s_values.size(); ++i) {
      for (std::size_t j = 0; j < rs.r_values.size(); ++j) {
        const double s = rs.s_values[i], r = rs.r_values[j];
        const SpacePoint& p = rs.at(i, j);
        worst = std::max(worst, std::abs(p.z.real() - r * std::sinh(2 * gp.c2 * s)));
        worst = std::max(worst, std::abs(p.z.imag() + gp.c1 * s / (2 * gp.c2)));
        worst = std::max(worst, std::abs(p.t - r * std::cosh(2 * gp.c2 * s)));
      }
    }
  }
  return worst;
}

double suite_geodesic_plane(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    GeodesicParams gp;
    gp.c1 = 0.0;
    gp.c2 = rng.uniform(0.2, 1.0);
    const RuledSurface rs = ruled_surface(space, gp, 0.0, 1.0, 9, -1.0, 1.0, 7);
    for (const SpacePoint& p : rs.points) worst = std::max(worst, std::abs(p.z.imag()));
  }
  return worst;
}

double suite_optical_sphere(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  const SectionJet sec{BiPoly{}};  // F == 0: the lines through the origin
  const ParametricCongruence cong = ParametricCongruence::graph(sec);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const complex xi = rng.chart_point(space, space.lorentzian() ? 0.7 : 1.5);
    const double R = rng.uniform(0.4, 3.0);
    const OpticalScalars os = spin_coefficients_parametric(space, cong, xi, R);
    worst = std::max(worst, std::abs(os.rho - 1.0 / R));
    worst = std::max(worst, std::abs(os.sigma));
  }
  return worst;
}

double suite_optical_parametric(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const SectionJet sec{random_section_poly(rng, 3, 0.4)};
    const ParametricCongruence cong = ParametricCongruence::graph(sec);
    for (int j = 0; j < 8; ++j) {
      const complex xi = rng.chart_point(space, 0.6);
      const double r = rng.uniform(0.5, 2.0);
      // skip focal points: when |r+rho0|^2 - |sigma0|^2 ~ 0 the scalars blow
      // up and any comparison measures cancellation noise
      const Slopes sl = slopes(space, sec, xi);
      const double m = std::norm(r + sl.rho0) + std::norm(sl.sigma0);
      if (std::abs(std::norm(r + sl.rho0) - std::norm(sl.sigma0)) < 0.05 * m) continue;
      const OpticalScalars a = spin_coefficients_parametric(space, cong, xi, r);
      const OpticalScalars b = spin_coefficients_from_slopes(sl, r);
      const double scale = std::max({1.0, std::abs(a.rho), std::abs(a.sigma)});
      worst = std::max(worst, std::abs(a.rho - b.rho) / scale);
      worst = std::max(worst, std::abs(a.sigma - b.sigma) / scale);
    }
  }
  return worst;
}

double slope_relation_worst(SpaceKind space, std::uint64_t seed, long n, bool finite_difference) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    const BiPoly poly = random_section_poly(rng, 3, 0.4);
    const SectionJet sec =
        finite_difference
            ? SectionJet([poly](complex z) { return poly.eval(z); })
            : SectionJet(poly);
    for (int j = 0; j < 5; ++j) {
      const complex xi = rng.chart_point(space, 0.5);
      worst = std::max(worst, std::abs(slope_relation_residual(space, sec, xi)));
    }
  }
  return worst;
}

double suite_slope_relation_analytic(SpaceKind space, std::uint64_t seed, long n) {
  return slope_relation_worst(space, seed, n, false);
}

double suite_slope_relation_fd(SpaceKind space, std::uint64_t seed, long n) {
  return slope_relation_worst(space, seed, n, true);
}

double suite_weingarten_rotational(SpaceKind space, std::uint64_t seed, long n) {
  (void)seed;
  (void)n;
  const SectionJet sec{rotational_section(0.1, 0.1)};
  WeingartenOptions opt;
  opt.grid = 20;
  opt.extent = 0.45;
  const WeingartenReport rep = weingarten_test(space, sec, opt);
  if (!rep.is_weingarten || !rep.detectors_agree) return 1.0;  // force a failure
  return rep.max_abs_k;
}

double suite_weingarten_perturbed(SpaceKind space, std::uint64_t seed, long n) {
  (void)seed;
  (void)n;
  const SectionJet sec{perturbed_section(space, 0.1, 0.1, 0.1)};
  // both detectors must reject; report |K| at the designated point
  WeingartenOptions opt;
  opt.grid = 20;
  opt.extent = 0.45;
  const WeingartenReport rep = weingarten_test(space, sec, opt);
  if (rep.is_weingarten || rep.wedge_verdict) return 0.0;  // force a failure
  return std::abs(scalar_curvature_graph(space, sec, kDesignatedPoint));
}

double suite_curvature_crosscheck(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  const SectionJet rot{rotational_section(0.1, 0.1)};
  const SectionJet pert{perturbed_section(space, 0.1, 0.1, 0.1)};
  for (long k = 0; k < n; ++k) {
    const complex xi = rng.disc(0.55) + complex(0.05, 0.05);
    for (const SectionJet* sec : {&rot, &pert}) {
      const Slopes sl = slopes(space, *sec, xi);
      // both sides divide by powers of |sigma0|; near-umbilic points measure
      // amplification, not the identity
      if (std::abs(sl.sigma0) < 0.02) continue;
      const double kf = scalar_curvature_graph(space, *sec, xi);
      const double kb = brioschi_curvature(space, *sec, xi, 1e-3);
      worst = std::max(worst, std::abs(kf - kb) / std::max(1.0, std::abs(kf)));
    }
  }
  worst = std::max(worst, std::abs(scalar_curvature_graph(space, pert, kDesignatedPoint) -
                                   brioschi_curvature(space, pert, kDesignatedPoint, 1e-3)));
  return worst;
}

double suite_weingarten_minimal(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    SeriesSection ss{space, {}};
    for (int j = 0; j < 3; ++j) ss.lambdas.push_back(rng.disc(0.5));
    const SectionJet sec = series_section_build(ss);
    for (int j = 0; j < 6; ++j) {
      const complex xi = rng.chart_point(space, 0.6);
      const Slopes sl = slopes(space, sec, xi);
      // the formula divides by |sigma0|^4; stay away from umbilics so the
      // 1e-10 contract measures the identity and not roundoff amplification
      if (std::abs(sl.sigma0) < 0.05) continue;
      worst = std::max(worst, std::abs(scalar_curvature_graph(space, sec, xi)));
    }
  }
  return worst;
}

double suite_series_minimal(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    SeriesSection ss{space, {}};
    const int terms = 1 + static_cast<int>(rng.uniform() * 4);
    for (int j = 0; j < terms; ++j) ss.lambdas.push_back(rng.disc(0.5));
    const SectionJet sec = series_section_build(ss);
    for (int j = 0; j < 8; ++j) {
      const complex xi = rng.chart_point(space, 0.7);
      worst = std::max(worst, std::abs(minimal_residual(space, sec, xi)));
      worst = std::max(worst, std::abs(lagrangian_residual(space, sec, xi)));
    }
  }
  return worst;
}

double suite_series_potential(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    SeriesSection ss{space, {rng.disc(0.5), rng.disc(0.5)}};
    const SectionJet sec = series_section_build(ss);
    // endpoint match against the closed-form potential, anchored at 0
    const complex end = rng.chart_point(space, 0.6);
    const complex mid = rng.chart_point(space, 0.6);
    const complex path[3] = {complex{0.0, 0.0}, mid, end};
    const double r = support_integrate(space, sec, path, series_potential_r(ss, 0.0));
    worst = std::max(worst, std::abs(r - series_potential_r(ss, end)));
    // closed loops integrate to zero
    const complex loop[5] = {end, mid, complex{0.1, -0.2}, complex{0.0, 0.0}, end};
    const double r2 = support_integrate(space, sec, loop, 0.0);
    worst = std::max(worst, std::abs(r2));
  }
  return worst;
}

double suite_weierstrass_rho(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    std::vector<complex> wc(5);
    for (complex& c : wc) c = rng.disc(0.6);
    const HoloPoly w(wc);
    const SectionJet sec = weierstrass_section(space, w);
    for (int j = 0; j < 6; ++j) {
      const complex xi = rng.chart_point(space, 0.6);
      // |sigma0| = q^2 |w'''|/4 divides the slope form of rho; skip near-flat
      // points where roundoff in r + rho0 would be amplified past the contract
      if (weierstrass_flat_point(w, xi, 0.1)) continue;
      const SpacePoint p = weierstrass_surface(space, w, xi);
      const LineWithParam lw = from_space(space, xi, p);
      const OpticalScalars os =
          spin_coefficients_from_slopes(slopes(space, sec, xi), lw.r);
      worst = std::max(worst, std::abs(os.rho));
    }
  }
  return worst;
}

double suite_weierstrass_jets(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double worst = 0.0;
  for (long k = 0; k < n; ++k) {
    std::vector<complex> wc(5);
    for (complex& c : wc) c = rng.disc(0.6);
    const HoloPoly w(wc);
    const SectionJet sec = weierstrass_section(space, w);
    for (int j = 0; j < 6; ++j) {
      const complex xi = rng.chart_point(space, 0.6);
      const double q = 1.0 + space.sign * std::norm(xi);
      const Jet3 jet = sec.jet(xi);
      // eta matches the displayed formula and the 3-space pullback
      worst = std::max(worst, std::abs(jet.f - weierstrass_eta(space, w, xi)));
      const SpacePoint p = weierstrass_surface(space, w, xi);
      const LineWithParam lw = from_space(space, xi, p);
      worst = std::max(worst, std::abs(lw.line.eta - jet.f));
      // delbar eta / q^2 = conj(w''')/4
      worst = std::max(worst, std::abs(jet.f_xb / (q * q) - 0.25 * std::conj(w.d3(xi))));
      // r + rho0 = 0 on the generated surface
      const Slopes sl = slopes(space, sec, xi);
      worst = std::max(worst, std::abs(lw.r + sl.rho0));
    }
  }
  // w = xi^3 has the closed form z = -/+ xi^3 + 3 xibar, t = -/+ 3(xi^2 + xibar^2)/2
  const HoloPoly cubic({0.0, 0.0, 0.0, 1.0});
  Rng rng2(seed ^ 0xabcdefULL);
  for (int j = 0; j < 32; ++j) {
    const complex xi = rng2.chart_point(space, 0.8);
    const SpacePoint p = weierstrass_surface(space, cubic, xi);
    const double sg = space.sign;
    const complex zref = -sg * xi * xi * xi + 3.0 * std::conj(xi);
    const complex x2 = xi * xi;
    const double tref = -sg * 1.5 * (x2 + std::conj(x2)).real();
    worst = std::max(worst, std::abs(p.z - zref));
    worst = std::max(worst, std::abs(p.t - tref));
  }
  return worst;
}

double suite_umbilic_winding(SpaceKind space, std::uint64_t seed, long n) {
  Rng rng(seed);
  double min_winding = 1e9;
  long done = 0;
  for (long attempts = 0; done < n && attempts < 20 * n; ++attempts) {
    SeriesSection ss{space, {}};
    const int terms = 1 + static_cast<int>(rng.uniform() * 4);
    for (int j = 0; j < terms; ++j) ss.lambdas.push_back(rng.disc(0.5));
    const SectionJet sec = series_section_build(ss);
    const complex center = rng.disc(0.2);
    const double radius = rng.uniform(0.15, 0.5);
    try {
      const int wnum = umbilic_winding(space, sec, center, radius, 1024, 1e-7);
      min_winding = std::min(min_winding, static_cast<double>(wnum));
      ++done;
    } catch (const std::invalid_argument&) {
      // contour hit a zero of sigma0; redraw
    }
  }
  return min_winding;
}

std::vector<SuiteSpec> registry() {
  const std::vector<SpaceKind> both{kEuclidean, kLorentzian};
  const std::vector<SpaceKind> lor{kLorentzian};
  const std::vector<SpaceKind> euc{kEuclidean};
  return {
      {"wirtinger", both, 10000, 1e-9, Mode::at_most, suite_wirtinger},
      {"compatibility", both, 10000, 1e-12, Mode::at_most, suite_compatibility},
      {"linemap_roundtrip", both, 10000, 1e-12, Mode::at_most, suite_linemap_roundtrip},
      {"linemap_eta_invariance", both, 10000, 1e-10, Mode::at_most, suite_linemap_eta_invariance},
      {"killing", both, 100, 1e-6, Mode::at_most, suite_killing},
      {"killing_negative", both, 100, 1e-2, Mode::at_least, suite_killing_negative},
      {"geodesic_closed_form", lor, 50, 1e-6, Mode::at_most, suite_geodesic_closed_form},
      {"geodesic_conservation", lor, 50, 1e-8, Mode::at_most, suite_geodesic_conservation},
      {"geodesic_ruled", lor, 10, 1e-9, Mode::at_most, suite_geodesic_ruled},
      {"geodesic_plane", lor, 10, 1e-12, Mode::at_most, suite_geodesic_plane},
      {"optical_sphere", both, 200, 1e-9, Mode::at_most, suite_optical_sphere},
      {"optical_parametric", both, 100, 1e-10, Mode::at_most, suite_optical_parametric},
      {"slope_relation_analytic", both, 20, 1e-12, Mode::at_most, suite_slope_relation_analytic},
      {"slope_relation_fd", both, 20, 1e-8, Mode::at_most, suite_slope_relation_fd},
      {"weingarten_rotational", euc, 1, 1e-6, Mode::at_most, suite_weingarten_rotational},
      {"weingarten_perturbed", euc, 1, 1e-3, Mode::at_least, suite_weingarten_perturbed},
      {"curvature_crosscheck", euc, 12, 1e-5, Mode::at_most, suite_curvature_crosscheck},
      {"weingarten_minimal", both, 10, 1e-10, Mode::at_most, suite_weingarten_minimal},
      {"series_minimal", both, 20, 1e-10, Mode::at_most, suite_series_minimal},
      {"series_potential", both, 20, 1e-8, Mode::at_most, suite_series_potential},
      {"weierstrass_rho", both, 20, 1e-8, Mode::at_most, suite_weierstrass_rho},
      {"weierstrass_jets", both, 20, 1e-10, Mode::at_most, suite_weierstrass_jets},
      {"umbilic_winding", both, 20, 0.0, Mode::at_least, suite_umbilic_winding},
  };
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const SuiteSpec& s : registry()) names.push_back(s.name);
  return names;
}

VerifyReport run_verify(const RunConfig& config) {
  VerifyReport report;
  report.seed = config.seed;
  report.all_pass = true;

  bool matched = config.suite.empty();
  for (const SuiteSpec& spec : registry()) {
    if (!config.suite.empty() && config.suite != spec.name) continue;
    matched = true;
    double tol = spec.default_tol;
    if (auto it = config.tolerances.find(spec.name); it != config.tolerances.end()) {
      tol = it->second;
    }
    for (SpaceKind space : spec.spaces) {
      if (config.space && config.space->sign != space.sign) continue;
      const long samples = config.samples > 0 ? config.samples : spec.default_samples;
      SuiteResult r;
      r.name = spec.name;
      r.space = space.name();
      r.samples = samples;
      r.tolerance = tol;
      r.max_residual = spec.worst(space, mix_seed(config.seed, spec.name, space), samples);
      r.pass = spec.mode == Mode::at_most ? (r.max_residual <= tol) : (r.max_residual >= tol);
      report.all_pass = report.all_pass && r.pass;
      report.suites.push_back(std::move(r));
    }
  }
  if (!matched) {
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  }
  return report;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = seed;
  j["all_pass"] = all_pass;
  j["suites"] = nlohmann::ordered_json::array();
  for (const SuiteResult& s : suites) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    e["space"] = s.space;
    e["samples"] = s.samples;
    e["max_residual"] = s.max_residual;
    e["tolerance"] = s.tolerance;
    e["pass"] = s.pass;
    j["suites"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace linespace
