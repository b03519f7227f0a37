#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "linespace/isometry.hpp"
#include "linespace/kahler.hpp"
#include "test_support.hpp"

using namespace linespace;

namespace {
constexpr complex kI{0.0, 1.0};
}

TEST_CASE("t-axis rotation generator is (i xi, i eta)") {
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    const KillingField rot = killing_basis(space)[0];
    Rng rng(61);
    for (int k = 0; k < 50; ++k) {
      const LinePoint p{rng.disc(0.7), rng.disc(1.5)};
      const TangentVector v = killing_eval(rot, space, p);
      CHECK(std::abs(v.dxi - kI * p.xi) < 1e-14);
      CHECK(std::abs(v.deta - kI * p.eta) < 1e-14);
    }
    // fixed point at the origin
    const TangentVector at0 = killing_eval(rot, space, {0.0, 0.0});
    CHECK(std::abs(at0.dxi) == 0.0);
    CHECK(std::abs(at0.deta) == 0.0);
  }
}

TEST_CASE("translation generators") {
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    const auto basis = killing_basis(space);
    // t-translation: V^eta = -xi
    const TangentVector vt = killing_eval(basis[5], space, {complex(0.3, 0.0), 0.0});
    CHECK(std::abs(vt.dxi) == 0.0);
    CHECK(vt.deta.real() == doctest::Approx(-0.3));
    CHECK(vt.deta.imag() == doctest::Approx(0.0));
    // x^1-translation: b1 = (1 -/+ xi^2)/2
    const complex xi{0.4, 0.2};
    const TangentVector vz = killing_eval(basis[3], space, {xi, 0.0});
    CHECK(std::abs(vz.deta - 0.5 * (1.0 - static_cast<double>(space.sign) * xi * xi)) <
          1e-15);
  }
}

TEST_CASE("basis fields satisfy the Killing equation") {
  Rng rng(67);
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    double worst = 0.0;
    for (const KillingField& f : killing_basis(space)) {
      for (int k = 0; k < 40; ++k) {
        const LinePoint p{rng.disc(0.6), rng.disc(1.0)};
        worst = std::max(worst, killing_residual(f, space, p, 1e-5));
      }
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("zero field has zero residual") {
  const KillingField zero;
  CHECK(killing_residual(zero, kLorentzian, {complex(0.2, 0.1), complex(0.5, 0.0)}) == 0.0);
}

TEST_CASE("a0 = xi^2 alone is not Killing") {
  KillingField bad;
  bad.a0 = {0.0, 0.0, 1.0};
  Rng rng(71);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const LinePoint p{rng.disc(0.6), rng.disc(1.0)};
    worst = std::max(worst, killing_residual(bad, kLorentzian, p, 1e-5));
  }
  CHECK(worst >= 1e-2);
}

TEST_CASE("the map a0 -> b1 = i a0 lands on Killing data") {
  Rng rng(73);
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    for (const KillingField& f : {killing_basis(space)[0], killing_basis(space)[1]}) {
      KillingField img;
      img.b1 = {kI * f.a0.c0, kI * f.a0.c1, kI * f.a0.c2};
      for (int k = 0; k < 25; ++k) {
        const LinePoint p{rng.disc(0.6), rng.disc(1.0)};
        CHECK(killing_residual(img, space, p, 1e-5) <= 1e-6);
      }
    }
  }
}

TEST_CASE("rotation flow preserves |xi| (t-axis, short RK4 flow)") {
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    const KillingField rot = killing_basis(space)[0];
    LinePoint p{complex(0.4, 0.1), complex(0.2, -0.3)};
    const double start_mod = std::abs(p.xi);
    const double h = 1e-2;
    for (int step = 0; step < 100; ++step) {
      auto f = [&](LinePoint q) { return killing_eval(rot, space, q); };
      const TangentVector k1 = f(p);
      const TangentVector k2 = f({p.xi + 0.5 * h * k1.dxi, p.eta + 0.5 * h * k1.deta});
      const TangentVector k3 = f({p.xi + 0.5 * h * k2.dxi, p.eta + 0.5 * h * k2.deta});
      const TangentVector k4 = f({p.xi + h * k3.dxi, p.eta + h * k3.deta});
      p.xi += h / 6.0 * (k1.dxi + 2.0 * k2.dxi + 2.0 * k3.dxi + k4.dxi);
      p.eta += h / 6.0 * (k1.deta + 2.0 * k2.deta + 2.0 * k3.deta + k4.deta);
    }
    CHECK(std::abs(p.xi) == doctest::Approx(start_mod).epsilon(1e-10));
  }
}

TEST_CASE("rotation about the t-axis acts as multiplication by e^{i phi}") {
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    const RigidMotion m = RigidMotion::rotation_about_t(0.7);
    const LinePoint lp{complex(0.3, -0.2), complex(0.1, 0.5)};
    const LinePoint out = motion_act_on_line(space, m, lp);
    const complex ph = std::polar(1.0, 0.7);
    CHECK(std::abs(out.xi - ph * lp.xi) < 1e-15);
    CHECK(std::abs(out.eta - ph * lp.eta) < 1e-15);
  }
}

TEST_CASE("t-translation shifts eta by -c xi") {
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    const RigidMotion m = RigidMotion::translation(0.0, 0.9);
    const LinePoint lp{complex(0.25, 0.1), complex(-0.3, 0.2)};
    const LinePoint out = motion_act_on_line(space, m, lp);
    CHECK(std::abs(out.xi - lp.xi) == 0.0);
    CHECK(std::abs(out.eta - (lp.eta - 0.9 * lp.xi)) < 1e-15);
  }
}

namespace {

RigidMotion random_motion(Rng& rng, SpaceKind space, double angle_scale) {
  const double th = rng.uniform(-angle_scale, angle_scale);
  const double u = rng.uniform(0.0, 6.283185307179586);
  const double v = rng.uniform(0.0, 6.283185307179586);
  RigidMotion m;
  if (space.euclidean()) {
    m.alpha = std::cos(th) * std::polar(1.0, u);
    m.beta = std::sin(th) * std::polar(1.0, v);
  } else {
    m.alpha = std::cosh(th) * std::polar(1.0, u);
    m.beta = std::sinh(th) * std::polar(1.0, v);
  }
  m.gamma = rng.disc(1.0);
  m.delta = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace

TEST_CASE("fractional-linear action agrees with the 3-space route") {
  Rng rng(79);
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    double worst = 0.0;
    int done = 0;
    while (done < 300) {
      const RigidMotion m = random_motion(rng, space, 0.6);
      const LinePoint lp{rng.disc(0.25), rng.disc(1.0)};
      LinePoint a, b;
      try {
        a = motion_act_on_line(space, m, lp);
        b = motion_act_on_line_via_space(space, m, lp);
      } catch (const std::domain_error&) {
        continue;  // image left the chart; draw again
      }
      worst = std::max({worst, std::abs(a.xi - b.xi), std::abs(a.eta - b.eta)});
      ++done;
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("Lorentzian boost matches the oracle route") {
  const double a = 0.8;
  const RigidMotion boost = RigidMotion::rotation(std::cosh(a / 2), std::sinh(a / 2));
  Rng rng(83);
  for (int k = 0; k < 100; ++k) {
    const LinePoint lp{rng.disc(0.3), rng.disc(1.0)};
    const LinePoint x = motion_act_on_line(kLorentzian, boost, lp);
    const LinePoint y = motion_act_on_line_via_space(kLorentzian, boost, lp);
    CHECK(std::abs(x.xi - y.xi) <= 1e-9);
    CHECK(std::abs(x.eta - y.eta) <= 1e-9);
  }
}

TEST_CASE("group action: compose the motions, compose the actions") {
  Rng rng(89);
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    int done = 0;
    while (done < 100) {
      const RigidMotion m1 = random_motion(rng, space, 0.4);
      const RigidMotion m2 = random_motion(rng, space, 0.4);
      const LinePoint lp{rng.disc(0.2), rng.disc(0.8)};
      try {
        const LinePoint seq = motion_act_on_line(space, m2, motion_act_on_line(space, m1, lp));
        const LinePoint once = motion_act_on_line(space, motion_compose(space, m2, m1), lp);
        CHECK(std::abs(seq.xi - once.xi) <= 1e-9);
        CHECK(std::abs(seq.eta - once.eta) <= 1e-9);
        ++done;
      } catch (const std::domain_error&) {
      }
    }
  }
}

TEST_CASE("the action preserves the metric (finite-difference pushforward)") {
  Rng rng(97);
  const double h = 1e-6;
  for (SpaceKind space : {kEuclidean, kLorentzian}) {
    int done = 0;
    while (done < 60) {
      const RigidMotion m = random_motion(rng, space, 0.4);
      const LinePoint p{rng.disc(0.25), rng.disc(0.8)};
      const TangentVector v = test_support::rand_vec(rng, 1.0);
      const TangentVector w = test_support::rand_vec(rng, 1.0);
      try {
        auto push = [&](const TangentVector& u) -> TangentVector {
          const LinePoint pp =
              motion_act_on_line(space, m, {p.xi + h * u.dxi, p.eta + h * u.deta});
          const LinePoint pm =
              motion_act_on_line(space, m, {p.xi - h * u.dxi, p.eta - h * u.deta});
          return {(pp.xi - pm.xi) / (2.0 * h), (pp.eta - pm.eta) / (2.0 * h)};
        };
        const LinePoint q = motion_act_on_line(space, m, p);
        const double before = metric_value(space, p, v, w);
        const double after = metric_value(space, q, push(v), push(w));
        CHECK(std::abs(after - before) <= 1e-6 * std::max(1.0, std::abs(before)));
        ++done;
      } catch (const std::domain_error&) {
      }
    }
  }
}

TEST_CASE("normalization is enforced") {
  RigidMotion bad;
  bad.alpha = 1.2;
  CHECK_THROWS_AS(motion_act_on_line(kEuclidean, bad, LinePoint{0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotate_point(kLorentzian, bad, SpacePoint{0.0, 0.0}),
                  std::invalid_argument);
}
