#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "linespace/kahler.hpp"
#include "test_support.hpp"

using namespace linespace;

TEST_CASE("conformal data at the origin") {
  const ConformalData lo = conformal_data(kLorentzian, 0.0);
  CHECK(lo.e2u == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(lo.du) == 0.0);
  CHECK(lo.dbar_du == doctest::Approx(1.0).epsilon(1e-15));

  const ConformalData eu = conformal_data(kEuclidean, 0.0);
  CHECK(eu.e2u == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(eu.dbar_du == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("conformal data at xi = 0.5 (Lorentzian)") {
  const ConformalData cd = conformal_data(kLorentzian, 0.5);
  CHECK(cd.e2u == doctest::Approx(4.0 / (0.75 * 0.75)).epsilon(1e-15));
  CHECK(cd.du.real() == doctest::Approx(0.5 / 0.75).epsilon(1e-15));
  CHECK(cd.du.imag() == 0.0);
}

TEST_CASE("conformal identity dbar_du = -kappa e^{2u}/4 everywhere") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    for (SpaceKind space : {kEuclidean, kLorentzian}) {
      const complex xi = rng.chart_point(space, space.lorentzian() ? 0.9 : 2.5);
      const ConformalData cd = conformal_data(space, xi);
      CHECK(cd.dbar_du ==
            doctest::Approx(-space.kappa * cd.e2u / 4.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("Lorentzian domain is the open disc") {
  CHECK_THROWS_AS(conformal_data(kLorentzian, complex(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(conformal_data(kLorentzian, complex(0.8, 0.7)), std::domain_error);
  CHECK_NOTHROW(conformal_data(kEuclidean, complex(3.0, 4.0)));
}

TEST_CASE("hand values at the TH^2 origin") {
  const LinePoint p{0.0, 0.0};
  const TangentVector v{1.0, 0.0};
  const TangentVector w{0.0, 1.0};
  CHECK(metric_value(kLorentzian, p, v, w) == doctest::Approx(0.0));
  CHECK(metric_value(kLorentzian, p, v, v) == doctest::Approx(0.0));
  CHECK(metric_value(kLorentzian, p, w, w) == doctest::Approx(0.0));
  CHECK(symplectic_value(kLorentzian, p, v, w) == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(sigma_squared(kLorentzian, p, v, w) == doctest::Approx(16.0).epsilon(1e-15));
  // 16 + (-1)*16 - 0 = 0
  CHECK(wirtinger_residual(kLorentzian, p, v, w) == doctest::Approx(0.0));
}

TEST_CASE("fibre vectors are null exactly") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    for (SpaceKind space : {kEuclidean, kLorentzian}) {
      const LinePoint p = test_support::rand_point(rng, space);
      const TangentVector v{0.0, rng.disc(3.0)};
      CHECK(metric_value(space, p, v, v) == 0.0);
    }
  }
}

TEST_CASE("complex structure") {
  const TangentVector v{1.0, 0.0};
  const TangentVector jv = apply_complex_structure(v);
  CHECK(jv.dxi == complex(0, 1));
  CHECK(jv.deta == complex(0, 0));
  const TangentVector w{0.0, 1.0};
  CHECK(apply_complex_structure(w).deta == complex(0, 1));

  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const TangentVector u = test_support::rand_vec(rng);
    const TangentVector jju = apply_complex_structure(apply_complex_structure(u));
    CHECK(std::abs(jju.dxi + u.dxi) == 0.0);
    CHECK(std::abs(jju.deta + u.deta) == 0.0);
  }
}

TEST_CASE("sigma^2 vanishes on complex planes and scales quadratically") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    for (SpaceKind space : {kEuclidean, kLorentzian}) {
      const LinePoint p = test_support::rand_point(rng, space);
      const TangentVector v = test_support::rand_vec(rng);
      CHECK(sigma_squared(space, p, v, apply_complex_structure(v)) == 0.0);
      const TangentVector w = test_support::rand_vec(rng);
      const double lam = rng.uniform(-3.0, 3.0);
      const TangentVector lv{lam * v.dxi, lam * v.deta};
      CHECK(sigma_squared(space, p, lv, w) ==
            doctest::Approx(lam * lam * sigma_squared(space, p, v, w)).epsilon(1e-12));
    }
  }
}

TEST_CASE("compatibility G(.,.) = Omega(J.,.)") {
  Rng rng(17);
  for (int k = 0; k < 2000; ++k) {
    for (SpaceKind space : {kEuclidean, kLorentzian}) {
      const LinePoint p = test_support::rand_point(rng, space);
      const TangentVector v = test_support::rand_vec(rng);
      const TangentVector w = test_support::rand_vec(rng);
      const double g = metric_value(space, p, v, w);
      const double o = symplectic_value(space, p, apply_complex_structure(v), w);
      CHECK(std::abs(g - o) <= 1e-12 * std::max(1.0, std::abs(g)));
      // J-invariance of the metric
      const double gj = metric_value(space, p, apply_complex_structure(v),
                                     apply_complex_structure(w));
      CHECK(gj == doctest::Approx(g).epsilon(1e-12));
      // antisymmetry
      CHECK(symplectic_value(space, p, v, v) == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("neutral signature: both signs occur at every point") {
  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    for (SpaceKind space : {kEuclidean, kLorentzian}) {
      const LinePoint p = test_support::rand_point(rng, space);
      bool pos = false, neg = false;
      // G(v,v) = 2 e^{2u} Im(conj(deta) dxi) - 2 Im(eta de2u) |dxi|^2: weight
      // the fibre component so the first term can beat the second at far-out
      // base points too
      const ConformalData cd = conformal_data(space, p.xi);
      const double fibre_weight = 2.0 * (1.0 + 2.0 * std::abs(p.eta) * std::abs(cd.du));
      for (int j = 0; j < 100 && !(pos && neg); ++j) {
        TangentVector v = test_support::rand_vec(rng);
        v.deta *= fibre_weight;
        const double g = metric_value(space, p, v, v);
        pos = pos || g > 1e-12;
        neg = neg || g < -1e-12;
      }
      CHECK(pos);
      CHECK(neg);
    }
  }
}

TEST_CASE("plane identity on random samples") {
  Rng rng(29);
  for (int k = 0; k < 5000; ++k) {
    for (SpaceKind space : {kEuclidean, kLorentzian}) {
      const LinePoint p = test_support::rand_point(rng, space);
      const TangentVector v = test_support::rand_vec(rng);
      const TangentVector w = test_support::rand_vec(rng);
      const double om = symplectic_value(space, p, v, w);
      const double s2 = sigma_squared(space, p, v, w);
      const double gvv = metric_value(space, p, v, v);
      const double gww = metric_value(space, p, w, w);
      const double gvw = metric_value(space, p, v, w);
      const double scale = std::max({om * om, s2, std::abs(gvv * gww), gvw * gvw, 1.0});
      CHECK(std::abs(wirtinger_residual(space, p, v, w)) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("dependent vectors give a vanishing residual") {
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const LinePoint p = test_support::rand_point(rng, kLorentzian);
    const TangentVector v = test_support::rand_vec(rng);
    const double lam = rng.uniform(-2.0, 2.0);
    const TangentVector w{lam * v.dxi, lam * v.deta};
    CHECK(std::abs(wirtinger_residual(kLorentzian, p, v, w)) < 1e-10);
    CHECK(sigma_squared(kLorentzian, p, v, w) < 1e-24);
  }
}
