#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "linespace/jets.hpp"
#include "test_support.hpp"

using namespace linespace;

TEST_CASE("BiPoly jets are exact derivatives") {
  // F = xi^2 xibar + 2 xi
  BiPoly F(2, 1);
  F.at(2, 1) = 1.0;
  F.at(1, 0) = 2.0;
  const complex xi{0.5, -0.3};
  const complex xb = std::conj(xi);
  const Jet3 j = F.jet(xi);
  CHECK(std::abs(j.f - (xi * xi * xb + 2.0 * xi)) < 1e-16);
  CHECK(std::abs(j.f_x - (2.0 * xi * xb + 2.0)) < 1e-16);
  CHECK(std::abs(j.f_xb - xi * xi) < 1e-16);
  CHECK(std::abs(j.f_xx - 2.0 * xb) < 1e-16);
  CHECK(std::abs(j.f_xxb - 2.0 * xi) < 1e-16);
  CHECK(std::abs(j.f_xbxb) == 0.0);
  CHECK(std::abs(j.f_xxx) == 0.0);
  CHECK(std::abs(j.f_xxxb - 2.0) < 1e-16);
  CHECK(std::abs(j.f_xxbxb) == 0.0);
}

TEST_CASE("conjugate swaps the jet roles") {
  Rng rng(211);
  BiPoly F(3, 3);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) F.at(m, n) = rng.disc(0.5);
  const BiPoly Fc = F.conjugate();
  const complex xi = rng.disc(0.6);
  const Jet3 a = F.jet(xi);
  const Jet3 b = Fc.jet(xi);
  CHECK(std::abs(b.f - std::conj(a.f)) < 1e-15);
  CHECK(std::abs(b.f_x - std::conj(a.f_xb)) < 1e-15);
  CHECK(std::abs(b.f_xxb - std::conj(a.f_xxb)) < 1e-15);
  CHECK(std::abs(b.f_xxx - std::conj(a.f_xbxbxb)) < 1e-15);
}

TEST_CASE("finite-difference jets match analytic ones") {
  Rng rng(223);
  for (int k = 0; k < 10; ++k) {
    BiPoly F(3, 3);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) F.at(m, n) = rng.disc(0.5);
    const SectionJet exact(F);
    const SectionJet fd([F](complex z) { return F.eval(z); });
    CHECK(fd.provenance() == JetProvenance::finite_difference);
    for (int j = 0; j < 5; ++j) {
      const complex xi = rng.disc(0.5);
      const Jet3 a = exact.jet(xi);
      const Jet3 b = fd.jet(xi);
      CHECK(std::abs(a.f - b.f) < 1e-12);
      CHECK(std::abs(a.f_x - b.f_x) < 1e-9);
      CHECK(std::abs(a.f_xb - b.f_xb) < 1e-9);
      CHECK(std::abs(a.f_xx - b.f_xx) < 1e-8);
      CHECK(std::abs(a.f_xxb - b.f_xxb) < 1e-8);
      CHECK(std::abs(a.f_xbxb - b.f_xbxb) < 1e-8);
      // third order carries more roundoff
      CHECK(std::abs(a.f_xxbxb - b.f_xxbxb) < 1e-5);
    }
  }
}

TEST_CASE("the stencil gate rejects non-smooth evaluators") {
  const SectionJet kink([](complex z) { return complex(std::abs(z.real()), 0.0); });
  CHECK_THROWS_AS(kink.jet(complex(1e-5, 0.3)), std::runtime_error);
}

TEST_CASE("HoloPoly derivatives") {
  // w = 1 + 2 xi + xi^3
  const HoloPoly w({1.0, 2.0, 0.0, 1.0});
  const complex xi{0.4, 0.7};
  CHECK(std::abs(w.eval(xi) - (1.0 + 2.0 * xi + xi * xi * xi)) < 1e-15);
  CHECK(std::abs(w.d1(xi) - (2.0 + 3.0 * xi * xi)) < 1e-15);
  CHECK(std::abs(w.d2(xi) - 6.0 * xi) < 1e-15);
  CHECK(std::abs(w.d3(xi) - 6.0) < 1e-15);
}

TEST_CASE("graph congruence wires first-order jets") {
  BiPoly F(2, 2);
  F.at(1, 1) = complex(0.3, 0.2);
  F.at(2, 0) = 0.5;
  const SectionJet sec(F);
  const ParametricCongruence cong = ParametricCongruence::graph(sec);
  const complex nu{0.3, -0.1};
  const CongruenceJet cj = cong.jet(nu);
  const Jet3 j = sec.jet(nu);
  CHECK(cj.xi == nu);
  CHECK(std::abs(cj.eta - j.f) == 0.0);
  CHECK(cj.xi_nu == complex(1.0));
  CHECK(cj.xi_nub == complex(0.0));
  CHECK(std::abs(cj.eta_nu - j.f_x) == 0.0);
  CHECK(std::abs(cj.eta_nub - j.f_xb) == 0.0);
}

TEST_CASE("BiPoly grows on +=") {
  BiPoly a(1, 0);
  a.at(1, 0) = 2.0;
  BiPoly b(2, 3);
  b.at(2, 3) = complex(0.0, 1.0);
  a += b;
  CHECK(a.deg_xi() == 2);
  CHECK(a.deg_xib() == 3);
  CHECK(a.at(1, 0) == complex(2.0));
  CHECK(a.at(2, 3) == complex(0.0, 1.0));
}
