#include "linespace/jets.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace linespace {

BiPoly::BiPoly(int deg_xi, int deg_xib) : deg_xi_(deg_xi), deg_xib_(deg_xib) {
  if (deg_xi < 0 || deg_xib < 0) throw std::invalid_argument("negative polynomial degree");
  c_.assign(static_cast<std::size_t>(deg_xi + 1) * (deg_xib + 1), complex{});
}

BiPoly BiPoly::monomial(int m, int n, complex coeff) {
  BiPoly p(m, n);
  p.at(m, n) = coeff;
  return p;
}

complex BiPoly::eval(complex xi) const {
  const complex xb = std::conj(xi);
  // Horner in xi of Horner-in-xibar row values.
  complex acc{};
  for (int m = deg_xi_; m >= 0; --m) {
    complex row{};
    for (int n = deg_xib_; n >= 0; --n) row = row * xb + at(m, n);
    acc = acc * xi + row;
  }
  return acc;
}

BiPoly BiPoly::dxi() const {
  if (deg_xi_ == 0) return BiPoly(0, deg_xib_);
  BiPoly out(deg_xi_ - 1, deg_xib_);
  for (int m = 1; m <= deg_xi_; ++m)
    for (int n = 0; n <= deg_xib_; ++n) out.at(m - 1, n) = static_cast<double>(m) * at(m, n);
  return out;
}

BiPoly BiPoly::dxib() const {
  if (deg_xib_ == 0) return BiPoly(deg_xi_, 0);
  BiPoly out(deg_xi_, deg_xib_ - 1);
  for (int m = 0; m <= deg_xi_; ++m)
    for (int n = 1; n <= deg_xib_; ++n) out.at(m, n - 1) = static_cast<double>(n) * at(m, n);
  return out;
}

BiPoly BiPoly::conjugate() const {
  BiPoly out(deg_xib_, deg_xi_);
  for (int m = 0; m <= deg_xi_; ++m)
    for (int n = 0; n <= deg_xib_; ++n) out.at(n, m) = std::conj(at(m, n));
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.deg_xi_ > deg_xi_ || o.deg_xib_ > deg_xib_) {
    BiPoly grown(std::max(deg_xi_, o.deg_xi_), std::max(deg_xib_, o.deg_xib_));
    for (int m = 0; m <= deg_xi_; ++m)
      for (int n = 0; n <= deg_xib_; ++n) grown.at(m, n) = at(m, n);
    *this = std::move(grown);
  }
  for (int m = 0; m <= o.deg_xi_; ++m)
    for (int n = 0; n <= o.deg_xib_; ++n) at(m, n) += o.at(m, n);
  return *this;
}

BiPoly BiPoly::operator*(complex s) const {
  BiPoly out = *this;
  for (complex& v : out.c_) v *= s;
  return out;
}

Jet3 BiPoly::jet(complex xi) const {
  const BiPoly fx = dxi();
  const BiPoly fxb = dxib();
  const BiPoly fxx = fx.dxi();
  const BiPoly fxxb = fx.dxib();
  const BiPoly fxbxb = fxb.dxib();
  Jet3 j;
  j.f = eval(xi);
  j.f_x = fx.eval(xi);
  j.f_xb = fxb.eval(xi);
  j.f_xx = fxx.eval(xi);
  j.f_xxb = fxxb.eval(xi);
  j.f_xbxb = fxbxb.eval(xi);
  j.f_xxx = fxx.dxi().eval(xi);
  j.f_xxxb = fxx.dxib().eval(xi);
  j.f_xxbxb = fxxb.dxib().eval(xi);
  j.f_xbxbxb = fxbxb.dxib().eval(xi);
  return j;
}

complex HoloPoly::eval_deriv(complex xi, int order) const {
  complex acc{};
  const int n = static_cast<int>(coeffs_.size());
  for (int k = n - 1; k >= order; --k) {
    double fac = 1.0;
    for (int j = 0; j < order; ++j) fac *= (k - j);
    acc = acc * xi + fac * coeffs_[static_cast<std::size_t>(k)];
  }
  return acc;
}

namespace {

// 1D central stencil weights on offsets -3..3 for derivative orders 0..3.
using Stencil = std::array<double, 7>;
constexpr std::array<Stencil, 4> kOrder2 = {{
    {0, 0, 0, 1, 0, 0, 0},
    {0, 0, -0.5, 0, 0.5, 0, 0},
    {0, 0, 1, -2, 1, 0, 0},
    {0, -0.5, 1, 0, -1, 0.5, 0},
}};
constexpr std::array<Stencil, 4> kOrder4 = {{
    {0, 0, 0, 1, 0, 0, 0},
    {0, 1.0 / 12, -2.0 / 3, 0, 2.0 / 3, -1.0 / 12, 0},
    {0, -1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12, 0},
    {0.125, -1, 1.625, 0, -1.625, 1, -0.125},
}};

struct RealPartials {
  // d[a][b] = d_x^a d_y^b F for a+b <= 3
  complex d[4][4];
};

RealPartials mixed_partials(const std::array<std::array<complex, 7>, 7>& grid,
                            const std::array<Stencil, 4>& w, double h) {
  RealPartials out{};
  double hp[4] = {1.0, h, h * h, h * h * h};
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      complex acc{};
      for (int i = 0; i < 7; ++i) {
        if (w[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] == 0.0) continue;
        complex row{};
        for (int j = 0; j < 7; ++j) {
          const double wb = w[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
          if (wb != 0.0) row += wb * grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        acc += w[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * row;
      }
      out.d[a][b] = acc / (hp[a] * hp[b]);
    }
  return out;
}

Jet3 wirtinger_from_partials(const RealPartials& p) {
  const complex i{0.0, 1.0};
  Jet3 j;
  j.f = p.d[0][0];
  j.f_x = 0.5 * (p.d[1][0] - i * p.d[0][1]);
  j.f_xb = 0.5 * (p.d[1][0] + i * p.d[0][1]);
  j.f_xx = 0.25 * (p.d[2][0] - p.d[0][2] - 2.0 * i * p.d[1][1]);
  j.f_xxb = 0.25 * (p.d[2][0] + p.d[0][2]);
  j.f_xbxb = 0.25 * (p.d[2][0] - p.d[0][2] + 2.0 * i * p.d[1][1]);
  j.f_xxx = 0.125 * (p.d[3][0] - 3.0 * i * p.d[2][1] - 3.0 * p.d[1][2] + i * p.d[0][3]);
  j.f_xxxb = 0.125 * (p.d[3][0] - i * p.d[2][1] + p.d[1][2] - i * p.d[0][3]);
  j.f_xxbxb = 0.125 * (p.d[3][0] + i * p.d[2][1] + p.d[1][2] + i * p.d[0][3]);
  j.f_xbxbxb = 0.125 * (p.d[3][0] + 3.0 * i * p.d[2][1] - 3.0 * p.d[1][2] - i * p.d[0][3]);
  return j;
}

}  // namespace

SectionJet::SectionJet(BiPoly F)
    : has_poly_(true), poly_(std::move(F)), provenance_(JetProvenance::analytic) {}

SectionJet::SectionJet(std::function<complex(complex)> F, double h, double gate_tol)
    : fn_(std::move(F)),
      provenance_(JetProvenance::finite_difference),
      h_(h),
      gate_tol_(gate_tol) {
  if (h <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
}

complex SectionJet::eval(complex xi) const {
  return has_poly_ ? poly_.eval(xi) : fn_(xi);
}

Jet3 SectionJet::jet(complex xi) const {
  if (has_poly_) return poly_.jet(xi);

  std::array<std::array<complex, 7>, 7> grid;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      grid[static_cast<std::size_t>(i + 3)][static_cast<std::size_t>(j + 3)] =
          fn_(xi + complex(i * h_, j * h_));

  const Jet3 j4 = wirtinger_from_partials(mixed_partials(grid, kOrder4, h_));
  const Jet3 j2 = wirtinger_from_partials(mixed_partials(grid, kOrder2, h_));

  // Consistency gate on the entries every downstream formula consumes.  The
  // two stencil orders legitimately differ by the order-2 truncation, which
  // is O(h^2) times the local derivative scale; what the gate must catch is
  // an evaluator that is not smooth at the stencil scale, where the two
  // estimates disagree at order one.
  const complex* a4[6] = {&j4.f, &j4.f_x, &j4.f_xb, &j4.f_xx, &j4.f_xxb, &j4.f_xbxb};
  const complex* a2[6] = {&j2.f, &j2.f_x, &j2.f_xb, &j2.f_xx, &j2.f_xxb, &j2.f_xbxb};
  double scale = 1.0;
  for (int k = 0; k < 6; ++k) scale += std::abs(*a4[k]);
  const double threshold = std::max(gate_tol_, 100.0 * h_ * h_) * scale;
  for (int k = 0; k < 6; ++k) {
    if (std::abs(*a4[k] - *a2[k]) > threshold) {
      throw std::runtime_error("finite-difference jets failed the stencil consistency gate");
    }
  }
  return j4;
}

ParametricCongruence ParametricCongruence::graph(const SectionJet& sec) {
  return ParametricCongruence([sec](complex nu) -> CongruenceJet {
    const Jet3 j = sec.jet(nu);
    return {nu, j.f, 1.0, 0.0, j.f_x, j.f_xb};
  });
}

}  // namespace linespace
