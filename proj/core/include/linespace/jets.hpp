#pragma once

#include <functional>
#include <vector>

#include "linespace/space.hpp"

// Wirtinger jets.  del = d/dxi and delbar = d/dxibar act on complex-valued
// functions F(xi, xibar); mixed partials commute, so one value is stored per
// multi-index.  Derivatives of the conjugate come for free:
// del^a delbar^b (Fbar) = conj( del^b delbar^a F ).

namespace linespace {

struct Jet3 {
  complex f{};
  complex f_x{}, f_xb{};                           // del F, delbar F
  complex f_xx{}, f_xxb{}, f_xbxb{};               // second order
  complex f_xxx{}, f_xxxb{}, f_xxbxb{}, f_xbxbxb{};  // third order
};

// Polynomial F = sum c[m][n] xi^m xibar^n, the analytic-jet workhorse.
class BiPoly {
 public:
  BiPoly() : deg_xi_(0), deg_xib_(0), c_(1) {}
  BiPoly(int deg_xi, int deg_xib);

  static BiPoly monomial(int m, int n, complex coeff);

  int deg_xi() const { return deg_xi_; }
  int deg_xib() const { return deg_xib_; }

  complex& at(int m, int n) { return c_[idx(m, n)]; }
  complex at(int m, int n) const { return c_[idx(m, n)]; }

  complex eval(complex xi) const;
  Jet3 jet(complex xi) const;

  BiPoly dxi() const;
  BiPoly dxib() const;
  BiPoly conjugate() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly operator*(complex s) const;

 private:
  std::size_t idx(int m, int n) const {
    return static_cast<std::size_t>(m) * (deg_xib_ + 1) + n;
  }
  int deg_xi_, deg_xib_;
  std::vector<complex> c_;
};

// Holomorphic polynomial w(xi) = sum coeffs[k] xi^k with derivatives to third
// order.
class HoloPoly {
 public:
  HoloPoly() = default;
  explicit HoloPoly(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<complex>& coeffs() const { return coeffs_; }
  complex eval(complex xi) const { return eval_deriv(xi, 0); }
  complex d1(complex xi) const { return eval_deriv(xi, 1); }
  complex d2(complex xi) const { return eval_deriv(xi, 2); }
  complex d3(complex xi) const { return eval_deriv(xi, 3); }

 private:
  complex eval_deriv(complex xi, int order) const;
  std::vector<complex> coeffs_;
};

enum class JetProvenance { analytic, finite_difference };

// A section of TN -> N given as a graph eta = F(xi, xibar), jet-evaluable to
// order 3.  Analytic sections wrap a BiPoly; black-box evaluators fall back to
// central finite differences (separable order-2 and order-4 stencils on a 7x7
// grid).  Every finite-difference evaluation runs a consistency gate comparing
// the two stencil orders on the entries up to second order and throws
// std::runtime_error when they disagree; third-order entries are provided but
// carry the largest roundoff, so analytic jets are preferred whenever the
// section is known in closed form.
class SectionJet {
 public:
  explicit SectionJet(BiPoly F);
  SectionJet(std::function<complex(complex)> F, double h = 1e-3,
             double gate_tol = 1e-6);

  Jet3 jet(complex xi) const;
  complex eval(complex xi) const;

  JetProvenance provenance() const { return provenance_; }
  double fd_step() const { return h_; }
  const BiPoly* poly() const { return has_poly_ ? &poly_ : nullptr; }

 private:
  bool has_poly_ = false;
  BiPoly poly_;
  std::function<complex(complex)> fn_;
  JetProvenance provenance_ = JetProvenance::analytic;
  double h_ = 0.0;
  double gate_tol_ = 0.0;
};

// A line congruence given parametrically: nu -> (xi, eta) with first-order
// Wirtinger jets in nu, plus an optional affine-parameter field r(nu).
struct CongruenceJet {
  complex xi, eta;
  complex xi_nu, xi_nub;    // d xi / d nu, d xi / d nubar
  complex eta_nu, eta_nub;  // d eta / d nu, d eta / d nubar
};

class ParametricCongruence {
 public:
  using Evaluator = std::function<CongruenceJet(complex)>;
  using RField = std::function<double(complex)>;

  explicit ParametricCongruence(Evaluator eval) : eval_(std::move(eval)) {}
  ParametricCongruence(Evaluator eval, RField r)
      : eval_(std::move(eval)), r_(std::move(r)) {}

  // Graph congruence nu = xi over a section.
  static ParametricCongruence graph(const SectionJet& sec);

  CongruenceJet jet(complex nu) const { return eval_(nu); }
  bool has_r_field() const { return static_cast<bool>(r_); }
  double r(complex nu) const { return r_(nu); }

 private:
  Evaluator eval_;
  RField r_;
};

}  // namespace linespace
