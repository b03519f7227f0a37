#pragma once

#include <array>

#include "linespace/space.hpp"

// Killing fields of G on TS^2 / TH^2 and the induced action of the rigid
// motions of 3-space on line space.
//
// Every Killing field on the curved bases has the form
//   V^xi  = a0(xi)
//   V^eta = b1(xi) - ( conj(a0') + 2 a0 del u + 2 conj(a0) delbar u ) eta
// with a0, b1 holomorphic quadratics: a0 generates a rotation (boost) of the
// base, b1 a holomorphic Lagrangian section (a translation of 3-space).

namespace linespace {

struct QuadPoly {
  complex c0{}, c1{}, c2{};

  complex operator()(complex x) const { return c0 + (c1 + c2 * x) * x; }
  complex deriv(complex x) const { return c1 + 2.0 * c2 * x; }
  complex deriv2() const { return 2.0 * c2; }
};

struct KillingField {
  QuadPoly a0;      // base component (rotation/boost datum)
  double a1 = 0.0;  // fibre-rotation coefficient; identically zero when kappa != 0
  QuadPoly b1;      // translation datum
};

// The six-dimensional basis: three rotations/boosts followed by the three
// translations (x^1, x^2, x^3).
std::array<KillingField, 6> killing_basis(SpaceKind space);

TangentVector killing_eval(const KillingField& f, SpaceKind space, LinePoint p);

// Max-norm of V^i d_i G_jk + G_ki d_j V^i + G_ji d_k V^i over the real
// coordinate indices, with analytic dV and central-difference dG at step h.
double killing_residual(const KillingField& f, SpaceKind space, LinePoint p,
                        double h = 1e-5);

// A rigid motion x -> R x + tau of 3-space.  The rotation (boost) part is the
// spinor pair (alpha, beta) with alpha conj(alpha) -/+ beta conj(beta) = 1
// (upper Euclidean, lower Lorentzian); tau = (gamma, delta) in (z, t).
struct RigidMotion {
  complex alpha{1.0};
  complex beta{0.0};
  complex gamma{0.0};
  double delta = 0.0;

  static RigidMotion rotation(complex alpha, complex beta);
  static RigidMotion rotation_about_t(double phi);
  static RigidMotion translation(complex gamma, double delta);
};

// Throws std::invalid_argument if the normalization fails by more than tol.
void require_normalized(SpaceKind space, const RigidMotion& m, double tol = 1e-9);

// Rotation part applied to a point of 3-space (spinor conjugation).
SpacePoint rotate_point(SpaceKind space, const RigidMotion& m, SpacePoint p);

// Full motion applied to a point: R x + tau.
SpacePoint motion_apply_point(SpaceKind space, const RigidMotion& m, SpacePoint p);

// Induced action on line space via the fractional linear transformation
//   xi -> (alpha xi + beta) / (-/+ conj(beta) xi + conj(alpha)),
//   eta -> eta / (-/+ conj(beta) xi + conj(alpha))^2,
// followed by the translation shift of eta.
LinePoint motion_act_on_line(SpaceKind space, const RigidMotion& m, LinePoint lp);

// Independent route: push two points of the line through 3-space and
// reconstruct.  Used to validate the fractional-linear conventions.
LinePoint motion_act_on_line_via_space(SpaceKind space, const RigidMotion& m,
                                       LinePoint lp);

// Composition: (outer o inner) as a motion, x -> R_o(R_i x + tau_i) + tau_o.
RigidMotion motion_compose(SpaceKind space, const RigidMotion& outer,
                           const RigidMotion& inner);

}  // namespace linespace
