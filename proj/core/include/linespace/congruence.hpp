#pragma once

#include <span>
#include <utility>
#include <vector>

#include "linespace/isometry.hpp"
#include "linespace/jets.hpp"
#include "linespace/space.hpp"

// Line congruences as surfaces in TN: optical scalars, induced geometry,
// Lagrangian/holomorphic structure, the support function, scalar curvature of
// the induced metric, and Weingarten detection.

namespace linespace {

// Complex slopes of a graph section eta = F:
//   sigma0 = -del Fbar,   rho0 = e^{-2u} del(e^{2u} F).
// rho0 is real exactly when the section is Lagrangian.
struct Slopes {
  complex sigma0;
  complex rho0;
};

Slopes slopes(SpaceKind space, const SectionJet& sec, complex xi);

// The fibre-adapted derivatives of a parametric congruence at (nu, r):
//   d+ eta = del eta + r del xi -/+ 2 xibar eta/(1 +/- xi xibar) del xi
//   d- eta = delbar eta + r delbar xi -/+ 2 xibar eta/(1 +/- xi xibar) delbar xi.
std::pair<complex, complex> dplus_dminus(SpaceKind space,
                                         const ParametricCongruence& cong,
                                         complex nu, double r);

// Divergence and shear of the congruence at (nu, r):
//   rho   = ( d+eta conj(del xi) - d-eta conj(delbar xi) ) / D
//   sigma = ( conj(d+eta) conj(delbar xi) - conj(d-eta) conj(del xi) ) / D
// with D = |d+eta|^2 - |d-eta|^2.  The orientation of D is fixed so that the
// outgoing congruence of lines through the origin has rho = +1/r, matching
// the slope expressions rho = (r+rho0)/((r+rho0)^2 - |sigma0|^2) and
// sigma = sigma0/((r+rho0)^2 - |sigma0|^2) on graphs.  Throws on a
// degenerate frame (|D| below tol relative to the entering magnitudes).
struct OpticalScalars {
  complex rho;
  complex sigma;
};

OpticalScalars spin_coefficients_parametric(SpaceKind space,
                                            const ParametricCongruence& cong,
                                            complex nu, double r,
                                            double degenerate_tol = 1e-12);

OpticalScalars spin_coefficients_from_slopes(const Slopes& sl, double r);

// Pullback of the symplectic form to the congruence (zero iff Lagrangian at
// the point).  For a graph section this equals 2 e^{2u} Im(rho0).
double lagrangian_residual(SpaceKind space, const ParametricCongruence& cong,
                           complex nu);
double lagrangian_residual(SpaceKind space, const SectionJet& sec, complex xi);

// sigma^2 of the coordinate tangents (zero iff the point is holomorphic).
// For a graph section this equals e^{4u} |delbar F|^2.
double holomorphic_residual(SpaceKind space, const ParametricCongruence& cong,
                            complex nu);
double holomorphic_residual(SpaceKind space, const SectionJet& sec, complex xi);

enum class InducedSignature { lorentzian, degenerate, riemannian };

// Induced metric in the (Re nu, Im nu) basis.
struct InducedMetric {
  double e, f, g;  // [[e, f], [f, g]]
  double det;
  InducedSignature signature;
};

InducedMetric induced_metric(SpaceKind space, const ParametricCongruence& cong,
                             complex nu, double degenerate_tol = 1e-10);

// Integrates the support 1-form  dr = 2 Re[ (+/- 2F/(1 +/- xi xibar)^2) dxibar ]
// along a polyline in the xi-chart, starting from r0 at path.front().  The
// integral is path-independent exactly when the section is Lagrangian; the
// residual is checked along the way and a std::invalid_argument is thrown when
// it exceeds lagrangian_tol.
struct SupportOptions {
  int subdivisions = 64;         // Gauss-Legendre panels per polyline edge
  double lagrangian_tol = 1e-6;  // gate on the Lagrangian residual
};

double support_integrate(SpaceKind space, const SectionJet& sec,
                         std::span<const complex> path, double r0,
                         const SupportOptions& opt = {});

// Residual of the differential relation between the slopes,
//   delbar rho0 + e^{-2u} del(sigma0bar e^{2u}) + F e^{2u} kappa / 2,
// an identity for every section.  The left side differentiates the rho0
// field through its own route, so with finite-difference jets the value
// reflects the jet error; with analytic jets it vanishes to roundoff.
complex slope_relation_residual(SpaceKind space, const SectionJet& sec, complex xi);

// Scalar curvature of the metric induced on a Lagrangian graph section,
//   K = -(1 +/- xi xibar)^2 / (8 |sigma0|^4) Im[ del(|sigma0|^2) delbar(r+rho0) ],
// where delbar(r+rho0) = -( del sigma0bar + 2 sigma0bar del u ) needs no
// explicit support function.  Throws std::domain_error at umbilic points
// (|sigma0| below umbilic_tol times the local scale).
double scalar_curvature_graph(SpaceKind space, const SectionJet& sec, complex xi,
                              double umbilic_tol = 1e-8);

// Principal curvatures from real divergence and shear:
// lambda1 = rho + |sigma| >= lambda2 = rho - |sigma|; the eigen-direction
// angle is arg(sigma)/2.  Throws std::invalid_argument when Im(rho)
// exceeds tol (congruence not orthogonal to a surface there).
struct PrincipalCurvatures {
  double lambda1;
  double lambda2;
  double angle;  // eigen-direction angle, arg(sigma)/2
};

PrincipalCurvatures principal_curvatures(complex rho, complex sigma,
                                         double tol = 1e-8);

// Everything the analysis CSV wants at one point of a graph congruence.
struct SpinData {
  complex sigma0;
  double rho0;  // real part; the imaginary part is the Lagrangian residual scale
  double r;
  double rho;
  complex sigma;
  double lambda1, lambda2;
  double K;
  bool umbilic;  // K and lambdas are NaN when set
};

SpinData analyze_graph_point(SpaceKind space, const SectionJet& sec, complex xi,
                             double r, double umbilic_tol = 1e-8);

// Weingarten detector over a square grid [-extent, extent]^2 (cells outside
// the chart or within margin of the disc boundary are skipped).  Two
// independent detectors must agree:
//   1. max |K| over the grid (scalar-flatness of the induced metric);
//   2. the finite-difference wedge d lambda1 ^ d lambda2 on the surface at
//      support distance r(xi) integrated from the grid centre.
struct WeingartenReport {
  bool is_weingarten;      // verdict of the K detector
  bool wedge_verdict;      // verdict of the wedge detector
  bool detectors_agree;
  double max_abs_k;
  double max_abs_wedge;        // max |d l1 ^ d l2|
  double max_rel_wedge;        // normalized by |d l1| |d l2|
  int umbilic_cells;
  int evaluated_cells;
};

struct WeingartenOptions {
  int grid = 20;
  double extent = 0.45;
  double k_tol = 1e-6;
  double wedge_rel_tol = 1e-3;
  double umbilic_tol = 1e-8;
};

WeingartenReport weingarten_test(SpaceKind space, const SectionJet& sec,
                                 const WeingartenOptions& opt = {});

// Image of a graph section under a rigid motion, as a section over the new
// chart coordinate.  Exact (polynomial) for pure t-axis rotations and
// translations; general rotations fall back to a finite-difference section.
SectionJet transform_graph_section(SpaceKind space, const RigidMotion& m,
                                   const SectionJet& sec, double fd_step = 1e-3);

}  // namespace linespace
