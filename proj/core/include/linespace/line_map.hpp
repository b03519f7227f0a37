#pragma once

#include <utility>

#include "linespace/space.hpp"

// The correspondence Phi between (oriented line, affine parameter) and points
// of 3-space.  An oriented line is a point (xi, eta) of TN; r is the affine
// distance from the point on the line closest to the origin.  Upper signs
// below are the Euclidean case, lower signs the Lorentzian one:
//
//   z = [ 2(eta -/+ etabar xi^2) + 2 xi (1 +/- xi xibar) r ] / (1 +/- xi xibar)^2
//   t = [ -/+ 2(eta xibar + etabar xi) + (1 - xi^2 xibar^2) r ] / (1 +/- xi xibar)^2
//
// with inverse
//
//   eta = (z - 2 t xi -/+ zbar xi^2)/2
//   r   = [ +/- xibar z +/- xi zbar + (1 -/+ xi xibar) t ] / (1 +/- xi xibar).

namespace linespace {

struct LineWithParam {
  LinePoint line;
  double r;
};

// Direction vector of the line with base coordinate xi, as (z, t) components.
// Euclidean: |z|^2 + t^2 = 1.  Lorentzian: |z|^2 - t^2 = -1 with t >= 1.
struct Direction {
  complex z;
  double t;
};

SpacePoint to_space(SpaceKind space, const LineWithParam& lw);

LineWithParam from_space(SpaceKind space, complex xi, SpacePoint p);

Direction direction_vector(SpaceKind space, complex xi);

// Reconstructs the oriented line through p with direction d.  d must be unit
// (Euclidean) or unit future-pointing time-like (Lorentzian) within tol; the
// Euclidean south pole (t = -1) has no chart coordinate and is rejected.
LinePoint line_from_point_direction(SpaceKind space, SpacePoint p, Direction d,
                                    double tol = 1e-9);

}  // namespace linespace
