#pragma once

#include "amac/errors.hpp"

// Closed-form stereographic projection and the parallel-chord group law.
//
// The model is fixed once and for all: C is the unit circle centered at
// (0, 1), tangent to the x-axis (the line L) at the origin. A circle point
// is parameterized by arc length from the tangent point,
//
//   theta  ->  (sin theta, 1 - cos theta),      theta in [0, 2*pi)
//
// so theta = 0 is the tangent point P and theta = pi is the top of the
// circle. Projection joins a line point (x, 0) with a chosen pole on C and
// takes the second intersection with C; the group product of a and b with
// respect to an identity point o is the second intersection of the chord
// through o parallel to the chord ab, which collapses to the closed form
// (a + b - o) mod 2*pi in this parameterization. The slower coordinate
// constructions that validate these closed forms live in geometry_oracle.

namespace amac {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Poles closer than this (in radians, around the circle) to the tangent
// point are rejected: projection through P is undefined.
inline constexpr double kPoleEpsilon = 1e-12;

class Angle;
Angle normalize_angle(double radians);

/// A circle point in arc-length coordinates, normalized to [0, 2*pi).
/// Construct through normalize_angle(); the invariant is never violated.
class Angle {
 public:
  constexpr Angle() = default;

  double radians() const { return value_; }

  friend bool operator==(Angle, Angle) = default;

 private:
  explicit constexpr Angle(double v) : value_(v) {}
  double value_ = 0.0;

  friend Angle normalize_angle(double);
};

/// A coordinate on the tangent line L. Any finite real; 0 is the tangent
/// point.
struct LineCoord {
  double value = 0.0;
};

/// Reduce radians into [0, 2*pi). Idempotent; -0.0 canonicalizes to +0.0.
/// Throws InvalidAngle on non-finite input.
Angle normalize_angle(double radians);

/// Distance between two angles around the circle, in [0, pi].
double angular_distance(Angle a, Angle b);

/// Group product of a and b with respect to the identity point o:
/// (a + b - o) mod 2*pi. The identity operand is short-circuited so that
/// multiply(a, o, o) == a holds bit-exactly.
Angle multiply(Angle a, Angle b, Angle o);

/// Stereographic image of the line point x through `pole`: the second
/// intersection of the line through pole and (x, 0) with the circle,
///
///   theta = 2*atan2(1 - cos(pole), sin(pole) - x) - pole   (mod 2*pi).
///
/// The tangent point is a fixed point: project(0, pole) == 0 exactly.
/// Throws DegenerateReference if the pole coincides with the tangent point.
Angle project(LineCoord x, Angle pole);

/// Preimage of theta under project(., pole):
///
///   x = sin(pole) - (1 - cos(pole)) * cot((theta + pole) / 2).
///
/// Throws PoleProjection when theta + pole == 0 (mod 2*pi) within
/// kPoleEpsilon: that is the one circle point whose chord through the pole
/// runs parallel to L and has no finite preimage. (For pole = pi this is
/// theta == pi, the pole itself.)
LineCoord project_back(Angle theta, Angle pole);

}  // namespace amac
