#pragma once

#include "amac/circle_group.hpp"

// Brute-force coordinate geometry used to cross-check circle_group.
//
// Nothing here is clever: points are materialized in the plane, chords are
// translated, and line-circle intersections are solved as quadratics. These
// constructions are the independent route against which the closed forms
// are validated; they are not used on the encode path.

namespace amac {

struct CirclePoint {
  double x = 0.0;
  double y = 0.0;
};

/// (sin theta, 1 - cos theta) on the unit circle centered at (0, 1).
CirclePoint angle_to_point(Angle theta);

/// Arc-length coordinate of a point on (or near) the circle.
Angle point_to_angle(const CirclePoint& p);

/// The parallel-chord construction: translate the chord ab (the tangent
/// direction at a when a == b) through o and return the second intersection
/// with the circle. Returns o itself when the translated line is tangent
/// there.
Angle geometric_multiply(Angle a, Angle b, Angle o);

/// Intersect the line through angle_to_point(pole) and (x, 0) with the
/// circle and return the intersection that is not the pole.
Angle geometric_project(LineCoord x, Angle pole);

}  // namespace amac
