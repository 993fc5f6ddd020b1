#include "amac/geometry_oracle.hpp"

#include <cmath>

namespace amac {
namespace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Second intersection of the line p0 + t*dir with the circle, where p0 is
// already on the circle (so t = 0 is one root). Solves the quadratic with
// numerically computed coefficients and keeps the root farther from the
// pole parameter t = 0; coincident roots mean tangency and return t = 0.
double second_intersection_parameter(const Vec2& p0, const Vec2& dir) {
  Vec2 rel{p0.x, p0.y - 1.0};  // p0 - center
  double a = dot(dir, dir);
  double b = 2.0 * dot(rel, dir);
  double c = dot(rel, rel) - 1.0;  // ~0 up to rounding
  double disc = b * b - 4.0 * a * c;
  double sq = std::sqrt(std::max(disc, 0.0));
  double q = -0.5 * (b + std::copysign(sq, b));
  if (q == 0.0) return 0.0;  // tangent line
  double t1 = q / a;
  double t2 = c / q;
  return std::fabs(t1) >= std::fabs(t2) ? t1 : t2;
}

}  // namespace

CirclePoint angle_to_point(Angle theta) {
  return CirclePoint{std::sin(theta.radians()), 1.0 - std::cos(theta.radians())};
}

Angle point_to_angle(const CirclePoint& p) {
  return normalize_angle(std::atan2(p.x, 1.0 - p.y));
}

Angle geometric_multiply(Angle a, Angle b, Angle o) {
  Vec2 dir;
  if (a == b) {
    // Chord direction degenerates; the limit is the tangent at a.
    dir = Vec2{std::cos(a.radians()), std::sin(a.radians())};
  } else {
    CirclePoint pa = angle_to_point(a);
    CirclePoint pb = angle_to_point(b);
    dir = Vec2{pa.x - pb.x, pa.y - pb.y};
  }
  CirclePoint po = angle_to_point(o);
  double t = second_intersection_parameter(Vec2{po.x, po.y}, dir);
  return point_to_angle(CirclePoint{po.x + t * dir.x, po.y + t * dir.y});
}

Angle geometric_project(LineCoord x, Angle pole) {
  if (!std::isfinite(x.value)) {
    throw InvalidAngle("line coordinate must be finite");
  }
  double p = pole.radians();
  if (std::min(p, kTwoPi - p) < kPoleEpsilon) {
    throw DegenerateReference("reference point coincides with the tangent point");
  }
  CirclePoint r = angle_to_point(pole);
  Vec2 dir{x.value - r.x, 0.0 - r.y};
  double t = second_intersection_parameter(Vec2{r.x, r.y}, dir);
  return point_to_angle(CirclePoint{r.x + t * dir.x, r.y + t * dir.y});
}

}  // namespace amac
