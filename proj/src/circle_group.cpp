#include "amac/circle_group.hpp"

#include <cmath>
#include <string>

namespace amac {
namespace {

void require_finite_coord(LineCoord x) {
  if (!std::isfinite(x.value)) {
    throw InvalidAngle("line coordinate must be finite, got " +
                       std::to_string(x.value));
  }
}

void require_usable_pole(Angle pole) {
  double p = pole.radians();
  if (std::min(p, kTwoPi - p) < kPoleEpsilon) {
    throw DegenerateReference(
        "reference point coincides with the tangent point (pole " +
        std::to_string(p) + " rad)");
  }
}

}  // namespace

Angle normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidAngle("angle must be finite, got " + std::to_string(radians));
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;  // the += above may round up to 2*pi
  return Angle(r == 0.0 ? 0.0 : r);
}

double angular_distance(Angle a, Angle b) {
  double d = std::fabs(a.radians() - b.radians());
  return std::min(d, kTwoPi - d);
}

Angle multiply(Angle a, Angle b, Angle o) {
  // Short-circuit the exact identity; a + o - o does not round-trip in
  // floating point when a is many orders of magnitude below o.
  if (b == o) return a;
  if (a == o) return b;
  return normalize_angle(a.radians() + b.radians() - o.radians());
}

Angle project(LineCoord x, Angle pole) {
  require_finite_coord(x);
  require_usable_pole(pole);
  if (x.value == 0.0) return Angle{};  // tangent point is invariant
  double phi = pole.radians();
  double theta =
      2.0 * std::atan2(1.0 - std::cos(phi), std::sin(phi) - x.value) - phi;
  return normalize_angle(theta);
}

LineCoord project_back(Angle theta, Angle pole) {
  require_usable_pole(pole);
  double d = normalize_angle(theta.radians() + pole.radians()).radians();
  if (std::min(d, kTwoPi - d) < kPoleEpsilon) {
    throw PoleProjection("circle point " + std::to_string(theta.radians()) +
                         " rad has no finite preimage through pole " +
                         std::to_string(pole.radians()) + " rad");
  }
  if (theta.radians() == 0.0) return LineCoord{0.0};
  double phi = pole.radians();
  double u = 0.5 * (theta.radians() + phi);
  double x = std::sin(phi) - (1.0 - std::cos(phi)) * (std::cos(u) / std::sin(u));
  return LineCoord{x};
}

}  // namespace amac
