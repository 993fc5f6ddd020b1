#include "amac/block_heuristics.hpp"

#include <algorithm>

namespace amac {

double bhf1(const Block& block, Angle cref) {
  std::vector<double> points;
  points.reserve(block.codes.size() + 1);
  points.push_back(project(LineCoord{block.chain}, cref).radians());
  for (double code : block.codes) {
    points.push_back(project(LineCoord{code}, cref).radians());
  }
  // Canonical fold order: the product is order-free in exact arithmetic,
  // sorting makes it order-free in rounded arithmetic too.
  std::sort(points.begin(), points.end());
  Angle acc;  // 0
  for (double p : points) {
    acc = multiply(acc, normalize_angle(p), cref);
  }
  return acc.radians();
}

long double bhf2(const Block& block, int base) {
  long double temp = 0.0L;
  long double multiplier = base;
  temp = temp * multiplier + static_cast<long double>(block.chain);
  multiplier += 1.0L;
  for (double code : block.codes) {
    temp = temp * multiplier + static_cast<long double>(code);
    multiplier += 1.0L;
  }
  return temp;
}

}  // namespace amac
