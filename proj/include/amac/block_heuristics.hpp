#pragma once

#include <vector>

#include "amac/circle_group.hpp"

// Block heuristic functions: each folds one block of non-reference bytes
// (plus the chain slot carried over from the previous flush) into a single
// real.
//
// h1 projects every value onto the circle and multiplies the projections
// together with respect to the current reference point. The group is
// abelian, so the result depends only on the multiset of block bytes —
// reordering a block provably cannot change the tag. We make that exact at
// the bit level by folding the projections in canonical (sorted) order;
// left-to-right evaluation of an arbitrary arrival order would leak the
// order through floating-point rounding.
//
// h2 is a Horner scheme with an incrementing multiplier:
//
//   temp = temp * multiplier++ + value,   multiplier starting at h2_base.
//
// Every position gets a distinct weight, so transposing two distinct bytes
// changes the value: the order sensitivity h1 lacks. The value grows like
// multiplier^length and is accumulated in extended precision — on blocks of
// a few hundred bytes it exceeds binary64's range while remaining
// meaningful. Callers must treat a non-finite result as an error rather
// than feed it onward.

namespace amac {

enum class Heuristic { H1, H2 };

struct BhfKind {
  Heuristic heuristic = Heuristic::H1;
  int h2_base = 10;  // must be >= 2; h2 only

  friend bool operator==(const BhfKind&, const BhfKind&) = default;
};

/// One block: the chain slot (block[0], persists across flushes) followed
/// by the byte values appended since the last flush.
struct Block {
  double chain = 0.0;
  std::vector<double> codes;
};

/// Commutative projection product; result is an angle in [0, 2*pi),
/// returned as a raw double. Bit-identical under any permutation of codes.
double bhf1(const Block& block, Angle cref);

/// Incremental-multiplier Horner fold; may be astronomically large, and
/// +inf once the block is long enough (~1250 bytes) to exhaust even the
/// extended exponent range.
long double bhf2(const Block& block, int base = 10);

}  // namespace amac
