#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "amac/errors.hpp"

namespace amac {

/// Ordered-subsequence matcher over the identifier string. A fed byte
/// matches only when it equals the byte the cursor is waiting for; a match
/// advances the cursor (wrapping after the last position), anything else
/// leaves the state untouched. Comparison is case-sensitive byte equality.
class RefMatcher {
 public:
  /// Throws InvalidIdentifier unless `reference` is non-empty ASCII.
  explicit RefMatcher(std::string_view reference);

  /// True iff c is the byte currently waited for; advances on match.
  bool feed(unsigned char c);

  void reset() { cursor_ = 0; }

  std::string_view reference() const { return ref_; }
  std::size_t cursor() const { return cursor_; }

 private:
  std::string ref_;
  std::size_t cursor_ = 0;
};

}  // namespace amac
