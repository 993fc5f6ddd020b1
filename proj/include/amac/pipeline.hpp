#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "amac/block_heuristics.hpp"
#include "amac/circle_group.hpp"

// The AMAC encode pipeline.
//
// Both parties share a 2-tuple: a primary key and an identifier (the
// reference string). Encoding walks the message once. Bytes that do not
// match the identifier's pending character accumulate into the current
// block; a match flushes the block through the active heuristic, projects
// the folded value onto the circle, multiplies the identifier's projection
// into the running tag and moves the reference point to pi - tag, so every
// later operation depends on everything already consumed. The final tag is
// the running circle point projected back to the line through pi.

namespace amac {

struct KeyPair {
  std::string primary_key;  // folded in at initialization and finalization
  std::string identifier;   // reference string; drives blocking, projects to ckey
};

struct Tag {
  double value = 0.0;
  BhfKind kind;

  friend bool operator==(const Tag&, const Tag&) = default;
};

struct EncodeOptions {
  // Reproduce the published recurrence exactly: leave the reference point
  // at pi until the first flush (discarding the primary key whenever the
  // message contains a match) and drop the bytes after the last match.
  bool compat_literal = false;
};

/// Operation counts for one encode; used to pin the O(n) cost contract.
struct EncodeStats {
  std::uint64_t project_calls = 0;
  std::uint64_t multiply_calls = 0;
  std::uint64_t project_back_calls = 0;
  std::uint64_t matches = 0;
  std::uint64_t flushes = 0;
};

/// Numeric value of a key string: the sum of its byte values.
/// Throws InvalidKey on an empty string.
double encode_key(std::string_view s);

/// Run the full encode. Throws InvalidKey / InvalidIdentifier on bad keys,
/// DegenerateReference / PoleProjection / BlockOverflow (each naming the
/// failing step) when the pipeline reaches a degenerate state.
Tag amac_encode(std::string_view msg, const KeyPair& keys, BhfKind kind,
                EncodeOptions options = {}, EncodeStats* stats = nullptr);

/// Recompute and compare canonical serializations bit-for-bit. A recompute
/// that fails (degenerate state) is a verification failure, reported
/// through `diagnostic` when given, never an exception.
bool verify(std::string_view msg, const KeyPair& keys, BhfKind kind,
            const Tag& expected, std::string* diagnostic = nullptr);

/// One-line lossless text form: AMAC1;<h1|h2>;<h2_base>;<hex-float>.
/// parse_tag(serialize_tag(t)) == t bit-exactly.
std::string serialize_tag(const Tag& tag);
Tag parse_tag(std::string_view text);

/// Human-readable decimal rendering, 17 significant digits.
std::string format_tag_display(const Tag& tag);

/// Positions of two adjacent distinct bytes inside one block of msg (bytes
/// the matcher rejects), if any block holds such a pair. Swapping them
/// provably preserves the h1 tag and, in general, changes the h2 tag.
struct PermutablePair {
  std::size_t first = 0;
  std::size_t second = 0;
};
std::optional<PermutablePair> find_permutable_pair(std::string_view msg,
                                                   std::string_view identifier);

}  // namespace amac
