#include "amac/pipeline.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "amac/ref_matcher.hpp"

namespace amac {
namespace {

// The whole computation lives in R_2pi: a folded block value is read as an
// element of the fundamental domain before it goes back onto the circle.
// fmod is exact, so this is deterministic and, for h1 (already in range),
// a bit-exact no-op.
double fold_to_period(long double v) {
  long double r = fmodl(v, static_cast<long double>(kTwoPi));
  if (r < 0.0L) r += static_cast<long double>(kTwoPi);
  double d = static_cast<double>(r);
  if (d >= kTwoPi) d -= kTwoPi;  // cast may round up to the period
  return d == 0.0 ? 0.0 : d;
}

class Encoder {
 public:
  Encoder(const KeyPair& keys, BhfKind kind, EncodeOptions options,
          EncodeStats* stats)
      : matcher_(keys.identifier), kind_(kind), options_(options), stats_(stats) {
    if (kind.h2_base < 2) {
      throw std::invalid_argument("h2_base must be at least 2");
    }
    const Angle pi = normalize_angle(kPi);
    key_point_ = project(LineCoord{encode_key(keys.primary_key)}, pi);
    ckey_ = project(LineCoord{encode_key(keys.identifier)}, pi);
    count_project(2);
    cref_ = pi;
  }

  Tag run(std::string_view msg) {
    tag_ = multiply(tag_, key_point_, cref_);
    count_multiply(1);
    if (!options_.compat_literal) {
      cref_ = next_reference("initial key fold");
    }
    for (std::size_t i = 0; i < msg.size(); ++i) {
      auto c = static_cast<unsigned char>(msg[i]);
      if (!matcher_.feed(c)) {
        block_.codes.push_back(static_cast<double>(c));
      } else {
        if (stats_) stats_->matches++;
        flush("flush at byte " + std::to_string(i));
      }
    }
    if (!options_.compat_literal && !block_.codes.empty()) {
      flush("trailing flush");
    }
    tag_ = multiply(tag_, ckey_, cref_);
    count_multiply(1);
    if (stats_) stats_->project_back_calls++;
    return Tag{project_back(tag_, normalize_angle(kPi)).value, kind_};
  }

 private:
  void flush(const std::string& step) {
    long double raw =
        kind_.heuristic == Heuristic::H1
            ? static_cast<long double>(bhf1(block_, cref_))
            : bhf2(block_, kind_.h2_base);
    if (kind_.heuristic == Heuristic::H1) {
      count_project(block_.codes.size() + 1);
      count_multiply(block_.codes.size() + 1);
    }
    if (!std::isfinite(raw)) {
      throw BlockOverflow("block heuristic saturated (" + step + ", block of " +
                          std::to_string(block_.codes.size()) + " bytes)");
    }
    block_.chain = fold_to_period(raw);
    Angle chain_point = project(LineCoord{block_.chain}, cref_);
    count_project(1);
    tag_ = multiply(ckey_, chain_point, cref_);
    count_multiply(1);
    cref_ = next_reference(step);
    block_.codes.clear();
    block_.chain = chain_point.radians();
    if (stats_) stats_->flushes++;
  }

  Angle next_reference(const std::string& step) {
    Angle cref = normalize_angle(kPi - tag_.radians());
    double c = cref.radians();
    if (std::min(c, kTwoPi - c) < kPoleEpsilon) {
      throw DegenerateReference("reference point reached the tangent point (" +
                                step + ")");
    }
    return cref;
  }

  void count_project(std::uint64_t n) {
    if (stats_) stats_->project_calls += n;
  }
  void count_multiply(std::uint64_t n) {
    if (stats_) stats_->multiply_calls += n;
  }

  RefMatcher matcher_;
  BhfKind kind_;
  EncodeOptions options_;
  EncodeStats* stats_;
  Angle key_point_;
  Angle ckey_;
  Angle tag_;
  Angle cref_;
  Block block_;
};

}  // namespace

double encode_key(std::string_view s) {
  if (s.empty()) throw InvalidKey("key must be non-empty");
  double sum = 0.0;
  for (unsigned char c : s) sum += static_cast<double>(c);
  return sum;
}

Tag amac_encode(std::string_view msg, const KeyPair& keys, BhfKind kind,
                EncodeOptions options, EncodeStats* stats) {
  if (stats) *stats = EncodeStats{};
  Encoder encoder(keys, kind, options, stats);
  return encoder.run(msg);
}

bool verify(std::string_view msg, const KeyPair& keys, BhfKind kind,
            const Tag& expected, std::string* diagnostic) {
  Tag recomputed;
  try {
    recomputed = amac_encode(msg, keys, kind);
  } catch (const Error& e) {
    if (diagnostic) *diagnostic = std::string("recompute failed: ") + e.what();
    return false;
  }
  bool ok = serialize_tag(recomputed) == serialize_tag(expected);
  if (!ok && diagnostic) *diagnostic = "tag mismatch";
  return ok;
}

std::string serialize_tag(const Tag& tag) {
  if (!std::isfinite(tag.value)) {
    throw std::invalid_argument("tag value must be finite");
  }
  char buf[48];
  auto r = std::to_chars(buf, buf + sizeof(buf), tag.value,
                         std::chars_format::hex);
  std::string hex(buf, r.ptr);
  std::string lit = hex[0] == '-' ? "-0x" + hex.substr(1) : "0x" + hex;
  return std::string("AMAC1;") +
         (tag.kind.heuristic == Heuristic::H1 ? "h1" : "h2") + ";" +
         std::to_string(tag.kind.h2_base) + ";" + lit;
}

Tag parse_tag(std::string_view text) {
  auto fail = [](const std::string& why) {
    throw ParseError("bad tag text: " + why);
  };

  std::array<std::string_view, 4> fields;
  std::size_t count = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      if (count == fields.size()) fail("too many fields");
      fields[count++] = text.substr(start, i - start);
      start = i + 1;
    }
  }
  if (count != fields.size()) fail("too few fields");

  if (fields[0] != "AMAC1") fail("unknown format marker");

  Tag tag;
  if (fields[1] == "h1") {
    tag.kind.heuristic = Heuristic::H1;
  } else if (fields[1] == "h2") {
    tag.kind.heuristic = Heuristic::H2;
  } else {
    fail("unknown heuristic");
  }

  std::string_view base = fields[2];
  auto br = std::from_chars(base.data(), base.data() + base.size(),
                            tag.kind.h2_base);
  if (br.ec != std::errc{} || br.ptr != base.data() + base.size() ||
      tag.kind.h2_base < 2) {
    fail("bad h2 base");
  }

  std::string_view lit = fields[3];
  bool neg = !lit.empty() && lit[0] == '-';
  if (neg) lit.remove_prefix(1);
  if (!lit.starts_with("0x")) fail("value is not a hex float literal");
  lit.remove_prefix(2);
  auto vr = std::from_chars(lit.data(), lit.data() + lit.size(), tag.value,
                            std::chars_format::hex);
  if (vr.ec != std::errc{} || vr.ptr != lit.data() + lit.size() ||
      !std::isfinite(tag.value)) {
    fail("bad hex float value");
  }
  if (neg) tag.value = -tag.value;
  return tag;
}

std::string format_tag_display(const Tag& tag) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", tag.value);
  return buf;
}

std::optional<PermutablePair> find_permutable_pair(std::string_view msg,
                                                   std::string_view identifier) {
  RefMatcher matcher(identifier);
  std::optional<std::size_t> prev;  // previous rejected position in this block
  for (std::size_t i = 0; i < msg.size(); ++i) {
    if (matcher.feed(static_cast<unsigned char>(msg[i]))) {
      prev.reset();  // block boundary
    } else {
      if (prev && msg[*prev] != msg[i]) return PermutablePair{*prev, i};
      prev = i;
    }
  }
  return std::nullopt;
}

}  // namespace amac
