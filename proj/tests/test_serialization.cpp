#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <random>

#include "amac/pipeline.hpp"

using namespace amac;

namespace {
bool same_bits(double a, double b) { return std::memcmp(&a, &b, 8) == 0; }
}  // namespace

TEST_CASE("serialize/parse is a bit-exact round trip") {
  std::mt19937_64 rng(601);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::uniform_int_distribution<int> base(2, 99);
  for (int i = 0; i < 1000; ++i) {
    Tag tag{u(rng), BhfKind{i % 2 ? Heuristic::H1 : Heuristic::H2, base(rng)}};
    Tag back = parse_tag(serialize_tag(tag));
    REQUIRE(same_bits(back.value, tag.value));
    REQUIRE(back.kind == tag.kind);
  }
  // edge values
  for (double v : {0.0, -0.0, 1e-300, -1e-300, 2.2250738585072014e-308}) {
    Tag tag{v, BhfKind{}};
    Tag back = parse_tag(serialize_tag(tag));
    REQUIRE(same_bits(back.value, tag.value));
  }
}

TEST_CASE("serialized form is the documented line format") {
  Tag tag{2.71875, BhfKind{Heuristic::H2, 12}};  // 2.71875 = 0x1.5cp+1
  CHECK(serialize_tag(tag) == "AMAC1;h2;12;0x1.5cp+1");
  Tag neg{-0.5, BhfKind{Heuristic::H1, 10}};
  CHECK(serialize_tag(neg) == "AMAC1;h1;10;-0x1p-1");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_tag(""), ParseError);
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;10"), ParseError);  // truncated
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;10;0x1p+1;extra"), ParseError);
  CHECK_THROWS_AS(parse_tag("AMAC2;h1;10;0x1p+1"), ParseError);
  CHECK_THROWS_AS(parse_tag("AMAC1;h3;10;0x1p+1"), ParseError);
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;1;0x1p+1"), ParseError);    // base < 2
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;ten;0x1p+1"), ParseError);
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;10;1p+1"), ParseError);     // no 0x
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;10;0x1p+1junk"), ParseError);
  CHECK_THROWS_AS(parse_tag("AMAC1;h1;10;0xinf"), ParseError);
}

TEST_CASE("display uses at most 17 significant digits") {
  Tag tag{-0.10522713178368606, BhfKind{}};
  std::string shown = format_tag_display(tag);
  CHECK(shown == "-0.10522713178368606");
  int digits = 0;
  for (char c : shown) {
    if (c >= '0' && c <= '9') ++digits;
  }
  CHECK(digits <= 18);  // 17 significant plus the leading 0
  // displayed text parses back to the same double (17 digits suffice)
  CHECK(same_bits(std::stod(shown), tag.value));
}

TEST_CASE("tags signed then parsed verify") {
  KeyPair keys{"This is the first key.", "theveninester"};
  std::string msg = "it pushes ahead when it would be easy to quit";
  Tag tag = amac_encode(msg, keys, BhfKind{Heuristic::H2, 17});
  Tag parsed = parse_tag(serialize_tag(tag));
  CHECK(verify(msg, keys, parsed.kind, parsed));
}
