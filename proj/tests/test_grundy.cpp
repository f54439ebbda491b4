#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "subgame/errors.hpp"
#include "subgame/grundy.hpp"

using namespace subgame;

namespace {

std::vector<NimValue> values(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("mex") {
  CHECK(mex({}) == 0);
  CHECK(mex({0, 1, 2}) == 3);
  CHECK(mex({1, 2}) == 0);
  CHECK(mex({0, 0, 2}) == 1);
}

TEST_CASE("subtraction set validation") {
  CHECK_NOTHROW(SubtractionSet::make(1, 2, 3));
  CHECK_THROWS_AS(SubtractionSet::make(0, 2, 3), InvalidGame);
  CHECK_THROWS_AS(SubtractionSet::make(2, 2, 3), InvalidGame);
  CHECK_THROWS_AS(SubtractionSet::make(3, 2, 1), InvalidGame);
  CHECK_THROWS_AS(SubtractionSet::make(1, 2, 65536), InvalidGame);
  CHECK_THROWS_AS(SubtractionSet::make(1, 2, 11, 10), InvalidGame);
  CHECK(SubtractionSet::make(1, 2, 3).to_string() == "S(1,2,3)");
}

TEST_CASE("reference engine on known games") {
  CHECK(nim_sequence(SubtractionSet::make(1, 2, 3), 8).values == values({0, 1, 2, 3, 0, 1, 2, 3}));
  CHECK(nim_sequence(SubtractionSet::make(2, 3, 5), 15).values ==
        values({0, 0, 1, 1, 2, 2, 3, 0, 0, 1, 1, 2, 2, 3, 0}));
  CHECK(nim_sequence(SubtractionSet::make(5, 9, 14), 1).values == values({0}));
}

TEST_CASE("packed engine on known games") {
  CHECK(nim_sequence_packed(SubtractionSet::make(1, 2, 4), 7).values ==
        values({0, 1, 2, 0, 1, 2, 0}));
  const auto g = SubtractionSet::make(1, 2, 3);
  CHECK(nim_sequence_packed(g, 8) == nim_sequence(g, 8));
  const auto h = SubtractionSet::make(4, 9, 12);
  CHECK(nim_sequence_packed(h, 10'000) == nim_sequence(h, 10'000));
}

TEST_CASE("length cap and empty requests") {
  const auto g = SubtractionSet::make(1, 2, 3);
  CHECK_THROWS_AS(nim_sequence(g, 101, 100), ResourceLimit);
  CHECK_THROWS_AS(nim_sequence_packed(g, 101, 100), ResourceLimit);
  CHECK_NOTHROW(nim_sequence(g, 100, 100));
  CHECK_THROWS_AS(nim_sequence(g, 0), RangeError);
}

TEST_CASE("both engines match the brute-force oracle for every triple with s3 <= 64") {
  for (std::uint32_t c = 3; c <= 64; ++c) {
    for (std::uint32_t b = 2; b < c; ++b) {
      for (std::uint32_t a = 1; a < b; ++a) {
        const auto g = SubtractionSet::make(a, b, c);
        const std::size_t n = 1000 + 37 * c;
        const auto expected = oracle::nim_values(a, b, c, n);
        const auto packed = nim_sequence_packed(g, n);
        REQUIRE(std::equal(expected.begin(), expected.end(), packed.values.begin()));
        if (c % 8 == 0) REQUIRE(nim_sequence(g, n) == packed);
      }
    }
  }
}

TEST_CASE("value bound, recurrence and prefix stability") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::uint32_t> pick(3, 200);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t c = pick(rng);
    const std::uint32_t b = std::uniform_int_distribution<std::uint32_t>(2, c - 1)(rng);
    const std::uint32_t a = std::uniform_int_distribution<std::uint32_t>(1, b - 1)(rng);
    const auto g = SubtractionSet::make(a, b, c);
    const std::size_t n = 5000;
    const auto seq = nim_sequence_packed(g, n);
    CHECK(seq[0] == 0);
    for (std::size_t h = 0; h < n; ++h) REQUIRE(seq[h] <= 3);
    for (int k = 0; k < 50; ++k) {
      const std::size_t h = std::uniform_int_distribution<std::size_t>(c, n - 1)(rng);
      REQUIRE(seq[h] == mex({seq[h - a], seq[h - b], seq[h - c]}));
    }
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const auto prefix = nim_sequence_packed(g, m);
    REQUIRE(std::equal(prefix.values.begin(), prefix.values.end(), seq.values.begin()));
  }
}

TEST_CASE("packed window comparison at arbitrary offsets") {
  const auto g = SubtractionSet::make(3, 7, 10);  // period 45
  PackedNimSequence seq(g);
  seq.extend_to(2000);
  const auto plain = seq.unpack();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 150)(rng);
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, 2000 - len)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, 2000 - len)(rng);
    bool expected = true;
    for (std::size_t i = 0; i < len; ++i) expected = expected && plain[a + i] == plain[b + i];
    REQUIRE(seq.windows_equal(a, b, len) == expected);
  }
  CHECK(seq.windows_equal(100, 145, 1800));
  CHECK_FALSE(seq.windows_equal(100, 144, 200));
}

TEST_CASE("incremental extension matches one-shot computation") {
  const auto g = SubtractionSet::make(4, 9, 12);
  PackedNimSequence grown(g);
  for (std::size_t n : {1u, 5u, 12u, 13u, 64u, 65u, 999u, 4096u}) grown.extend_to(n);
  grown.extend_to(10);  // never shrinks
  CHECK(grown.size() == 4096);
  CHECK(grown.unpack() == nim_sequence(g, 4096));
}
