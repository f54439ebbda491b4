#include "subgame/subtraction_set.hpp"

#include <fmt/format.h>

#include "subgame/errors.hpp"

namespace subgame {

SubtractionSet SubtractionSet::make(std::uint32_t s1, std::uint32_t s2, std::uint32_t s3,
                                    std::uint32_t max_subtrahend) {
  if (s1 < 1 || !(s1 < s2 && s2 < s3)) {
    throw InvalidGame(fmt::format("subtraction set ({}, {}, {}) must satisfy 1 <= s1 < s2 < s3",
                                  s1, s2, s3));
  }
  if (s3 > max_subtrahend) {
    throw InvalidGame(
        fmt::format("s3 = {} exceeds the maximum subtrahend {}", s3, max_subtrahend));
  }
  return SubtractionSet({s1, s2, s3});
}

std::string SubtractionSet::to_string() const {
  return fmt::format("S({},{},{})", s1(), s2(), s3());
}

}  // namespace subgame
