#include <fmt/format.h>

#include "subgame/errors.hpp"
#include "subgame/harness.hpp"

namespace subgame {

namespace {

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

TripleSpace::TripleSpace(std::uint32_t lo, std::uint32_t hi)
    : lo_(lo), hi_(hi), size_(lo >= 1 && hi >= lo ? choose3(std::uint64_t{hi} - lo + 1) : 0) {}

SubtractionSet TripleSpace::unrank(std::uint64_t index) const {
  if (index >= size_) {
    throw RangeError(fmt::format("triple index {} outside a space of {}", index, size_));
  }
  std::uint32_t a = lo_;
  // Triples starting with a: choose the other two from (a, hi].
  for (;; ++a) {
    const std::uint64_t block = choose2(hi_ - a);
    if (index < block) break;
    index -= block;
  }
  std::uint32_t b = a + 1;
  for (;; ++b) {
    const std::uint64_t block = hi_ - b;
    if (index < block) break;
    index -= block;
  }
  return SubtractionSet::make(a, b, static_cast<std::uint32_t>(b + 1 + index), hi_);
}

std::uint64_t TripleSpace::rank(const SubtractionSet& game) const {
  if (game.s1() < lo_ || game.s3() > hi_) {
    throw RangeError(fmt::format("{} outside [{}, {}]", game.to_string(), lo_, hi_));
  }
  std::uint64_t index = 0;
  for (std::uint32_t a = lo_; a < game.s1(); ++a) index += choose2(hi_ - a);
  for (std::uint32_t b = game.s1() + 1; b < game.s2(); ++b) index += hi_ - b;
  return index + (game.s3() - game.s2() - 1);
}

std::optional<SubtractionSet> TripleSpace::next(const SubtractionSet& game) const {
  std::uint32_t a = game.s1(), b = game.s2(), c = game.s3() + 1;
  if (c > hi_) {
    ++b;
    c = b + 1;
  }
  if (c > hi_) {
    ++a;
    b = a + 1;
    c = b + 1;
  }
  if (c > hi_) return std::nullopt;
  return SubtractionSet::make(a, b, c, hi_);
}

std::vector<IndexRange> partition_blocks(std::uint64_t total, std::size_t workers) {
  if (workers == 0) throw InvalidConfig("worker count must be at least 1");
  std::vector<IndexRange> blocks;
  blocks.reserve(workers);
  const std::uint64_t base = total / workers;
  const std::uint64_t extra = total % workers;
  std::uint64_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t len = base + (w < extra ? 1 : 0);
    blocks.push_back({begin, begin + len});
    begin += len;
  }
  return blocks;
}

}  // namespace subgame
