#include "subgame/grundy.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <fmt/format.h>

#include "subgame/errors.hpp"

namespace subgame {

namespace {

void check_count(std::size_t count, std::size_t max_length) {
  if (count == 0) throw RangeError("sequence length must be at least 1");
  if (count > max_length) {
    throw ResourceLimit(
        fmt::format("sequence length {} exceeds the cap of {} values", count, max_length));
  }
}

}  // namespace

unsigned mex(std::span<const unsigned> seen) {
  std::set<unsigned> present(seen.begin(), seen.end());
  unsigned m = 0;
  while (present.contains(m)) ++m;
  return m;
}

unsigned mex(std::initializer_list<unsigned> seen) {
  return mex(std::span<const unsigned>(seen.begin(), seen.size()));
}

NimSequence nim_sequence(const SubtractionSet& game, std::size_t count, std::size_t max_length) {
  check_count(count, max_length);
  NimSequence seq;
  seq.values.reserve(count);
  std::vector<unsigned> options;
  for (std::size_t h = 0; h < count; ++h) {
    options.clear();
    for (auto s : game.moves()) {
      if (s <= h) options.push_back(seq.values[h - s]);
    }
    seq.values.push_back(static_cast<NimValue>(mex(options)));
  }
  return seq;
}

void PackedNimSequence::extend_to(std::size_t count) {
  if (count <= size_) return;
  // One spare word so chunk_at can always read words_[i + 1].
  words_.resize(count / kValuesPerWord + 2, 0);
  const auto [s1, s2, s3] = game_.moves();
  std::size_t h = size_;
  // Heaps below s3 lack at least one move.
  for (; h < count && h < s3; ++h) {
    unsigned seen = 0;
    for (auto s : game_.moves()) {
      if (s <= h) seen |= 1u << at(h - s);
    }
    set(h, static_cast<unsigned>(std::countr_one(seen)));
  }
  for (; h < count; ++h) {
    const unsigned seen = (1u << at(h - s1)) | (1u << at(h - s2)) | (1u << at(h - s3));
    set(h, static_cast<unsigned>(std::countr_one(seen)));
  }
  size_ = count;
}

std::uint64_t PackedNimSequence::chunk_at(std::size_t h) const {
  const std::size_t i = h / kValuesPerWord;
  const unsigned shift = 2 * (h % kValuesPerWord);
  if (shift == 0) return words_[i];
  return (words_[i] >> shift) | (words_[i + 1] << (64 - shift));
}

bool PackedNimSequence::windows_equal(std::size_t a, std::size_t b, std::size_t len) const {
  std::size_t off = 0;
  for (; off + kValuesPerWord <= len; off += kValuesPerWord) {
    if (chunk_at(a + off) != chunk_at(b + off)) return false;
  }
  const std::size_t rest = len - off;
  if (rest == 0) return true;
  const std::uint64_t mask = (std::uint64_t{1} << (2 * rest)) - 1;
  return ((chunk_at(a + off) ^ chunk_at(b + off)) & mask) == 0;
}

NimSequence PackedNimSequence::unpack() const {
  NimSequence seq;
  seq.values.resize(size_);
  for (std::size_t h = 0; h < size_; ++h) seq.values[h] = at(h);
  return seq;
}

NimSequence nim_sequence_packed(const SubtractionSet& game, std::size_t count,
                                std::size_t max_length) {
  check_count(count, max_length);
  PackedNimSequence packed(game);
  packed.extend_to(count);
  return packed.unpack();
}

}  // namespace subgame
