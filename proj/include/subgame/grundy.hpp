#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "subgame/subtraction_set.hpp"

namespace subgame {

inline constexpr std::size_t kDefaultMaxSequenceLength = std::size_t{1} << 24;

using NimValue = std::uint8_t;

/// Grundy values of heaps 0 .. size()-1.
struct NimSequence {
  std::vector<NimValue> values;

  std::size_t size() const { return values.size(); }
  NimValue operator[](std::size_t h) const { return values[h]; }
  friend bool operator==(const NimSequence&, const NimSequence&) = default;
};

/// Least non-negative integer absent from `seen`.
unsigned mex(std::initializer_list<unsigned> seen);
unsigned mex(std::span<const unsigned> seen);

/// Reference engine: one byte per value, mex taken over an explicit set.
NimSequence nim_sequence(const SubtractionSet& game, std::size_t count,
                         std::size_t max_length = kDefaultMaxSequenceLength);

/// Nim sequence stored at 2 bits per value, 32 values per 64-bit word, lowest
/// heap in the lowest bits. Supports incremental extension and word-wide
/// window comparison.
class PackedNimSequence {
 public:
  static constexpr unsigned kValuesPerWord = 32;

  explicit PackedNimSequence(const SubtractionSet& game) : game_(game) {}

  const SubtractionSet& game() const { return game_; }
  std::size_t size() const { return size_; }

  /// Computes values up to (excluding) heap `count`. Never shrinks.
  void extend_to(std::size_t count);

  NimValue at(std::size_t h) const {
    return static_cast<NimValue>((words_[h / kValuesPerWord] >> (2 * (h % kValuesPerWord))) & 3u);
  }

  /// 32 consecutive values starting at heap `h` (h < size()), packed like
  /// the storage. Positions at or past size() read as zero.
  std::uint64_t chunk_at(std::size_t h) const;

  /// True iff at(a + i) == at(b + i) for every i < len. Caller guarantees
  /// both windows lie inside the computed prefix.
  bool windows_equal(std::size_t a, std::size_t b, std::size_t len) const;

  NimSequence unpack() const;

 private:
  void set(std::size_t h, unsigned v) {
    words_[h / kValuesPerWord] |= std::uint64_t{v} << (2 * (h % kValuesPerWord));
  }

  SubtractionSet game_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Same contract as nim_sequence, computed through PackedNimSequence.
NimSequence nim_sequence_packed(const SubtractionSet& game, std::size_t count,
                                std::size_t max_length = kDefaultMaxSequenceLength);

}  // namespace subgame
