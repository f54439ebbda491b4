#include "subgame/period.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "subgame/errors.hpp"

namespace subgame {

namespace {

void check_window(std::size_t size, std::size_t start, std::size_t lag, std::size_t window) {
  if (start + lag + window > size) {
    throw RangeError(fmt::format("window [{}, {}) at lag {} exceeds the computed prefix of {}",
                                 start, start + window, lag, size));
  }
}

}  // namespace

bool certify_window(const NimSequence& seq, std::size_t start, std::size_t lag,
                    std::size_t window) {
  check_window(seq.size(), start, lag, window);
  for (std::size_t h = start; h < start + window; ++h) {
    if (seq[h] != seq[h + lag]) return false;
  }
  return true;
}

bool certify_window(const PackedNimSequence& seq, std::size_t start, std::size_t lag,
                    std::size_t window) {
  check_window(seq.size(), start, lag, window);
  return seq.windows_equal(start, start + lag, window);
}

std::size_t default_initial_length(const SubtractionSet& game) {
  const std::size_t s1 = game.s1(), s2 = game.s2(), s3 = game.s3();
  return std::max(4 * (s1 + s2 + s3), 4 * s3) + s3;
}

PeriodCertificate find_period(const SubtractionSet& game, const DetectionLimits& limits) {
  PackedNimSequence seq(game);
  return find_period(seq, limits);
}

PeriodCertificate find_period(PackedNimSequence& seq, const DetectionLimits& limits) {
  const SubtractionSet& game = seq.game();
  const std::size_t window = game.s3();
  const std::size_t cap = limits.max_length;
  if (cap < window + 1) {
    throw DetectionFailure(
        fmt::format("{}: cap of {} values is below s3 + 1", game.to_string(), cap), cap, 0);
  }

  std::size_t length = limits.initial_length ? limits.initial_length : default_initial_length(game);
  length = std::clamp(length, window + 1, cap);
  std::size_t longest = 0;

  for (;;) {
    seq.extend_to(length);
    // Tail window [start, start + s3) compared against [start + lag, length).
    for (std::size_t lag = 1; lag + window <= length; ++lag) {
      const std::size_t start = length - lag - window;
      if (!seq.windows_equal(start, start + lag, window)) {
        longest = std::max(longest, lag);
        continue;
      }
      std::size_t preperiod = start;
      while (preperiod > 0 && seq.at(preperiod - 1) == seq.at(preperiod - 1 + lag)) --preperiod;
      return PeriodCertificate{
          .game = game,
          .preperiod = preperiod,
          .period = lag,
          .witness_start = preperiod,
          .sequence_length_used = length,
      };
    }
    if (length >= cap) {
      throw DetectionFailure(fmt::format("{}: no period certified within {} values (longest "
                                         "candidate lag examined: {})",
                                         game.to_string(), cap, longest),
                             cap, longest);
    }
    length = std::min(length * 2, cap);
  }
}

}  // namespace subgame
