#pragma once

#include <cstddef>

#include "subgame/grundy.hpp"
#include "subgame/subtraction_set.hpp"

namespace subgame {

struct DetectionLimits {
  /// Prefix length of the first attempt; 0 selects
  /// max(4*(s1+s2+s3), 4*s3) + s3.
  std::size_t initial_length = 0;
  /// Hard cap on the prefix length; the prefix doubles until it hits this.
  std::size_t max_length = kDefaultMaxSequenceLength;
};

/// Certified eventual behaviour of a nim sequence: the sequence is
/// `period`-periodic from heap `preperiod` onwards, both minimal.
struct PeriodCertificate {
  SubtractionSet game;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// Start of the length-s3 agreement window that proves the tail.
  std::size_t witness_start = 0;
  std::size_t sequence_length_used = 0;

  friend bool operator==(const PeriodCertificate&, const PeriodCertificate&) = default;
};

/// True iff seq[h] == seq[h + lag] for all h in [start, start + window).
/// Throws RangeError when start + lag + window exceeds seq.size().
bool certify_window(const NimSequence& seq, std::size_t start, std::size_t lag,
                    std::size_t window);
bool certify_window(const PackedNimSequence& seq, std::size_t start, std::size_t lag,
                    std::size_t window);

std::size_t default_initial_length(const SubtractionSet& game);

/// Finds the minimal period, then the minimal preperiod for that period.
///
/// Agreement at lag p over s3 consecutive heaps forces agreement at every
/// later heap, because each value is the mex of the three values s1, s2, s3
/// below it. So the scan checks one window at the end of the prefix for each
/// lag in ascending order; the first lag that agrees is the minimal period
/// (every eventual period is a multiple of the minimal one, and the minimal
/// one agrees wherever any multiple does). The agreement is then walked back
/// to the first heap where it holds. Throws DetectionFailure once the
/// prefix reaches `limits.max_length` without a certified lag.
PeriodCertificate find_period(const SubtractionSet& game, const DetectionLimits& limits = {});

/// Same as find_period, reusing (and extending) a caller-owned sequence.
PeriodCertificate find_period(PackedNimSequence& seq, const DetectionLimits& limits = {});

}  // namespace subgame
