#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subgame/conjecture.hpp"
#include "subgame/period.hpp"
#include "subgame/subtraction_set.hpp"

namespace subgame {

/// Outcome of checking one triple against the conjecture. A detection
/// failure leaves measured_period / measured_preperiod empty.
struct VerificationRecord {
  SubtractionSet game;
  GameCase game_case = GameCase::CaseI;
  std::optional<std::uint64_t> measured_period;
  std::optional<std::uint64_t> measured_preperiod;
  Prediction prediction;
  bool prediction_ok = false;
  std::optional<std::uint64_t> matched_candidate;
  std::uint64_t sequence_length_used = 0;

  bool detection_failed() const { return !measured_period.has_value(); }
  bool mismatch() const { return !detection_failed() && !prediction_ok; }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

VerificationRecord verify_one(const SubtractionSet& game, const DetectionLimits& limits = {});

/// One output line (no trailing newline). Keys in fixed order:
/// s1 s2 s3 case preperiod period predicted ok [matched_candidate] seq_len.
std::string to_json_line(const VerificationRecord& rec);

/// Inverse of to_json_line. Throws CorruptCheckpoint on malformed input.
VerificationRecord parse_record(std::string_view line);

/// Empty when `rec` satisfies the record invariants, else a description of
/// the first violation. Recomputes the prediction from the triple.
std::string record_violation(const VerificationRecord& rec);

/// Lexicographically ordered triples lo <= s1 < s2 < s3 <= hi, indexed from 0.
class TripleSpace {
 public:
  TripleSpace(std::uint32_t lo, std::uint32_t hi);

  std::uint64_t size() const { return size_; }
  std::uint32_t lo() const { return lo_; }
  std::uint32_t hi() const { return hi_; }

  SubtractionSet unrank(std::uint64_t index) const;
  std::uint64_t rank(const SubtractionSet& game) const;
  /// Lexicographic successor inside the space, or nullopt past the end.
  std::optional<SubtractionSet> next(const SubtractionSet& game) const;

 private:
  std::uint32_t lo_;
  std::uint32_t hi_;
  std::uint64_t size_;
};

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Static contiguous blocks; the first `total % workers` blocks get one extra.
std::vector<IndexRange> partition_blocks(std::uint64_t total, std::size_t workers);

struct SweepConfig {
  std::uint32_t s_min = 1;
  std::uint32_t s_max = 0;
  std::size_t worker_count = 1;
  std::filesystem::path output_path;
  std::size_t checkpoint_interval = 1000;
  DetectionLimits limits;
};

/// Throws InvalidConfig when the config cannot be run.
void validate(const SweepConfig& config);

/// Files that live next to the merged output.
struct SweepPaths {
  std::filesystem::path output;
  std::filesystem::path checkpoint;
  std::filesystem::path mismatches;
  std::filesystem::path failures;
  std::filesystem::path shard(std::size_t worker) const;
};

SweepPaths sweep_paths(const std::filesystem::path& output);

/// Hooks for stopping a sweep early. Stopping flushes every shard and writes
/// a final checkpoint, leaving a state `resume` can continue.
struct SweepControl {
  const std::atomic<bool>* cancel = nullptr;
  /// Each worker stops after this many records in this run; 0 = no limit.
  std::size_t per_worker_record_limit = 0;
};

struct SweepSummary {
  std::uint64_t total = 0;
  std::uint64_t case1_count = 0;
  std::uint64_t case2_count = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t failures = 0;
  /// Records computed by this invocation (less than total after a resume).
  std::uint64_t processed = 0;
  bool complete = false;
  double wall_seconds = 0.0;

  bool same_outcome(const SweepSummary& o) const {
    return total == o.total && case1_count == o.case1_count && case2_count == o.case2_count &&
           mismatches == o.mismatches && failures == o.failures && complete == o.complete;
  }
};

/// Fresh sweep: discards any previous checkpoint and shards for this output.
SweepSummary sweep(const SweepConfig& config, const SweepControl& control = {});

/// Continues from the checkpoint next to config.output_path; runs a fresh
/// sweep when there is none. Throws ConfigMismatch if the checkpoint was
/// written for a different range, worker count or detection limits, and
/// CorruptCheckpoint if it or a shard cannot be trusted.
SweepSummary resume(const SweepConfig& config, const SweepControl& control = {});

/// Counts over an already merged output file.
SweepSummary summarize_output(const std::filesystem::path& output);

}  // namespace subgame
