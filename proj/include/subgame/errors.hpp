#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subgame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A triple that violates 1 <= s1 < s2 < s3 <= max_subtrahend.
struct InvalidGame : Error {
  using Error::Error;
};

/// Requested sequence length exceeds the configured cap.
struct ResourceLimit : Error {
  using Error::Error;
};

/// Index window reaches past the computed prefix.
struct RangeError : Error {
  using Error::Error;
};

/// Case-specific conjecture routine called on the wrong case.
struct InvalidCase : Error {
  using Error::Error;
};

struct DetectionFailure : Error {
  DetectionFailure(const std::string& what, std::size_t cap, std::size_t longest)
      : Error(what), cap(cap), longest_candidate(longest) {}
  std::size_t cap;
  std::size_t longest_candidate;
};

/// Sweep settings that cannot be run.
struct InvalidConfig : Error {
  using Error::Error;
};

struct ConfigMismatch : Error {
  using Error::Error;
};

struct CorruptCheckpoint : Error {
  using Error::Error;
};

struct OutputError : Error {
  using Error::Error;
};

}  // namespace subgame
