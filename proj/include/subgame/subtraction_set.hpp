#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace subgame {

inline constexpr std::uint32_t kDefaultMaxSubtrahend = 65535;

/// The subtraction set {s1, s2, s3} of a heap game. Always strictly ordered;
/// construction through `make` validates the bounds.
class SubtractionSet {
 public:
  /// Throws InvalidGame unless 1 <= s1 < s2 < s3 <= max_subtrahend.
  static SubtractionSet make(std::uint32_t s1, std::uint32_t s2, std::uint32_t s3,
                             std::uint32_t max_subtrahend = kDefaultMaxSubtrahend);

  std::uint32_t s1() const { return moves_[0]; }
  std::uint32_t s2() const { return moves_[1]; }
  std::uint32_t s3() const { return moves_[2]; }
  const std::array<std::uint32_t, 3>& moves() const { return moves_; }

  std::string to_string() const;

  friend bool operator==(const SubtractionSet&, const SubtractionSet&) = default;
  friend auto operator<=>(const SubtractionSet&, const SubtractionSet&) = default;

 private:
  explicit SubtractionSet(std::array<std::uint32_t, 3> moves) : moves_(moves) {}
  std::array<std::uint32_t, 3> moves_;
};

}  // namespace subgame
