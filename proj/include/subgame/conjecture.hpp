#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "subgame/subtraction_set.hpp"

namespace subgame {

enum class GameCase { CaseI, CaseII };

std::string_view case_label(GameCase c);  // "I" or "II"

/// CaseI iff s3 == s1 + s2.
GameCase classify(const SubtractionSet& game);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

struct CaseIParams {
  enum class Branch { Low, High };
  std::uint64_t j = 0;  // (s2 - s1) mod 2*s1
  Branch branch = Branch::Low;
};

CaseIParams case1_params(const SubtractionSet& game);

/// Closed-form period for s3 == s1 + s2:
///   j <  s1: s2 + s3 - j
///   j >= s1: s1 * (s2 + s3 + j - 2*s1) / gcd(s1, 2*s1 - j)
/// Throws InvalidCase for any other triple.
std::uint64_t case1_period(const SubtractionSet& game);

struct PairSums {
  std::uint64_t sum12 = 0;
  std::uint64_t sum13 = 0;
  std::uint64_t sum23 = 0;

  std::array<std::uint64_t, 3> all() const { return {sum12, sum13, sum23}; }
};

PairSums pair_sums(const SubtractionSet& game);

enum class Pair : std::uint8_t { P12, P13, P23 };

/// The pairs (i, j) whose sum s_i + s_j is a multiple of p.
std::vector<Pair> divisible_pairs(const PairSums& sums, std::uint64_t p);

/// gcd over the pair sums that p divides; 0 when p divides none.
std::uint64_t divisible_sums_gcd(const PairSums& sums, std::uint64_t p);

/// Subset gcds of the three pair sums that reproduce themselves as the gcd
/// of every pair sum they divide. Ascending, deduplicated, at most 7.
/// Throws InvalidCase when s3 == s1 + s2.
std::vector<std::uint64_t> case2_candidates(const SubtractionSet& game);

/// p divides at least one pair sum, and equals the gcd of all pair sums it
/// divides. Throws InvalidCase when s3 == s1 + s2.
bool case2_check(const SubtractionSet& game, std::uint64_t p);

struct Prediction {
  GameCase game_case = GameCase::CaseI;
  std::optional<std::uint64_t> exact_period;  // CaseI only
  std::vector<std::uint64_t> candidates;      // CaseII only

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

Prediction predict(const SubtractionSet& game);

}  // namespace subgame
