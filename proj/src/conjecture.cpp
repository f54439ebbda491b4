#include "subgame/conjecture.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "subgame/errors.hpp"

namespace subgame {

namespace {

void require_case(const SubtractionSet& game, GameCase expected, const char* op) {
  if (classify(game) != expected) {
    throw InvalidCase(fmt::format("{} requires a Case {} triple, got {}", op,
                                  case_label(expected), game.to_string()));
  }
}

}  // namespace

std::string_view case_label(GameCase c) { return c == GameCase::CaseI ? "I" : "II"; }

GameCase classify(const SubtractionSet& game) {
  return std::uint64_t{game.s3()} == std::uint64_t{game.s1()} + game.s2() ? GameCase::CaseI
                                                                          : GameCase::CaseII;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

CaseIParams case1_params(const SubtractionSet& game) {
  const std::uint64_t s1 = game.s1();
  CaseIParams params;
  params.j = (std::uint64_t{game.s2()} - s1) % (2 * s1);
  params.branch = params.j < s1 ? CaseIParams::Branch::Low : CaseIParams::Branch::High;
  return params;
}

std::uint64_t case1_period(const SubtractionSet& game) {
  require_case(game, GameCase::CaseI, "case1_period");
  const std::uint64_t s1 = game.s1(), s2 = game.s2(), s3 = game.s3();
  const auto [j, branch] = case1_params(game);
  if (branch == CaseIParams::Branch::Low) return s2 + s3 - j;
  // s2 + s3 + j - 2*s1 > 0 since s2 > s1 and s3 > s1.
  return s1 * (s2 + s3 + j - 2 * s1) / gcd(s1, 2 * s1 - j);
}

PairSums pair_sums(const SubtractionSet& game) {
  const std::uint64_t s1 = game.s1(), s2 = game.s2(), s3 = game.s3();
  return {s1 + s2, s1 + s3, s2 + s3};
}

std::vector<Pair> divisible_pairs(const PairSums& sums, std::uint64_t p) {
  std::vector<Pair> out;
  if (p == 0) return out;
  if (sums.sum12 % p == 0) out.push_back(Pair::P12);
  if (sums.sum13 % p == 0) out.push_back(Pair::P13);
  if (sums.sum23 % p == 0) out.push_back(Pair::P23);
  return out;
}

std::uint64_t divisible_sums_gcd(const PairSums& sums, std::uint64_t p) {
  if (p == 0) return 0;
  std::uint64_t g = 0;
  for (auto s : sums.all()) {
    if (s % p == 0) g = gcd(g, s);
  }
  return g;
}

std::vector<std::uint64_t> case2_candidates(const SubtractionSet& game) {
  require_case(game, GameCase::CaseII, "case2_candidates");
  const PairSums sums = pair_sums(game);
  const auto all = sums.all();
  std::vector<std::uint64_t> out;
  for (unsigned subset = 1; subset < 8; ++subset) {
    std::uint64_t g = 0;
    for (unsigned i = 0; i < 3; ++i) {
      if (subset & (1u << i)) g = gcd(g, all[i]);
    }
    if (divisible_sums_gcd(sums, g) == g) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool case2_check(const SubtractionSet& game, std::uint64_t p) {
  require_case(game, GameCase::CaseII, "case2_check");
  if (p == 0) return false;
  // divisible_sums_gcd is 0 exactly when p divides none of the sums.
  return divisible_sums_gcd(pair_sums(game), p) == p;
}

Prediction predict(const SubtractionSet& game) {
  Prediction out;
  out.game_case = classify(game);
  if (out.game_case == GameCase::CaseI) {
    out.exact_period = case1_period(game);
  } else {
    out.candidates = case2_candidates(game);
  }
  return out;
}

}  // namespace subgame
