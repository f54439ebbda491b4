#include <algorithm>

#include <fmt/format.h>
#include <json.hpp>

#include "subgame/errors.hpp"
#include "subgame/harness.hpp"

namespace subgame {

using ordered_json = nlohmann::ordered_json;

VerificationRecord verify_one(const SubtractionSet& game, const DetectionLimits& limits) {
  VerificationRecord rec{.game = game};
  rec.game_case = classify(game);
  rec.prediction = predict(game);
  try {
    const PeriodCertificate cert = find_period(game, limits);
    rec.measured_period = cert.period;
    rec.measured_preperiod = cert.preperiod;
    rec.sequence_length_used = cert.sequence_length_used;
  } catch (const DetectionFailure& e) {
    rec.sequence_length_used = e.cap;
    return rec;
  }
  const std::uint64_t p = *rec.measured_period;
  if (rec.game_case == GameCase::CaseI) {
    rec.prediction_ok = p == *rec.prediction.exact_period;
  } else {
    rec.prediction_ok = case2_check(game, p);
    if (rec.prediction_ok) rec.matched_candidate = p;
  }
  return rec;
}

std::string to_json_line(const VerificationRecord& rec) {
  ordered_json j;
  j["s1"] = rec.game.s1();
  j["s2"] = rec.game.s2();
  j["s3"] = rec.game.s3();
  j["case"] = case_label(rec.game_case);
  j["preperiod"] = rec.measured_preperiod ? ordered_json(*rec.measured_preperiod) : ordered_json();
  j["period"] = rec.measured_period ? ordered_json(*rec.measured_period) : ordered_json();
  if (rec.game_case == GameCase::CaseI) {
    j["predicted"] = rec.prediction.exact_period.value_or(0);
  } else {
    j["predicted"] = rec.prediction.candidates;
  }
  j["ok"] = rec.prediction_ok;
  if (rec.matched_candidate) j["matched_candidate"] = *rec.matched_candidate;
  j["seq_len"] = rec.sequence_length_used;
  return j.dump();
}

namespace {

std::optional<std::uint64_t> optional_u64(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::uint64_t>();
}

}  // namespace

VerificationRecord parse_record(std::string_view line) {
  try {
    const auto j = ordered_json::parse(line);
    VerificationRecord rec{.game = SubtractionSet::make(j.at("s1").get<std::uint32_t>(),
                                                        j.at("s2").get<std::uint32_t>(),
                                                        j.at("s3").get<std::uint32_t>())};
    const auto label = j.at("case").get<std::string>();
    if (label != "I" && label != "II") throw CorruptCheckpoint("unknown case label " + label);
    rec.game_case = label == "I" ? GameCase::CaseI : GameCase::CaseII;
    rec.measured_preperiod = optional_u64(j, "preperiod");
    rec.measured_period = optional_u64(j, "period");
    rec.prediction.game_case = rec.game_case;
    if (rec.game_case == GameCase::CaseI) {
      rec.prediction.exact_period = j.at("predicted").get<std::uint64_t>();
    } else {
      rec.prediction.candidates = j.at("predicted").get<std::vector<std::uint64_t>>();
    }
    rec.prediction_ok = j.at("ok").get<bool>();
    if (j.contains("matched_candidate")) {
      rec.matched_candidate = j.at("matched_candidate").get<std::uint64_t>();
    }
    rec.sequence_length_used = j.at("seq_len").get<std::uint64_t>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptCheckpoint(fmt::format("malformed record '{}': {}", line, e.what()));
  } catch (const InvalidGame& e) {
    throw CorruptCheckpoint(fmt::format("malformed record '{}': {}", line, e.what()));
  }
}

std::string record_violation(const VerificationRecord& rec) {
  const auto& game = rec.game;
  if (rec.game_case != classify(game)) return "case label disagrees with the triple";
  if (rec.prediction != predict(game)) return "stored prediction disagrees with the triple";
  if (rec.measured_period.has_value() != rec.measured_preperiod.has_value()) {
    return "period and preperiod must both be present or both absent";
  }
  if (rec.detection_failed()) {
    if (rec.prediction_ok) return "failed detection marked ok";
    if (rec.matched_candidate) return "failed detection carries a matched candidate";
    return {};
  }
  const std::uint64_t p = *rec.measured_period;
  if (p == 0) return "period must be positive";
  if (rec.sequence_length_used == 0) return "seq_len must be positive";
  const bool expected_ok = rec.game_case == GameCase::CaseI ? p == *rec.prediction.exact_period
                                                            : case2_check(game, p);
  if (rec.prediction_ok != expected_ok) return "ok flag disagrees with the prediction";
  const bool expect_match = rec.game_case == GameCase::CaseII && rec.prediction_ok;
  if (rec.matched_candidate.has_value() != expect_match) {
    return "matched_candidate must be present exactly for successful Case II records";
  }
  if (expect_match) {
    if (*rec.matched_candidate != p) return "matched_candidate differs from the period";
    const auto& c = rec.prediction.candidates;
    if (std::find(c.begin(), c.end(), p) == c.end()) return "matched candidate not in candidate set";
  }
  return {};
}

}  // namespace subgame
