#include "subgame/cli.hpp"

#include <algorithm>
#include <cctype>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "subgame/conjecture.hpp"
#include "subgame/errors.hpp"
#include "subgame/grundy.hpp"
#include "subgame/harness.hpp"
#include "subgame/period.hpp"

namespace subgame::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct TripleArgs {
  std::uint32_t s1 = 0, s2 = 0, s3 = 0;
  SubtractionSet game() const { return SubtractionSet::make(s1, s2, s3); }
};

// CLI11 would otherwise accept 0x / 0b / 0o prefixes.
const CLI::Validator kDecimal(
    [](std::string& value) -> std::string {
      if (value.empty() || !std::all_of(value.begin(), value.end(),
                                        [](unsigned char c) { return std::isdigit(c); })) {
        return "expected a decimal integer, got '" + value + "'";
      }
      return {};
    },
    "DECIMAL");

void add_triple(CLI::App* cmd, TripleArgs& t) {
  cmd->add_option("s1", t.s1, "smallest move")->required()->check(kDecimal);
  cmd->add_option("s2", t.s2, "middle move")->required()->check(kDecimal);
  cmd->add_option("s3", t.s3, "largest move")->required()->check(kDecimal);
}

ordered_json triple_json(const SubtractionSet& g) {
  return ordered_json{{"s1", g.s1()}, {"s2", g.s2()}, {"s3", g.s3()}};
}

std::string summary_text(const SweepSummary& s) {
  if (!s.complete) {
    return fmt::format("incomplete: {} records written this run\nwall time: {:.3f} s\n",
                       s.processed, s.wall_seconds);
  }
  return fmt::format(
      "triples: {}\ncase I: {}\ncase II: {}\nmismatches: {}\ndetection failures: {}\n"
      "processed this run: {}\nwall time: {:.3f} s\n",
      s.total, s.case1_count, s.case2_count, s.mismatches, s.failures, s.processed,
      s.wall_seconds);
}

ordered_json summary_json(const SweepSummary& s) {
  return ordered_json{{"total", s.total},          {"case1", s.case1_count},
                      {"case2", s.case2_count},    {"mismatches", s.mismatches},
                      {"failures", s.failures},    {"processed", s.processed},
                      {"complete", s.complete},    {"wall_seconds", s.wall_seconds}};
}

}  // namespace

int exit_status(const SweepSummary& summary) {
  if (!summary.complete) return kInterrupted;
  if (summary.mismatches > 0) return kMismatch;
  if (summary.failures > 0) return kDetectionFailure;
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel) {
  CLI::App app{"Nim sequences, periods and the period conjecture for subtraction games S(s1,s2,s3)"};
  app.require_subcommand(1);

  bool json = false;
  std::size_t count = 0;
  std::size_t max_seq_len = kDefaultMaxSequenceLength;
  TripleArgs triple;
  SweepConfig sweep_config;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "print a single JSON object instead of text");
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--max-seq-len", max_seq_len,
                    fmt::format("cap on computed sequence length (default {})",
                                kDefaultMaxSequenceLength))
        ->check(kDecimal);
  };

  auto* seq = app.add_subcommand("seq", "print the first --count nim values");
  add_triple(seq, triple);
  seq->add_option("--count", count, "number of values (heaps 0 .. count-1)")
      ->required()
      ->check(kDecimal);
  add_cap(seq);
  add_common(seq);

  auto* period = app.add_subcommand("period", "certify the minimal preperiod and period");
  add_triple(period, triple);
  add_cap(period);
  add_common(period);

  auto* predict_cmd = app.add_subcommand("predict", "evaluate the conjectured period");
  add_triple(predict_cmd, triple);
  add_common(predict_cmd);

  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--min", sweep_config.s_min, "smallest move in the range (default 1)")
        ->check(kDecimal);
    cmd->add_option("--max", sweep_config.s_max, "largest move in the range")
        ->required()
        ->check(kDecimal);
    cmd->add_option("--workers", sweep_config.worker_count, "worker threads (default 1)")
        ->check(kDecimal);
    cmd->add_option("--out", out_path,
                    "merged output file; shards, checkpoint and mismatch files sit next to it")
        ->required();
    cmd->add_option("--checkpoint-interval", sweep_config.checkpoint_interval,
                    "records per worker between checkpoint flushes (default 1000)")
        ->check(kDecimal);
    add_cap(cmd);
    add_common(cmd);
  };
  auto* verify = app.add_subcommand("verify", "check every triple in a range, from scratch");
  add_sweep(verify);
  auto* resume_cmd = app.add_subcommand("resume", "continue an interrupted verify");
  add_sweep(resume_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (seq->parsed()) {
      const auto game = triple.game();
      const auto values = nim_sequence_packed(game, count, max_seq_len).values;
      std::vector<unsigned> shown(values.begin(), values.end());
      if (json) {
        auto j = triple_json(game);
        j["count"] = count;
        j["values"] = shown;
        out << j.dump() << '\n';
      } else {
        out << fmt::format("{}\n", fmt::join(shown, " "));
      }
      return kOk;
    }

    if (period->parsed()) {
      const auto cert = find_period(triple.game(), DetectionLimits{.max_length = max_seq_len});
      if (json) {
        auto j = triple_json(cert.game);
        j["preperiod"] = cert.preperiod;
        j["period"] = cert.period;
        j["witness_start"] = cert.witness_start;
        j["seq_len"] = cert.sequence_length_used;
        out << j.dump() << '\n';
      } else {
        out << fmt::format("preperiod={} period={}\n", cert.preperiod, cert.period);
      }
      return kOk;
    }

    if (predict_cmd->parsed()) {
      const auto game = triple.game();
      const Prediction p = predict(game);
      if (json) {
        auto j = triple_json(game);
        j["case"] = case_label(p.game_case);
        if (p.exact_period) {
          j["exact_period"] = *p.exact_period;
        } else {
          j["candidates"] = p.candidates;
        }
        out << j.dump() << '\n';
      } else if (p.exact_period) {
        out << fmt::format("Case I, period: {}\n", *p.exact_period);
      } else {
        out << fmt::format("Case II, candidates: {}\n", fmt::join(p.candidates, " "));
      }
      return kOk;
    }

    sweep_config.output_path = out_path;
    sweep_config.limits.max_length = max_seq_len;
    const SweepControl control{.cancel = cancel};
    const SweepSummary summary =
        verify->parsed() ? sweep(sweep_config, control) : resume(sweep_config, control);
    if (json) {
      out << summary_json(summary).dump() << '\n';
    } else {
      out << summary_text(summary);
    }
    if (!summary.complete) {
      err << "interrupted; run `resume` with the same arguments to continue\n";
    }
    return exit_status(summary);
  } catch (const DetectionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kDetectionFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace subgame::cli
