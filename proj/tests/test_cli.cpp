#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "subgame/cli.hpp"
#include "subgame/conjecture.hpp"
#include "subgame/harness.hpp"
#include "subgame/period.hpp"

using namespace subgame;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "subgame");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  std::random_device rd;
  const auto dir = fs::temp_directory_path() / ("subgame_cli_" + std::to_string(rd()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("seq") {
  const auto r = invoke({"seq", "1", "2", "3", "--count", "8"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 1 2 3 0 1 2 3\n");
  CHECK(r.err.empty());

  const auto j = invoke({"seq", "2", "3", "5", "--count", "15", "--json"});
  CHECK(j.status == 0);
  const auto obj = nlohmann::json::parse(j.out);
  CHECK(obj["values"] == nlohmann::json::parse("[0,0,1,1,2,2,3,0,0,1,1,2,2,3,0]"));
  CHECK(obj["count"] == 15);
}

TEST_CASE("period") {
  const auto r = invoke({"period", "2", "3", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "preperiod=0 period=7\n");

  const auto j = invoke({"period", "4", "9", "12", "--json"});
  CHECK(j.status == 0);
  const auto obj = nlohmann::json::parse(j.out);
  const auto cert = find_period(SubtractionSet::make(4, 9, 12));
  CHECK(obj["preperiod"] == cert.preperiod);
  CHECK(obj["period"] == cert.period);
  CHECK(obj["witness_start"] == cert.witness_start);
  CHECK(obj["seq_len"] == cert.sequence_length_used);
}

TEST_CASE("period detection failure exits 2") {
  const auto r = invoke({"period", "3", "7", "10", "--max-seq-len", "50"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("no period certified") != std::string::npos);
}

TEST_CASE("predict") {
  const auto two = invoke({"predict", "1", "2", "4"});
  CHECK(two.status == 0);
  CHECK(two.out == "Case II, candidates: 1 3 5 6\n");

  const auto one = invoke({"predict", "1", "2", "3"});
  CHECK(one.out == "Case I, period: 4\n");

  const auto j = invoke({"predict", "1", "2", "4", "--json"});
  const auto obj = nlohmann::json::parse(j.out);
  CHECK(obj["case"] == "II");
  CHECK(obj["candidates"] == nlohmann::json::parse("[1,3,5,6]"));
  const auto k = nlohmann::json::parse(invoke({"predict", "2", "3", "5", "--json"}).out);
  CHECK(k["exact_period"] == 7);
}

TEST_CASE("usage errors exit 1 and write only to the error stream") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"seq", "1", "2", "3"},                      // missing --count
           {"seq", "3", "2", "1", "--count", "4"},      // unordered triple
           {"seq", "0", "2", "3", "--count", "4"},      // zero move
           {"period", "1", "2"},                        // short triple
           {"period", "0x1", "2", "3"},                 // decimal only
           {"predict", "1", "2", "-4"},
           {"seq", "1", "2", "3", "--count", "1000", "--max-seq-len", "999"},
           {"verify", "--max", "8"},                    // no --out
           {"bogus"},
       }) {
    CAPTURE(args.size());
    const auto r = invoke(args);
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  const auto r = invoke({"seq", "3", "2", "1", "--count", "4"});
  CHECK(r.err.find("s1 < s2 < s3") != std::string::npos);
}

TEST_CASE("help goes to the output stream") {
  const auto r = invoke({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("verify") != std::string::npos);
  const auto v = invoke({"verify", "--help"});
  CHECK(v.out.find("--checkpoint-interval") != std::string::npos);
}

TEST_CASE("verify and resume") {
  const auto out = scratch("cli.jsonl");
  const auto r = invoke({"verify", "--max", "16", "--workers", "2", "--out", out.string(),
                         "--checkpoint-interval", "10"});
  CHECK(r.status == 0);
  CHECK(r.out.find("triples: 560\n") != std::string::npos);
  CHECK(r.out.find("mismatches: 0\n") != std::string::npos);

  const auto j = invoke({"resume", "--max", "16", "--workers", "2", "--out", out.string(), "--json"});
  CHECK(j.status == 0);
  const auto obj = nlohmann::json::parse(j.out);  // exactly one object
  CHECK(obj["total"] == 560);
  CHECK(obj["mismatches"] == 0);
  CHECK(obj["complete"] == true);

  const auto failing = invoke({"verify", "--min", "2", "--max", "12", "--out", out.string(),
                               "--max-seq-len", "64"});
  CHECK(failing.status == 2);

  const auto bad_range = invoke({"verify", "--min", "9", "--max", "3", "--out", out.string()});
  CHECK(bad_range.status == 1);
  fs::remove_all(out.parent_path());
}

TEST_CASE("interrupted verify exits 130 and leaves a resumable checkpoint") {
  const auto out = scratch("stop.jsonl");
  std::atomic<bool> stop{true};
  std::ostringstream o, e;
  const int status = cli::run({"subgame", "verify", "--max", "10", "--out", out.string()}, o, e, &stop);
  CHECK(status == cli::kInterrupted);
  CHECK(fs::exists(sweep_paths(out).checkpoint));
  const auto r = invoke({"resume", "--max", "10", "--out", out.string()});
  CHECK(r.status == 0);
  CHECK(summarize_output(out).total == 120);
  const auto again = invoke({"resume", "--max", "11", "--out", out.string()});
  CHECK(again.status == 0);  // no checkpoint left, so this is a fresh sweep
  CHECK(summarize_output(out).total == 165);
  fs::remove_all(out.parent_path());
}

TEST_CASE("cli agrees with the library") {
  for (auto [a, b, c] : {std::tuple{1u, 2u, 4u}, std::tuple{4u, 9u, 12u}, std::tuple{5u, 9u, 14u}}) {
    const auto game = SubtractionSet::make(a, b, c);
    const std::vector<std::string> t{std::to_string(a), std::to_string(b), std::to_string(c)};
    auto args = [&](std::string cmd) {
      std::vector<std::string> v{cmd};
      v.insert(v.end(), t.begin(), t.end());
      v.push_back("--json");
      return v;
    };
    const auto p = nlohmann::json::parse(invoke(args("period")).out);
    CHECK(p["period"] == find_period(game).period);
    const auto pr = nlohmann::json::parse(invoke(args("predict")).out);
    if (classify(game) == GameCase::CaseII) {
      CHECK(pr["candidates"].get<std::vector<std::uint64_t>>() == case2_candidates(game));
    } else {
      CHECK(pr["exact_period"] == case1_period(game));
    }
  }
}

TEST_CASE("sweep exit status") {
  SweepSummary s;
  CHECK(cli::exit_status(s) == cli::kInterrupted);
  s.complete = true;
  CHECK(cli::exit_status(s) == cli::kOk);
  s.failures = 1;
  CHECK(cli::exit_status(s) == cli::kDetectionFailure);
  s.mismatches = 1;
  CHECK(cli::exit_status(s) == cli::kMismatch);
}
