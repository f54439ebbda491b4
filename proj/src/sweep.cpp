#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "subgame/errors.hpp"
#include "subgame/harness.hpp"

namespace fs = std::filesystem;

namespace subgame {

namespace {

constexpr std::string_view kCheckpointMagic = "subgame-checkpoint v1";

std::string checkpoint_header(const SweepConfig& config) {
  return fmt::format("{} s_min={} s_max={} workers={} initial_len={} max_len={}", kCheckpointMagic,
                     config.s_min, config.s_max, config.worker_count,
                     config.limits.initial_length, config.limits.max_length);
}

/// Owns the checkpoint file. Each worker reports the last index whose record
/// is already flushed to its shard; the whole table is rewritten atomically.
class CheckpointWriter {
 public:
  CheckpointWriter(fs::path path, std::string header, std::vector<std::int64_t> last)
      : path_(std::move(path)), header_(std::move(header)), last_(std::move(last)) {}

  void update(std::size_t worker, std::int64_t last_done) {
    std::lock_guard lock(mutex_);
    last_[worker] = last_done;
    write_locked();
  }

  void write() {
    std::lock_guard lock(mutex_);
    write_locked();
  }

 private:
  void write_locked() {
    fs::path tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << header_ << '\n';
      for (std::size_t w = 0; w < last_.size(); ++w) out << w << ' ' << last_[w] << '\n';
      out.flush();
      if (!out) throw OutputError(fmt::format("cannot write checkpoint {}", tmp.string()));
    }
    std::error_code ec;
    fs::rename(tmp, path_, ec);
    if (ec) throw OutputError(fmt::format("cannot install checkpoint {}: {}", path_.string(), ec.message()));
  }

  fs::path path_;
  std::string header_;
  std::mutex mutex_;
  std::vector<std::int64_t> last_;
};

struct WorkerState {
  IndexRange range;
  std::uint64_t next = 0;
  std::uint64_t processed = 0;
  std::exception_ptr error;
};

void run_worker(std::size_t w, WorkerState& state, const SweepConfig& config,
                const SweepControl& control, const TripleSpace& space, const SweepPaths& paths,
                CheckpointWriter& checkpoint, const std::atomic<bool>& abort) {
  std::ofstream shard(paths.shard(w), std::ios::binary | std::ios::app);
  if (!shard) throw OutputError(fmt::format("cannot open shard {}", paths.shard(w).string()));

  auto flush = [&] {
    shard.flush();
    if (!shard) throw OutputError(fmt::format("write to {} failed", paths.shard(w).string()));
    checkpoint.update(w, static_cast<std::int64_t>(state.next) - 1);
  };

  std::optional<SubtractionSet> game;
  if (state.next < state.range.end) game = space.unrank(state.next);
  std::size_t since_flush = 0;
  while (state.next < state.range.end) {
    if (abort.load(std::memory_order_relaxed)) break;
    if (control.cancel && control.cancel->load(std::memory_order_relaxed)) break;
    if (control.per_worker_record_limit && state.processed >= control.per_worker_record_limit) break;

    shard << to_json_line(verify_one(*game, config.limits)) << '\n';
    ++state.next;
    ++state.processed;
    if (++since_flush == config.checkpoint_interval) {
      flush();
      since_flush = 0;
    }
    if (state.next < state.range.end) game = space.next(*game);
  }
  flush();
}

SweepSummary merge(const SweepConfig& config, const SweepPaths& paths, std::uint64_t expected) {
  fs::path tmp = paths.output;
  tmp += ".tmp";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  std::ofstream mismatches(paths.mismatches, std::ios::binary | std::ios::trunc);
  std::ofstream failures(paths.failures, std::ios::binary | std::ios::trunc);
  if (!out || !mismatches || !failures) {
    throw OutputError(fmt::format("cannot open merged output next to {}", paths.output.string()));
  }

  SweepSummary summary;
  std::string line;
  for (std::size_t w = 0; w < config.worker_count; ++w) {
    std::ifstream shard(paths.shard(w), std::ios::binary);
    while (std::getline(shard, line)) {
      const VerificationRecord rec = parse_record(line);
      ++summary.total;
      ++(rec.game_case == GameCase::CaseI ? summary.case1_count : summary.case2_count);
      out << line << '\n';
      if (rec.mismatch()) {
        ++summary.mismatches;
        mismatches << line << '\n';
      }
      if (rec.detection_failed()) {
        ++summary.failures;
        failures << line << '\n';
      }
    }
  }
  if (summary.total != expected) {
    throw CorruptCheckpoint(
        fmt::format("shards hold {} records, expected {}", summary.total, expected));
  }
  out.flush();
  mismatches.flush();
  failures.flush();
  if (!out || !mismatches || !failures) {
    throw OutputError(fmt::format("writing merged output {} failed", tmp.string()));
  }
  out.close();
  fs::rename(tmp, paths.output);

  // Checkpoint first: a crash between the two removals leaves no checkpoint,
  // and the next resume starts over instead of trusting missing shards.
  fs::remove(paths.checkpoint);
  for (std::size_t w = 0; w < config.worker_count; ++w) fs::remove(paths.shard(w));
  summary.complete = true;
  return summary;
}

SweepSummary run(const SweepConfig& config, const SweepControl& control,
                 std::vector<WorkerState> workers) {
  const auto started = std::chrono::steady_clock::now();
  const TripleSpace space(config.s_min, config.s_max);
  const SweepPaths paths = sweep_paths(config.output_path);

  std::vector<std::int64_t> last;
  for (const auto& w : workers) last.push_back(static_cast<std::int64_t>(w.next) - 1);
  CheckpointWriter checkpoint(paths.checkpoint, checkpoint_header(config), std::move(last));
  checkpoint.write();

  std::atomic<bool> abort{false};
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers.size(); ++w) {
      threads.emplace_back([&, w] {
        try {
          run_worker(w, workers[w], config, control, space, paths, checkpoint, abort);
        } catch (...) {
          workers[w].error = std::current_exception();
          abort = true;
        }
      });
    }
  }

  SweepSummary summary;
  for (const auto& w : workers) {
    summary.processed += w.processed;
    if (w.error) {
      try {
        std::rethrow_exception(w.error);
      } catch (const std::exception& e) {
        throw OutputError(fmt::format("sweep aborted: {}; last durable checkpoint is {}", e.what(),
                                      paths.checkpoint.string()));
      }
    }
  }

  const bool done = std::all_of(workers.begin(), workers.end(),
                                [](const WorkerState& w) { return w.next == w.range.end; });
  if (done) {
    const std::uint64_t processed = summary.processed;
    summary = merge(config, paths, space.size());
    summary.processed = processed;
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

std::vector<WorkerState> fresh_workers(const SweepConfig& config) {
  std::vector<WorkerState> workers;
  for (const auto& range : partition_blocks(TripleSpace(config.s_min, config.s_max).size(),
                                            config.worker_count)) {
    workers.push_back({.range = range, .next = range.begin});
  }
  return workers;
}

/// Cuts a shard down to its first `keep` lines, dropping anything written
/// after the last checkpoint. Returns the last kept line.
std::string truncate_shard(const fs::path& shard, std::uint64_t keep) {
  if (keep == 0) {
    std::ofstream(shard, std::ios::binary | std::ios::trunc);
    return {};
  }
  std::ifstream in(shard, std::ios::binary);
  if (!in) throw CorruptCheckpoint(fmt::format("shard {} is missing", shard.string()));
  std::string line;
  std::uint64_t bytes = 0;
  for (std::uint64_t i = 0; i < keep; ++i) {
    if (!std::getline(in, line) || in.eof()) {
      throw CorruptCheckpoint(fmt::format("shard {} holds fewer than the {} checkpointed records",
                                          shard.string(), keep));
    }
    bytes += line.size() + 1;
  }
  in.close();
  fs::resize_file(shard, bytes);
  return line;
}

}  // namespace

fs::path SweepPaths::shard(std::size_t worker) const {
  fs::path p = output;
  p += fmt::format(".part{}", worker);
  return p;
}

SweepPaths sweep_paths(const fs::path& output) {
  auto with = [&](std::string_view suffix) {
    fs::path p = output;
    p += suffix;
    return p;
  };
  return {output, with(".ckpt"), with(".mismatches"), with(".failures")};
}

void validate(const SweepConfig& config) {
  if (config.s_min < 1 || config.s_min >= config.s_max) {
    throw InvalidConfig(fmt::format("range requires 1 <= min < max, got min={} max={}",
                                    config.s_min, config.s_max));
  }
  if (config.s_max > kDefaultMaxSubtrahend) {
    throw InvalidConfig(fmt::format("max {} exceeds {}", config.s_max, kDefaultMaxSubtrahend));
  }
  if (config.worker_count < 1) throw InvalidConfig("worker count must be at least 1");
  if (config.checkpoint_interval < 1) throw InvalidConfig("checkpoint interval must be at least 1");
  if (config.output_path.empty()) throw InvalidConfig("output path is required");
  if (config.limits.max_length < 1) throw InvalidConfig("sequence length cap must be positive");
}

SweepSummary sweep(const SweepConfig& config, const SweepControl& control) {
  validate(config);
  const SweepPaths paths = sweep_paths(config.output_path);
  if (paths.output.has_parent_path()) fs::create_directories(paths.output.parent_path());
  fs::remove(paths.checkpoint);
  for (std::size_t w = 0; w < config.worker_count; ++w) {
    std::ofstream shard(paths.shard(w), std::ios::binary | std::ios::trunc);
    if (!shard) throw OutputError(fmt::format("cannot create shard {}", paths.shard(w).string()));
  }
  return run(config, control, fresh_workers(config));
}

SweepSummary resume(const SweepConfig& config, const SweepControl& control) {
  validate(config);
  const SweepPaths paths = sweep_paths(config.output_path);
  if (!fs::exists(paths.checkpoint)) return sweep(config, control);

  std::ifstream in(paths.checkpoint, std::ios::binary);
  std::string header;
  if (!std::getline(in, header) || !header.starts_with(kCheckpointMagic)) {
    throw CorruptCheckpoint(fmt::format("{} is not a sweep checkpoint", paths.checkpoint.string()));
  }
  if (header != checkpoint_header(config)) {
    throw ConfigMismatch(fmt::format("checkpoint was written for '{}', current settings are '{}'",
                                     header, checkpoint_header(config)));
  }

  const TripleSpace space(config.s_min, config.s_max);
  std::vector<WorkerState> workers = fresh_workers(config);
  std::string line;
  for (std::size_t w = 0; w < workers.size(); ++w) {
    std::size_t index = 0;
    std::int64_t last = 0;
    if (!std::getline(in, line) || !(std::istringstream(line) >> index >> last) || index != w) {
      throw CorruptCheckpoint(fmt::format("checkpoint entry for worker {} is malformed", w));
    }
    const auto& range = workers[w].range;
    const auto first = static_cast<std::int64_t>(range.begin);
    if (last < first - 1 || last >= static_cast<std::int64_t>(range.end)) {
      throw CorruptCheckpoint(fmt::format("worker {} checkpoint index {} is outside its block [{}, {})",
                                          w, last, range.begin, range.end));
    }
    workers[w].next = static_cast<std::uint64_t>(last + 1);
    const std::string tail = truncate_shard(paths.shard(w), workers[w].next - range.begin);
    if (!tail.empty() && parse_record(tail).game != space.unrank(workers[w].next - 1)) {
      throw CorruptCheckpoint(fmt::format("shard {} does not end at the checkpointed triple",
                                          paths.shard(w).string()));
    }
  }
  if (std::getline(in, line) && !line.empty()) {
    throw CorruptCheckpoint("checkpoint has more entries than workers");
  }
  return run(config, control, std::move(workers));
}

SweepSummary summarize_output(const fs::path& output) {
  std::ifstream in(output, std::ios::binary);
  if (!in) throw OutputError(fmt::format("cannot read {}", output.string()));
  SweepSummary summary;
  std::string line;
  while (std::getline(in, line)) {
    const VerificationRecord rec = parse_record(line);
    ++summary.total;
    ++(rec.game_case == GameCase::CaseI ? summary.case1_count : summary.case2_count);
    if (rec.mismatch()) ++summary.mismatches;
    if (rec.detection_failed()) ++summary.failures;
  }
  summary.complete = true;
  return summary;
}

}  // namespace subgame
