#include "gaplab/harness.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "gaplab/error.hpp"
#include "gaplab/pagerank.hpp"
#include "gaplab/plot.hpp"
#include "gaplab/spectral.hpp"

namespace gaplab {
namespace {

namespace fs = std::filesystem;
using Key = std::pair<std::size_t, std::size_t>;

class RecordChannel {
public:
  void push(RunRecord record) {
    {
      std::lock_guard lock(mutex_);
      queue_.push_back(std::move(record));
    }
    ready_.notify_one();
  }

  RunRecord pop() {
    std::unique_lock lock(mutex_);
    ready_.wait(lock, [this] { return !queue_.empty(); });
    RunRecord record = std::move(queue_.front());
    queue_.pop_front();
    return record;
  }

private:
  std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<RunRecord> queue_;
};

void write_file_atomically(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorKind::io, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    require(static_cast<bool>(out), ErrorKind::io, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  require(!ec, ErrorKind::io, fmt::format("cannot rename {}: {}", tmp.string(), ec.message()));
}

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorKind::io, "cannot write " + path.string());
  return out;
}

}  // namespace

RunRecord run_instance(const ExperimentConfig& config, std::size_t n, std::size_t instance_id) {
  RunRecord record;
  record.model = model_tag(config.params);
  record.params = params_echo(config.params);
  record.n = n;
  record.instance_id = instance_id;
  record.seed = derive_seed(config.master_seed, n, instance_id);
  record.solver = std::string(to_string(resolve(config.solver.mode, n)));

  const auto start = std::chrono::steady_clock::now();
  try {
    Rng rng(record.seed);
    const SimpleDigraph graph = generate_graph(config.params, n, rng, config.allow_unbalanced);
    const GapResult result = min_gap(GoogleMatrix(graph, config.alpha_g), config.solver);
    require(result.delta > 0.0, ErrorKind::undefined_domain,
            fmt::format("minimum gap {} is not positive", result.delta));
    record.delta = result.delta;
    record.inverse_delta = 1.0 / result.delta;
    record.s_star = result.s_star;
    record.lambda0 = result.lambda0;
    record.lambda1 = result.lambda1;
    record.solver = std::string(to_string(result.mode));
  } catch (const Error& e) {
    record.status = std::string(to_string(e.kind()));
    record.message = e.what();
  } catch (const std::exception& e) {
    record.status = "runtime-failure";
    record.message = e.what();
  }
  record.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

ExperimentOutcome run_experiment(const ExperimentConfig& config, const ProgressCallback& progress) {
  validate(config);
  const fs::path dir = config.output_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, ErrorKind::io, fmt::format("cannot create {}: {}", dir.string(), ec.message()));

  const fs::path records_path = dir / kRecordsFile;
  const fs::path partial_path = dir / kPartialRecordsFile;
  const std::string tag = model_tag(config.params);
  const std::string echo = params_echo(config.params);

  std::set<Key> grid;
  for (std::size_t n : config.sizes)
    for (std::size_t id = 0; id < config.instances_per_size; ++id) grid.emplace(n, id);

  std::map<Key, RunRecord> done;
  for (const fs::path& path : {records_path, partial_path}) {
    if (!fs::exists(path)) continue;
    for (RunRecord& r : read_records(path)) {
      require(r.model == tag && r.params == echo, ErrorKind::invalid_parameter,
              fmt::format("{} holds records for {} [{}], config asks for {} [{}]", path.string(),
                          r.model, r.params, tag, echo));
      require(grid.contains({r.n, r.instance_id}), ErrorKind::invalid_parameter,
              fmt::format("{} holds (n={}, instance={}) outside the configured grid",
                          path.string(), r.n, r.instance_id));
      Key key{r.n, r.instance_id};
      done.insert_or_assign(key, std::move(r));
    }
  }

  std::vector<Key> tasks;
  for (const Key& key : grid)
    if (!done.contains(key)) tasks.push_back(key);

  ExperimentOutcome outcome;
  outcome.resumed = done.size();
  outcome.records_path = records_path;

  if (!tasks.empty()) {
    std::ofstream partial(partial_path, std::ios::binary | std::ios::app);
    require(static_cast<bool>(partial), ErrorKind::io, "cannot append to " + partial_path.string());

    RecordChannel channel;
    std::atomic<std::size_t> next{0};
    const std::size_t worker_count = std::min(effective_workers(config), tasks.size());
    std::vector<std::jthread> workers;
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
      workers.emplace_back([&](std::stop_token stop) {
        while (!stop.stop_requested()) {
          const std::size_t index = next.fetch_add(1);
          if (index >= tasks.size()) return;
          channel.push(run_instance(config, tasks[index].first, tasks[index].second));
        }
      });
    }

    for (std::size_t received = 0; received < tasks.size(); ++received) {
      RunRecord record = channel.pop();
      partial << to_json_line(record, true) << '\n';
      partial.flush();
      require(static_cast<bool>(partial), ErrorKind::io, "write failed: " + partial_path.string());
      if (progress) progress(record, received + 1, tasks.size());
      Key key{record.n, record.instance_id};
      done.insert_or_assign(key, std::move(record));
      ++outcome.computed;
    }
  }

  outcome.records.reserve(done.size());
  for (auto& [key, record] : done) outcome.records.push_back(std::move(record));
  sort_records(outcome.records);

  std::string sorted;
  std::string timings = "n,instance,wall_time\n";
  for (const RunRecord& r : outcome.records) {
    sorted += to_json_line(r);
    sorted += '\n';
    if (r.wall_time) timings += fmt::format("{},{},{:.6f}\n", r.n, r.instance_id, *r.wall_time);
  }
  write_file_atomically(records_path, sorted);
  write_file_atomically(dir / kTimingsFile, timings);
  fs::remove(partial_path, ec);
  return outcome;
}

std::vector<FitResult> fit_all(std::span<const SizeSummary> summaries) {
  const std::vector<ScalingPoint> points = scaling_points(summaries);
  std::vector<FitResult> fits;
  for (FitForm form : {FitForm::semilog, FitForm::powerlaw, FitForm::polylog}) {
    try {
      fits.push_back(fit(form, points));
    } catch (const Error&) {
      // Too few or out-of-domain points for this form.
    }
  }
  return fits;
}

void emit_outputs(const fs::path& dir, std::span<const SizeSummary> summaries,
                  std::span<const FitResult> fits, const std::string& label) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, ErrorKind::io, fmt::format("cannot create {}: {}", dir.string(), ec.message()));

  {
    auto out = open_for_write(dir / "summary.csv");
    write_summary_csv(out, summaries);
  }
  {
    auto out = open_for_write(dir / "fits.csv");
    write_fits_csv(out, fits);
  }
  if (!summaries.empty() && summaries.back().histogram) {
    auto out = open_for_write(dir / "histogram.csv");
    write_histogram_csv(out, *summaries.back().histogram);
  }

  const PlotSeries series{label,
                          std::vector<SizeSummary>(summaries.begin(), summaries.end()),
                          std::vector<FitResult>(fits.begin(), fits.end())};
  {
    auto out = open_for_write(dir / "semilog.svg");
    write_scaling_svg(out, std::span(&series, 1), PlotScale::semilog);
  }
  {
    auto out = open_for_write(dir / "loglog.svg");
    write_scaling_svg(out, std::span(&series, 1), PlotScale::loglog);
  }
}

}  // namespace gaplab
