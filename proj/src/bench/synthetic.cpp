#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "ssk/bench.hpp"

namespace ssk::bench {
namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

struct Cell {
  std::size_t length;
  std::size_t alphabet;
};

std::vector<BenchRecord> run_cell(const BenchConfig& config, const Cell& cell) {
  std::vector<BenchRecord> out;
  const KernelParams params(config.p, config.lambda);
  const ComputeOptions options = config.compute_options();
  for (std::size_t pair_id = 0; pair_id < config.pairs; ++pair_id) {
    const auto [s, t] = cell_pair(config, cell.length, cell.alphabet, pair_id);
    BenchRecord base;
    base.len_s = s.size();
    base.len_t = t.size();
    base.alphabet_size = cell.alphabet;
    base.p = config.p;
    base.lambda = config.lambda;
    base.match_list_size = match_count(s, t);
    base.pair_id = pair_id;
    for (Algorithm a : config.algorithms) {
      base.algorithm = a;
      Status failed = Status::ok;
      for (std::size_t w = 0; w < config.warmup && failed == Status::ok; ++w) {
        failed = timed_run(a, s, t, params, options).status;
      }
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        BenchRecord r = base;
        r.repetition = rep;
        if (failed != Status::ok) {
          r.status = failed;
          r.kernel_value_log = kMissing;
        } else {
          const Timed run = timed_run(a, s, t, params, options);
          r.status = run.status;
          r.elapsed_ns = run.elapsed_ns;
          r.kernel_value_log = run.value ? run.value->level(config.p).log() : kMissing;
          if (run.status != Status::ok) failed = run.status;
        }
        out.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace

std::string csv_header_synthetic(const BenchConfig& config) {
  std::ostringstream os;
  os << "# schema=" << kSyntheticSchema << "; generator=" << kGeneratorName
     << "; seed=" << config.seed << "; g_max=" << config.g_max << "; warmup=" << config.warmup
     << "; vary_lengths=" << (config.vary_lengths ? 1 : 0) << '\n';
  os << "algorithm,len_s,len_t,alphabet_size,p,lambda,match_list_size,pair_id,repetition,"
        "elapsed_ns,kernel_value_log,status\n";
  return os.str();
}

std::string csv_row(const BenchRecord& r) {
  char lambda[40];
  std::snprintf(lambda, sizeof lambda, "%.17g", r.lambda);
  std::ostringstream os;
  os << to_string(r.algorithm) << ',' << r.len_s << ',' << r.len_t << ',' << r.alphabet_size
     << ',' << r.p << ',' << lambda << ',' << r.match_list_size << ',' << r.pair_id << ','
     << r.repetition << ',' << r.elapsed_ns << ',' << format_log(r.kernel_value_log) << ','
     << to_string(r.status) << '\n';
  return os.str();
}

std::vector<BenchRecord> bench_synthetic(const BenchConfig& config, std::ostream& csv) {
  config.validate();
  std::vector<Cell> cells;
  for (std::size_t len : config.lengths) {
    for (std::size_t a : config.alphabet_sizes) cells.push_back({len, a});
  }
  csv << csv_header_synthetic(config) << std::flush;

  std::vector<BenchRecord> all;
  auto emit = [&](const std::vector<BenchRecord>& records) {
    for (const auto& r : records) csv << csv_row(r);
    csv.flush();
    all.insert(all.end(), records.begin(), records.end());
  };

  const std::size_t workers = std::min(config.threads, cells.size());
  if (workers <= 1) {
    for (const Cell& cell : cells) emit(run_cell(config, cell));
    return all;
  }

  // Cells run in parallel; results are emitted strictly in cell order.
  std::vector<std::optional<std::vector<BenchRecord>>> done(cells.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < cells.size(); k = next++) {
        auto records = run_cell(config, cells[k]);
        {
          std::lock_guard lock(mu);
          done[k] = std::move(records);
        }
        ready.notify_all();
      }
    });
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<BenchRecord> records;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[k].has_value(); });
      records = std::move(*done[k]);
      done[k].reset();
    }
    emit(records);
  }
  for (auto& th : pool) th.join();
  return all;
}

}  // namespace ssk::bench
