#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssk/ssk.hpp"

namespace ssk::bench {

inline constexpr std::string_view kSyntheticSchema = "ssk-bench-synthetic/1";
inline constexpr std::string_view kCorpusSchema = "ssk-bench-corpus/1";
inline constexpr std::string_view kGeneratorName =
    "mt19937_64 seeded with splitmix64(seed,length,alphabet,pair_id); symbols by Lemire "
    "multiply-shift rejection";

struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::geometric};
  std::vector<std::size_t> lengths;
  std::vector<std::size_t> alphabet_sizes;
  std::size_t p = 10;
  double lambda = 0.5;
  std::size_t g_max = 10;
  std::size_t repetitions = 5;
  std::size_t pairs = 3;
  std::uint64_t seed = 0;
  std::size_t warmup = 1;
  std::size_t threads = 1;
  std::size_t memory_budget_bytes = default_memory_budget();
  /// Draw each string length uniformly from [0, length] instead of fixing it.
  bool vary_lengths = false;
  OracleLimits oracle{};

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  [[nodiscard]] ComputeOptions compute_options() const;
};

enum class Status { ok, oom, rejected, error, unreadable, unpaired };
std::string_view to_string(Status s) noexcept;

struct BenchRecord {
  Algorithm algorithm = Algorithm::dp;
  std::size_t len_s = 0;
  std::size_t len_t = 0;
  std::size_t alphabet_size = 0;
  std::size_t p = 0;
  double lambda = 0.0;
  std::uint64_t match_list_size = 0;
  std::size_t pair_id = 0;
  std::size_t repetition = 0;
  std::int64_t elapsed_ns = 0;
  double kernel_value_log = 0.0;  // ln K_p, -inf when zero
  Status status = Status::ok;
};

/// Independent 64-bit seed for one grid cell.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t length, std::size_t alphabet,
                        std::size_t pair_id) noexcept;

/// Uniform integer in [0, bound), bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Two strings of i.i.d. uniform symbols over [0, alphabet_size).
std::pair<SymbolSeq, SymbolSeq> gen_random_pair(std::size_t length, std::size_t alphabet_size,
                                                std::mt19937_64& rng);

/// The pair a grid cell measures; honors vary_lengths.
std::pair<SymbolSeq, SymbolSeq> cell_pair(const BenchConfig& config, std::size_t length,
                                          std::size_t alphabet, std::size_t pair_id);

/// Elapsed nanoseconds and result of one run; nullopt result on failure with
/// the status describing why.
struct Timed {
  std::int64_t elapsed_ns = 0;
  std::optional<KernelVector> value;
  Status status = Status::ok;
};
Timed timed_run(Algorithm a, const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                const ComputeOptions& options);

/// Runs every cell of the grid and writes the CSV (header comment, column
/// header, one row per record) in deterministic order. Returns all records.
std::vector<BenchRecord> bench_synthetic(const BenchConfig& config, std::ostream& csv);
std::string csv_header_synthetic(const BenchConfig& config);
std::string csv_row(const BenchRecord& r);

/// Formats ln K deterministically ("-inf" for zero, empty for missing).
std::string format_log(double v);

// ---------------------------------------------------------------------------

struct Perturbation {
  Algorithm algorithm = Algorithm::geometric;
  std::size_t level = 1;
  double factor = 1.0 + 1e-6;
};
/// Parses "ALG:LEVEL".
std::optional<Perturbation> parse_perturbation(std::string_view text);

struct Mismatch {
  std::size_t pair_index = 0;
  std::size_t len_s = 0;
  std::size_t len_t = 0;
  Algorithm first = Algorithm::dp;
  Algorithm second = Algorithm::dp;
  std::size_t level = 0;
  double deviation = 0.0;
};

struct CrosscheckReport {
  std::size_t pairs = 0;
  std::size_t comparisons = 0;
  double max_deviation = 0.0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> errors;

  [[nodiscard]] bool passed() const noexcept { return mismatches.empty() && errors.empty(); }
  /// Algorithm and level involved in the most mismatches.
  [[nodiscard]] std::optional<std::pair<Algorithm, std::size_t>> suspect() const;
};

struct CrosscheckOptions {
  ComputeOptions compute{};
  double tolerance = 1e-9;
  std::optional<Perturbation> perturb;
};

/// Compares every pair of algorithms level by level. Brute force takes part
/// only within its length cap; trie only on levels where its gap cap makes
/// it exact.
CrosscheckReport crosscheck_pairs(std::span<const std::pair<SymbolSeq, SymbolSeq>> pairs,
                                  std::span<const Algorithm> algorithms,
                                  const KernelParams& params, const CrosscheckOptions& options);

/// Crosscheck over the pairs the synthetic grid would generate.
CrosscheckReport crosscheck(const BenchConfig& config, double tolerance,
                            const std::optional<Perturbation>& perturb = std::nullopt);

void print_report(const CrosscheckReport& report, double tolerance, std::ostream& out);

// ---------------------------------------------------------------------------

struct CorpusConfig {
  std::filesystem::path directory;
  TokenMode mode = TokenMode::word;
  std::vector<std::size_t> p_list{10};
  BenchConfig base{};  // algorithms, lambda, g_max, repetitions, warmup, budget
};

struct CorpusRecord {
  std::string doc_s;
  std::string doc_t;
  std::size_t len_s = 0;
  std::size_t len_t = 0;
  double mean_size = 0.0;
  std::size_t alphabet_size = 0;
  std::uint64_t match_list_size = 0;
  double inverse_match_frequency = 0.0;  // |s||t| / |L|, +inf without matches
  std::optional<Algorithm> algorithm;
  std::size_t p = 0;
  double lambda = 0.0;
  std::size_t repetition = 0;
  std::int64_t elapsed_ns = 0;
  double kernel_value_log = 0.0;
  Status status = Status::ok;
};

/// Reads every regular file of the directory (sorted by name), tokenizes
/// into one shared alphabet, pairs documents of closest token length and
/// times each algorithm for each p. Unreadable files and a leftover odd
/// document produce a warning record.
std::vector<CorpusRecord> bench_corpus(const CorpusConfig& config, std::ostream& csv);
std::string csv_header_corpus(const CorpusConfig& config);
std::string csv_row(const CorpusRecord& r);

// ---------------------------------------------------------------------------

/// Worked-example fixtures for every algorithm; prints one line per check.
bool run_selfcheck(std::ostream& out);

/// Drops the named column from every CSV data row (comment lines kept).
std::string strip_column(std::string_view csv, std::string_view column);

}  // namespace ssk::bench
