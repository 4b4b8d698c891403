#include <chrono>
#include <cmath>
#include <cstdio>
#include <new>
#include <stdexcept>

#include "ssk/bench.hpp"

namespace ssk::bench {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void BenchConfig::validate() const {
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (pairs < 1) throw std::invalid_argument("pairs must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  for (std::size_t len : lengths) {
    if (len < 1) throw std::invalid_argument("lengths must be positive");
  }
  for (std::size_t a : alphabet_sizes) {
    if (a < 1) throw std::invalid_argument("alphabet sizes must be positive");
  }
  KernelParams(p, lambda);
}

ComputeOptions BenchConfig::compute_options() const {
  ComputeOptions out;
  out.g_max = g_max;
  out.memory_budget_bytes = memory_budget_bytes;
  out.oracle = oracle;
  return out;
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::ok: return "ok";
    case Status::oom: return "oom";
    case Status::rejected: return "rejected";
    case Status::error: return "error";
    case Status::unreadable: return "unreadable";
    case Status::unpaired: return "unpaired";
  }
  return "?";
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t length, std::size_t alphabet,
                        std::size_t pair_id) noexcept {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ length);
  h = splitmix64(h ^ alphabet);
  return splitmix64(h ^ pair_id);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t x = rng();
  u128 m = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

SymbolSeq random_string(std::size_t length, std::size_t alphabet, std::mt19937_64& rng) {
  std::vector<Symbol> out(length);
  for (auto& c : out) c = static_cast<Symbol>(uniform_below(rng, alphabet));
  return SymbolSeq(std::move(out), alphabet);
}

}  // namespace

std::pair<SymbolSeq, SymbolSeq> gen_random_pair(std::size_t length, std::size_t alphabet_size,
                                                std::mt19937_64& rng) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
  SymbolSeq s = random_string(length, alphabet_size, rng);
  SymbolSeq t = random_string(length, alphabet_size, rng);
  return {std::move(s), std::move(t)};
}

std::pair<SymbolSeq, SymbolSeq> cell_pair(const BenchConfig& config, std::size_t length,
                                          std::size_t alphabet, std::size_t pair_id) {
  std::mt19937_64 rng(cell_seed(config.seed, length, alphabet, pair_id));
  if (!config.vary_lengths) return gen_random_pair(length, alphabet, rng);
  const std::size_t ls = uniform_below(rng, length + 1);
  const std::size_t lt = uniform_below(rng, length + 1);
  SymbolSeq s = random_string(ls, alphabet, rng);
  SymbolSeq t = random_string(lt, alphabet, rng);
  return {std::move(s), std::move(t)};
}

Timed timed_run(Algorithm a, const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                const ComputeOptions& options) {
  Timed out;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    KernelVector v = compute_ssk(a, s, t, params, options);
    const auto t1 = std::chrono::steady_clock::now();
    out.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    out.value = std::move(v);
  } catch (const ResourceLimitError&) {
    out.status = Status::oom;
  } catch (const std::bad_alloc&) {
    out.status = Status::oom;
  } catch (const std::length_error&) {
    out.status = Status::rejected;
  } catch (const std::exception&) {
    out.status = Status::error;
  }
  return out;
}

std::string format_log(double v) {
  if (std::isnan(v)) return {};
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        out.back() += "\"\"";
        ++k;
      } else {
        if (c == '"') quoted = false;
        out.back() += c;
      }
    } else if (c == ',') {
      out.emplace_back();
    } else {
      if (c == '"') quoted = true;
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

std::string strip_column(std::string_view csv, std::string_view column) {
  std::string out;
  std::optional<std::size_t> drop;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line.front() == '#') {
      out.append(line);
      out += '\n';
      continue;
    }
    auto fields = split_csv(line);
    if (!drop) {
      for (std::size_t k = 0; k < fields.size(); ++k) {
        if (fields[k] == column) drop = k;
      }
      if (!drop) drop = fields.size();
    }
    if (*drop < fields.size()) fields.erase(fields.begin() + static_cast<std::ptrdiff_t>(*drop));
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out += ',';
      out += fields[k];
    }
    out += '\n';
  }
  return out;
}

}  // namespace ssk::bench
