#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>

#include "ssk/bench.hpp"

namespace ssk::bench {

std::optional<Perturbation> parse_perturbation(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto alg = parse_algorithm(text.substr(0, colon));
  if (!alg) return std::nullopt;
  const std::string_view lvl = text.substr(colon + 1);
  std::size_t level = 0;
  const auto [ptr, ec] = std::from_chars(lvl.data(), lvl.data() + lvl.size(), level);
  if (ec != std::errc{} || ptr != lvl.data() + lvl.size() || level < 1) return std::nullopt;
  Perturbation out;
  out.algorithm = *alg;
  out.level = level;
  return out;
}

std::optional<std::pair<Algorithm, std::size_t>> CrosscheckReport::suspect() const {
  std::map<std::pair<Algorithm, std::size_t>, std::size_t> votes;
  for (const auto& m : mismatches) {
    ++votes[{m.first, m.level}];
    ++votes[{m.second, m.level}];
  }
  if (votes.empty()) return std::nullopt;
  return std::max_element(votes.begin(), votes.end(),
                          [](const auto& a, const auto& b) { return a.second < b.second; })
      ->first;
}

CrosscheckReport crosscheck_pairs(std::span<const std::pair<SymbolSeq, SymbolSeq>> pairs,
                                  std::span<const Algorithm> algorithms,
                                  const KernelParams& params, const CrosscheckOptions& options) {
  CrosscheckReport report;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [s, t] = pairs[k];
    const std::size_t longest = std::max(s.size(), t.size());
    std::vector<std::pair<Algorithm, KernelVector>> results;
    for (Algorithm a : algorithms) {
      if (a == Algorithm::brute && longest > options.compute.oracle.max_length) continue;
      const Timed run = timed_run(a, s, t, params, options.compute);
      if (!run.value) {
        report.errors.push_back("pair " + std::to_string(k) + ": " + std::string(to_string(a)) +
                                " failed (" + std::string(to_string(run.status)) + ")");
        continue;
      }
      KernelVector v = *run.value;
      if (options.perturb && options.perturb->algorithm == a && options.perturb->level <= v.p()) {
        v.level(options.perturb->level) *= HdrScalar(options.perturb->factor);
      }
      results.emplace_back(a, std::move(v));
    }
    ++report.pairs;
    for (std::size_t x = 0; x < results.size(); ++x) {
      for (std::size_t y = x + 1; y < results.size(); ++y) {
        for (std::size_t q = 1; q <= params.p(); ++q) {
          const bool trie = results[x].first == Algorithm::trie || results[y].first == Algorithm::trie;
          if (trie && options.compute.g_max + q < longest) continue;
          const double dev = relative_deviation(results[x].second.level(q), results[y].second.level(q));
          ++report.comparisons;
          report.max_deviation = std::max(report.max_deviation, dev);
          if (dev > options.tolerance) {
            report.mismatches.push_back(
                {k, s.size(), t.size(), results[x].first, results[y].first, q, dev});
          }
        }
      }
    }
  }
  return report;
}

CrosscheckReport crosscheck(const BenchConfig& config, double tolerance,
                            const std::optional<Perturbation>& perturb) {
  config.validate();
  std::vector<std::pair<SymbolSeq, SymbolSeq>> pairs;
  for (std::size_t len : config.lengths) {
    for (std::size_t a : config.alphabet_sizes) {
      for (std::size_t id = 0; id < config.pairs; ++id) pairs.push_back(cell_pair(config, len, a, id));
    }
  }
  CrosscheckOptions options;
  options.compute = config.compute_options();
  options.tolerance = tolerance;
  options.perturb = perturb;
  return crosscheck_pairs(pairs, config.algorithms, KernelParams(config.p, config.lambda), options);
}

void print_report(const CrosscheckReport& report, double tolerance, std::ostream& out) {
  constexpr std::size_t kShown = 50;
  for (std::size_t k = 0; k < report.mismatches.size() && k < kShown; ++k) {
    const auto& m = report.mismatches[k];
    out << "FAIL pair=" << m.pair_index << " len_s=" << m.len_s << " len_t=" << m.len_t
        << " level=" << m.level << ' ' << to_string(m.first) << " vs " << to_string(m.second)
        << " deviation=" << m.deviation << '\n';
  }
  if (report.mismatches.size() > kShown) {
    out << "... " << report.mismatches.size() - kShown << " more mismatches\n";
  }
  for (const auto& e : report.errors) out << "ERROR " << e << '\n';
  if (auto sus = report.suspect()) {
    out << "suspect: " << to_string(sus->first) << " level " << sus->second << '\n';
  }
  out << "crosscheck: " << report.pairs << " pairs, " << report.comparisons
      << " comparisons, max deviation " << report.max_deviation << " (tolerance " << tolerance
      << "): " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace ssk::bench
