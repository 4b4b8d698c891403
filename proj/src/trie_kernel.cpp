#include "ssk/trie_kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssk/detail/scalar.hpp"

namespace ssk {
namespace {

struct Alive {
  std::uint32_t gaps;
  std::uint32_t pos;
  double count;
};

using AliveSet = std::vector<Alive>;

void consolidate(AliveSet& set) {
  std::sort(set.begin(), set.end(), [](const Alive& a, const Alive& b) {
    return a.gaps != b.gaps ? a.gaps < b.gaps : a.pos < b.pos;
  });
  std::size_t out = 0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (out > 0 && set[out - 1].gaps == set[k].gaps && set[out - 1].pos == set[k].pos) {
      set[out - 1].count += set[k].count;
    } else {
      set[out++] = set[k];
    }
  }
  set.resize(out);
}

AliveSet seed(const std::vector<std::uint32_t>& occurrences) {
  AliveSet set;
  set.reserve(occurrences.size());
  for (std::uint32_t pos : occurrences) set.push_back({0, pos, 1.0});
  return set;
}

// Appends symbol occurrences after each alive entry while the gap budget lasts.
AliveSet extend(const AliveSet& set, const std::vector<std::uint32_t>& occurrences,
                std::size_t g_max) {
  AliveSet next;
  for (const Alive& a : set) {
    const std::size_t limit = a.pos + 1 + (g_max - a.gaps);
    for (auto it = std::upper_bound(occurrences.begin(), occurrences.end(), a.pos);
         it != occurrences.end() && *it <= limit; ++it) {
      next.push_back({static_cast<std::uint32_t>(a.gaps + (*it - a.pos - 1)), *it, a.count});
    }
  }
  consolidate(next);
  return next;
}

class TrieWalk {
 public:
  TrieWalk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params, std::size_t g_max)
      : s_(s),
        t_(t),
        p_(params.p()),
        g_max_(g_max),
        alphabet_(std::max(s.alphabet_size(), t.alphabet_size())),
        occ_s_(build_occurrence_index(s, alphabet_)),
        occ_t_(build_occurrence_index(t, alphabet_)),
        powers_(params.lambda(), 0, g_max + params.p()),
        seen_s_(alphabet_, 0),
        seen_t_(alphabet_, 0),
        result_(params.p()) {}

  KernelVector run() {
    for (Symbol c = 0; c < alphabet_; ++c) {
      if (occ_s_[c].empty() || occ_t_[c].empty()) continue;
      visit(1, seed(occ_s_[c]), seed(occ_t_[c]));
    }
    return result_;
  }

 private:
  HdrScalar weight(const AliveSet& set, std::size_t depth) const {
    HdrScalar sum;
    for (const Alive& a : set) {
      sum += HdrScalar(a.count) * powers_(static_cast<std::int64_t>(a.gaps + depth));
    }
    return sum;
  }

  void mark_window(const AliveSet& set, const SymbolSeq& seq, std::vector<std::uint64_t>& seen) {
    for (const Alive& a : set) {
      const std::size_t last = std::min<std::size_t>(seq.size(), a.pos + 1 + (g_max_ - a.gaps));
      for (std::size_t pos = a.pos + 1; pos <= last; ++pos) seen[seq.at(pos)] = epoch_;
    }
  }

  std::vector<Symbol> extension_symbols(const AliveSet& as, const AliveSet& at) {
    ++epoch_;
    mark_window(as, s_, seen_s_);
    mark_window(at, t_, seen_t_);
    std::vector<Symbol> symbols;
    for (const Alive& a : as) {
      const std::size_t last = std::min<std::size_t>(s_.size(), a.pos + 1 + (g_max_ - a.gaps));
      for (std::size_t pos = a.pos + 1; pos <= last; ++pos) {
        const Symbol c = s_.at(pos);
        if (seen_t_[c] == epoch_ && seen_s_[c] == epoch_) {
          symbols.push_back(c);
          seen_s_[c] = 0;  // report once
        }
      }
    }
    return symbols;
  }

  void visit(std::size_t depth, const AliveSet& as, const AliveSet& at) {
    result_.level(depth) += weight(as, depth) * weight(at, depth);
    if (depth == p_) return;
    for (Symbol c : extension_symbols(as, at)) {
      AliveSet next_s = extend(as, occ_s_[c], g_max_);
      if (next_s.empty()) continue;
      AliveSet next_t = extend(at, occ_t_[c], g_max_);
      if (next_t.empty()) continue;
      visit(depth + 1, next_s, next_t);
    }
  }

  const SymbolSeq& s_;
  const SymbolSeq& t_;
  std::size_t p_;
  std::size_t g_max_;
  std::size_t alphabet_;
  OccurrenceIndex occ_s_;
  OccurrenceIndex occ_t_;
  detail::LambdaPowers<HdrScalar> powers_;
  std::vector<std::uint64_t> seen_s_;
  std::vector<std::uint64_t> seen_t_;
  std::uint64_t epoch_ = 0;
  KernelVector result_;
};

std::vector<std::vector<std::uint32_t>> expand_lists(const AliveSet& set, std::size_t g_max) {
  std::vector<std::vector<std::uint32_t>> lists(g_max + 1);
  for (const Alive& a : set) {
    lists[a.gaps].insert(lists[a.gaps].end(), static_cast<std::size_t>(a.count), a.pos);
  }
  return lists;
}

}  // namespace

KernelVector trie_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                      std::size_t g_max) {
  // No occurrence can have more gaps than the longer string has positions.
  g_max = std::min(g_max, std::max(s.size(), t.size()));
  return TrieWalk(s, t, params, g_max).run();
}

AliveLists alive_lists_snapshot(const SymbolSeq& s, const SymbolSeq& t, std::span<const Symbol> u,
                                std::size_t g_max) {
  if (u.empty()) throw std::invalid_argument("alive lists need a non-empty subsequence");
  const std::size_t alphabet =
      std::max({s.alphabet_size(), t.alphabet_size(), static_cast<std::size_t>(
                                                          *std::max_element(u.begin(), u.end())) +
                                                          1});
  const OccurrenceIndex occ_s = build_occurrence_index(s, alphabet);
  const OccurrenceIndex occ_t = build_occurrence_index(t, alphabet);

  AliveSet as = seed(occ_s[u[0]]);
  AliveSet at = seed(occ_t[u[0]]);
  for (std::size_t k = 1; k < u.size(); ++k) {
    as = extend(as, occ_s[u[k]], g_max);
    at = extend(at, occ_t[u[k]], g_max);
  }
  return {expand_lists(as, g_max), expand_lists(at, g_max)};
}

}  // namespace ssk
