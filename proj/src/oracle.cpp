#include "ssk/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace ssk {
namespace {

struct Occurrence {
  std::vector<Symbol> u;
  std::size_t span = 0;
};

void check_cap(const SymbolSeq& seq, const OracleLimits& limits) {
  if (seq.size() > limits.max_length) {
    throw std::length_error("brute-force oracle limited to strings of length " +
                            std::to_string(limits.max_length));
  }
}

// Every increasing q-tuple of positions in s; when `last` is set only tuples
// ending at the final position.
std::vector<Occurrence> enumerate(const SymbolSeq& s, std::size_t q, bool last) {
  std::vector<Occurrence> out;
  if (q == 0 || q > s.size()) return out;
  std::vector<std::size_t> idx(q);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == q) {
      if (last && idx.back() != s.size() - 1) return;
      Occurrence occ;
      occ.u.reserve(q);
      for (std::size_t k : idx) occ.u.push_back(s[k]);
      occ.span = idx.back() - idx.front() + 1;
      out.push_back(std::move(occ));
      return;
    }
    for (std::size_t k = from; k < s.size(); ++k) {
      idx[depth] = k;
      rec(depth + 1, k + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Counts matching pairs per total span, then sums count * lambda^span in
// span order, so the result does not depend on argument order.
HdrScalar pair_sum(const std::vector<Occurrence>& a, const std::vector<Occurrence>& b,
                   double lambda) {
  std::vector<std::uint64_t> by_span;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.u != y.u) continue;
      const std::size_t span = x.span + y.span;
      if (by_span.size() <= span) by_span.resize(span + 1, 0);
      ++by_span[span];
    }
  }
  HdrScalar sum;
  for (std::size_t span = 0; span < by_span.size(); ++span) {
    if (by_span[span] == 0) continue;
    sum += HdrScalar(static_cast<double>(by_span[span])) *
           HdrScalar::from_lambda_power(lambda, static_cast<std::int64_t>(span));
  }
  return sum;
}

}  // namespace

KernelVector brute_force_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                             const OracleLimits& limits) {
  check_cap(s, limits);
  check_cap(t, limits);
  KernelVector out(params.p());
  for (std::size_t q = 1; q <= params.p(); ++q) {
    out.level(q) = pair_sum(enumerate(s, q, false), enumerate(t, q, false), params.lambda());
  }
  return out;
}

HdrScalar brute_force_suffix(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                             const OracleLimits& limits) {
  check_cap(s, limits);
  check_cap(t, limits);
  return pair_sum(enumerate(s, params.p(), true), enumerate(t, params.p(), true), params.lambda());
}

FeatureMap explicit_feature_map(const SymbolSeq& s, const KernelParams& params,
                                const OracleLimits& limits) {
  check_cap(s, limits);
  double space = 1.0;
  for (std::size_t k = 0; k < params.p(); ++k) space *= static_cast<double>(s.alphabet_size());
  if (space > static_cast<double>(limits.max_feature_space)) {
    throw std::length_error("feature space |alphabet|^p exceeds the configured cap");
  }
  FeatureMap phi;
  for (const auto& occ : enumerate(s, params.p(), false)) {
    phi[occ.u] += std::pow(params.lambda(), static_cast<double>(occ.span));
  }
  return phi;
}

double feature_inner_product(const FeatureMap& a, const FeatureMap& b) {
  double sum = 0.0;
  for (const auto& [u, value] : a) {
    if (auto it = b.find(u); it != b.end()) sum += value * it->second;
  }
  return sum;
}

double normalize(HdrScalar k_st, HdrScalar k_ss, HdrScalar k_tt) {
  if (k_ss.is_zero() || k_tt.is_zero()) {
    throw std::domain_error("normalization undefined for a zero self kernel");
  }
  return (k_st / (k_ss * k_tt).sqrt()).to_double();
}

}  // namespace ssk
