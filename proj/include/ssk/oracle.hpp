#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ssk/kernel_types.hpp"

namespace ssk {

/// Bounds on the exponential enumerations below.
struct OracleLimits {
  std::size_t max_length = 14;
  std::size_t max_feature_space = std::size_t{1} << 24;
};

/// K_1..K_p by enumerating every pair of index tuples (I, J) with s(I) = t(J)
/// and summing lambda^(l(I)+l(J)). Throws std::length_error above the cap.
KernelVector brute_force_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                             const OracleLimits& limits = {});

/// K_p^S(s,t): only tuples whose last index is the last position of each string.
HdrScalar brute_force_suffix(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params,
                             const OracleLimits& limits = {});

using FeatureMap = std::map<std::vector<Symbol>, double>;

/// Nonzero coordinates phi_u(s) = sum over I with s(I) = u of lambda^l(I),
/// |u| = p. Throws std::length_error when |alphabet|^p exceeds the cap.
FeatureMap explicit_feature_map(const SymbolSeq& s, const KernelParams& params,
                                const OracleLimits& limits = {});

double feature_inner_product(const FeatureMap& a, const FeatureMap& b);

/// k_st / sqrt(k_ss * k_tt). Throws std::domain_error if a self kernel is zero.
double normalize(HdrScalar k_st, HdrScalar k_ss, HdrScalar k_tt);

}  // namespace ssk
