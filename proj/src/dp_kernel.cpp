#include "ssk/dp_kernel.hpp"

#include "ssk/detail/scalar.hpp"

namespace ssk {
namespace {

// Row-major sweep over (i, j) with all levels advanced per cell, so only the
// previous and current DP rows are kept for each level.
template <class T>
KernelVector dp_sweep(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params) {
  const std::size_t m = s.size();
  const std::size_t n = t.size();
  const std::size_t p = params.p();
  const T lambda = detail::from_hdr<T>(HdrScalar(params.lambda()));
  const T lambda2 = lambda * lambda;

  std::vector<T> total(p + 1, T{});
  // Row buffers indexed [j * (p + 1) + q], q = 2..p.
  const std::size_t stride = p + 1;
  std::vector<T> prev((n + 1) * stride, T{});
  std::vector<T> cur((n + 1) * stride, T{});
  std::vector<T> kps(p + 1, T{});

  for (std::size_t i = 1; i <= m; ++i) {
    const Symbol a = s[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      T* here = &cur[j * stride];
      const T* up = &prev[j * stride];
      const T* left = &cur[(j - 1) * stride];
      const T* diag = &prev[(j - 1) * stride];

      if (a == t[j - 1]) {
        kps[1] = lambda2;
        total[1] += lambda2;
        for (std::size_t q = 2; q <= p; ++q) {
          kps[q] = lambda2 * diag[q];
          total[q] += kps[q];
        }
      } else {
        std::fill(kps.begin() + 1, kps.end(), T{});
      }
      for (std::size_t q = 2; q <= p; ++q) {
        // DP_q(i,j) = K^S_{q-1}(i,j) + lambda (DP(i-1,j) + DP(i,j-1) - lambda DP(i-1,j-1))
        const T inner = detail::clamp_nonnegative(left[q] - lambda * diag[q]);
        here[q] = kps[q - 1] + lambda * (up[q] + inner);
      }
    }
    std::swap(prev, cur);
  }

  KernelVector out(p);
  for (std::size_t q = 1; q <= p; ++q) out.level(q) = detail::to_hdr(total[q]);
  return out;
}

}  // namespace

KernelVector dp_ssk(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params) {
  if (detail::fits_native(s.size(), t.size(), params.p(), params.lambda())) {
    return dp_sweep<double>(s, t, params);
  }
  return dp_sweep<HdrScalar>(s, t, params);
}

DpTables dp_tables(const SymbolSeq& s, const SymbolSeq& t, const KernelParams& params) {
  const std::size_t m = s.size();
  const std::size_t n = t.size();
  const HdrScalar lambda(params.lambda());
  const HdrScalar lambda2 = lambda * lambda;

  DpTables tables(m + 1, n + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (s[i - 1] == t[j - 1]) tables.kps(i, j) = lambda2;
    }
  }
  // In-place level advance: DP is rebuilt from the level q-1 suffix table,
  // then each suffix entry is overwritten with its level q value.
  for (std::size_t q = 2; q <= params.p(); ++q) {
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        tables.dp(i, j) = tables.kps(i, j) +
                          lambda * (tables.dp(i - 1, j) +
                                    (tables.dp(i, j - 1) - lambda * tables.dp(i - 1, j - 1)));
        if (s[i - 1] == t[j - 1]) tables.kps(i, j) = lambda2 * tables.dp(i - 1, j - 1);
      }
    }
  }
  return tables;
}

}  // namespace ssk
