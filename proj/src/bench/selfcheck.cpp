#include <ostream>
#include <string>

#include "ssk/bench.hpp"
#include "ssk/range_geometry.hpp"

namespace ssk::bench {
namespace {

HdrScalar lam(double l, std::int64_t k) { return HdrScalar::from_lambda_power(l, k); }

struct Checker {
  std::ostream& out;
  bool ok = true;

  void check(const std::string& name, HdrScalar got, HdrScalar want, double tol = 1e-12) {
    const double dev = relative_deviation(got, want);
    const bool pass = dev <= tol;
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << name << " got=" << got << " want=" << want << '\n';
  }
};

}  // namespace

bool run_selfcheck(std::ostream& out) {
  Checker c{out};
  const SymbolSeq gatta = SymbolSeq::from_bytes("gatta");
  const SymbolSeq cata = SymbolSeq::from_bytes("cata");
  const SymbolSeq bar = SymbolSeq::from_bytes("bar");
  const SymbolSeq bat = SymbolSeq::from_bytes("bat");
  ComputeOptions options;
  options.g_max = 5;

  for (double l : {0.5, 0.37}) {
    const std::string at = " lambda=" + std::to_string(l);
    const KernelParams p3(3, l);
    const HdrScalar k1 = HdrScalar(6.0) * lam(l, 2);
    const HdrScalar k2 = HdrScalar(2.0) * lam(l, 4) + HdrScalar(2.0) * lam(l, 5) + lam(l, 7);
    const HdrScalar k3 = HdrScalar(2.0) * lam(l, 7);
    for (Algorithm a : kAllAlgorithms) {
      const KernelVector k = compute_ssk(a, gatta, cata, p3, options);
      const std::string name = std::string(to_string(a)) + " gatta/cata";
      c.check(name + " K1" + at, k.level(1), k1);
      c.check(name + " K2" + at, k.level(2), k2);
      c.check(name + " K3" + at, k.level(3), k3);
    }
    const KernelParams p2(2, l);
    for (Algorithm a : kAllAlgorithms) {
      c.check(std::string(to_string(a)) + " bar/bat K2" + at,
              compute_ssk(a, bar, bat, p2, options).level(2), lam(l, 4));
    }
    const double norm = normalize(dp_ssk(bar, bat, p2).level(2), dp_ssk(bar, bar, p2).level(2),
                                  dp_ssk(bat, bat, p2).level(2));
    c.check("normalized bar/bat" + at, HdrScalar(norm), HdrScalar(1.0 / (2.0 + l * l)));

    const auto lists = sparse_trace(gatta, cata, p2);
    const auto l1 = lists[0].row(2);
    c.check("sparse L1(2) first" + at, l1[0].value, lam(l, 7));
    c.check("sparse L1(2) second" + at, l1[1].value, lam(l, 5));
    const auto l1_5 = lists[0].row(5);
    c.check("sparse L1(5) second" + at, l1_5[1].value, lam(l, 2));
    const auto l2 = lists[1].row(5);
    c.check("sparse L2(5)" + at, l2.empty() ? HdrScalar{} : l2[0].value,
            lam(l, 7) + lam(l, 5) + lam(l, 4));

    std::vector<geometry::WeightedPoint<HdrScalar>> pts;
    for (const auto& e : build_match_list(gatta, cata, l)) {
      pts.push_back(geometry::WeightedPoint<HdrScalar>::at(e.i, e.j, e.value));
    }
    const geometry::Lrst tree(pts);
    c.check("range sum (0..4)x(0..3)" + at,
            tree.range_sum(geometry::RangeQuery2D::grid(0, 4, 0, 3)),
            lam(l, -5) + lam(l, -4) + lam(l, -2));
  }
  out << (c.ok ? "selfcheck: PASS" : "selfcheck: FAIL") << '\n';
  return c.ok;
}

}  // namespace ssk::bench
