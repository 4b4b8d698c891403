#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ssk/oracle.hpp"
#include "support/test_support.hpp"

using namespace ssk;
using ssk::testing::lam;
using ssk::testing::str;

TEST_SUITE("kernel_core") {

TEST_CASE("hdr scalar lambda powers") {
  const HdrScalar big = HdrScalar::from_lambda_power(0.5, -16000);
  CHECK(big.mantissa() == 0.5);
  CHECK(big.exponent() == 16001);
  CHECK(big.log() == doctest::Approx(16000 * std::log(2.0)));

  const HdrScalar x = HdrScalar::from_lambda_power(0.37, 12);
  CHECK(x + HdrScalar{} == x);
  CHECK(HdrScalar{} + x == x);
  CHECK(lam(0.5, 3) * lam(0.5, 4) == lam(0.5, 7));
  CHECK(lam(0.5, 0) == HdrScalar::one());

  const HdrScalar huge = HdrScalar::from_lambda_power(0.9, -(std::int64_t{1} << 31));
  CHECK(std::isfinite(huge.log()));
  CHECK(huge.log() == doctest::Approx(-std::log(0.9) * 2147483648.0).epsilon(1e-12));
  const HdrScalar tiny = HdrScalar::from_lambda_power(0.9, std::int64_t{1} << 31);
  CHECK(!tiny.is_zero());
  CHECK((huge * tiny).to_double() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("hdr scalar basics") {
  CHECK(HdrScalar{}.is_zero());
  CHECK(HdrScalar{}.log() == -std::numeric_limits<double>::infinity());
  CHECK(HdrScalar(3.0).to_double() == 3.0);
  CHECK(HdrScalar(0.0).is_zero());
  CHECK_THROWS_AS(HdrScalar(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(HdrScalar(std::nan("")), std::invalid_argument);
  CHECK(HdrScalar(2.0) < HdrScalar(3.0));
  CHECK(HdrScalar{} < HdrScalar(1e-300));
  CHECK(lam(0.5, 10) < lam(0.5, 9));
  CHECK((HdrScalar(6.0) / HdrScalar(4.0)).to_double() == 1.5);
  CHECK_THROWS_AS(HdrScalar(1.0) / HdrScalar{}, std::domain_error);
  CHECK(HdrScalar(16.0).sqrt().to_double() == 4.0);
  CHECK(lam(0.5, -4000).sqrt() == lam(0.5, -2000));
  CHECK((HdrScalar(5.0) - HdrScalar(3.0)).to_double() == 2.0);
  CHECK((HdrScalar(3.0) - HdrScalar(5.0)).is_zero());
  CHECK(relative_deviation(HdrScalar{}, HdrScalar{}) == 0.0);
  CHECK(relative_deviation(HdrScalar{}, HdrScalar(1.0)) == 1.0);
  CHECK(relative_deviation(HdrScalar(1.0), HdrScalar(1.0 + 1e-10)) == doctest::Approx(1e-10).epsilon(1e-3));
}

TEST_CASE("hdr arithmetic agrees with native doubles") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(0.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  int bad = 0;
  for (int k = 0; k < 10000; ++k) {
    const double a = mant(rng) * std::pow(10.0, expo(rng) / 2);
    const double b = mant(rng) * std::pow(10.0, expo(rng) / 2);
    const double sum = (HdrScalar(a) + HdrScalar(b)).to_double();
    const double prod = (HdrScalar(a) * HdrScalar(b)).to_double();
    if (std::abs(sum - (a + b)) > 1e-12 * (a + b)) ++bad;
    if (a * b > 0 && std::isnormal(a * b) && std::abs(prod - a * b) > 1e-12 * a * b) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("encode texts") {
  {
    const std::vector<std::string> texts{"aba"};
    const auto enc = encode_texts(texts, TokenMode::character);
    CHECK(enc.alphabet.size() == 2);
    CHECK(enc.alphabet.id("a") == 0);
    CHECK(enc.alphabet.id("b") == 1);
    CHECK(enc.seqs.at(0) == SymbolSeq({0, 1, 0}, 2));
  }
  {
    const std::vector<std::string> texts{"cat dog", "dog"};
    const auto enc = encode_texts(texts, TokenMode::word);
    CHECK(enc.alphabet.size() == 2);
    CHECK(enc.seqs.at(0) == SymbolSeq({0, 1}, 2));
    CHECK(enc.seqs.at(1) == SymbolSeq({1}, 2));
  }
  {
    const std::vector<std::string> texts{""};
    const auto enc = encode_texts(texts, TokenMode::character);
    CHECK(enc.alphabet.size() == 0);
    CHECK(enc.seqs.at(0).size() == 0);
  }
  CHECK(tokenize("The cat, the DOG!", TokenMode::word) ==
        std::vector<std::string>{"the", "cat", "the", "dog"});
  CHECK(tokenize("h\xC3\xA9!", TokenMode::character) == std::vector<std::string>{"h", "\xC3\xA9", "!"});
}

TEST_CASE("symbol sequences") {
  CHECK_THROWS_AS(SymbolSeq({0, 3}, 3), std::invalid_argument);
  const SymbolSeq s({2, 0, 1}, 3);
  CHECK(s.at(1) == 2);
  CHECK(s.prefix(2) == SymbolSeq({2, 0}, 3));
  CHECK(SymbolSeq{}.empty());
}

TEST_CASE("occurrence index") {
  const auto idx = build_occurrence_index(str("gatta"), 256);
  CHECK(idx['a'] == std::vector<std::uint32_t>{2, 5});
  CHECK(idx['t'] == std::vector<std::uint32_t>{3, 4});
  CHECK(idx['g'] == std::vector<std::uint32_t>{1});
  for (const auto& list : build_occurrence_index(SymbolSeq({}, 4), 4)) CHECK(list.empty());
  CHECK(build_occurrence_index(str("aaa"), 256)['a'] == std::vector<std::uint32_t>{1, 2, 3});
}

TEST_CASE("match list") {
  const double l = 0.5;
  const MatchList list = build_match_list(str("gatta"), str("cata"), l);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& e : list) pairs.emplace_back(e.i, e.j);
  CHECK(pairs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                     {2, 2}, {2, 4}, {3, 3}, {4, 3}, {5, 2}, {5, 4}});
  CHECK(list.front().value == lam(l, -2));
  CHECK(list.back().value == lam(l, -7));
  CHECK(build_match_list(str("ab"), str("cd"), l).empty());
}

TEST_CASE("match list cardinality") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const std::size_t alpha = 1 + rng() % 8;
    const auto s = ssk::testing::random_seq(rng, rng() % 40, alpha);
    const auto t = ssk::testing::random_seq(rng, rng() % 40, alpha);
    const auto is = build_occurrence_index(s, alpha);
    const auto it = build_occurrence_index(t, alpha);
    std::uint64_t expect = 0;
    for (std::size_t c = 0; c < alpha; ++c) expect += is[c].size() * it[c].size();
    CHECK(build_match_list(s, t, 0.5).size() == expect);
    CHECK(match_count(s, t) == expect);
  }
}

TEST_CASE("kernel params validation") {
  CHECK_THROWS_AS(KernelParams(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(KernelParams(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(KernelParams(2, 1.5), std::invalid_argument);
  CHECK_NOTHROW(KernelParams(2, 1.0));
}

TEST_CASE("brute force worked values") {
  for (double l : {0.5, 0.37}) {
    CAPTURE(l);
    CHECK(brute_force_ssk(str("bar"), str("bat"), KernelParams(2, l)).level(2) == lam(l, 4));
    const KernelVector k = brute_force_ssk(str("gatta"), str("cata"), KernelParams(3, l));
    CHECK(ssk::testing::close(k.level(1), HdrScalar(6.0) * lam(l, 2), 1e-14));
    CHECK(ssk::testing::close(k.level(2), HdrScalar(2.0) * lam(l, 4) + HdrScalar(2.0) * lam(l, 5) + lam(l, 7), 1e-14));
    CHECK(ssk::testing::close(k.level(3), HdrScalar(2.0) * lam(l, 7), 1e-14));
  }
  const KernelVector k = brute_force_ssk(str("gatta"), str("cata"), KernelParams(3, 0.5));
  CHECK(k.level(1).to_double() == 1.5);
  CHECK(k.level(2).to_double() == 0.1953125);
  CHECK(k.level(3).to_double() == 0.015625);
  CHECK(brute_force_ssk(str("a"), str("b"), KernelParams(1, 0.5)).level(1).is_zero());
  const KernelVector shortk = brute_force_ssk(str("ab"), str("abc"), KernelParams(4, 0.5));
  CHECK(shortk.level(3).is_zero());
  CHECK(shortk.level(4).is_zero());
  CHECK(brute_force_ssk(SymbolSeq{}, str("abc"), KernelParams(2, 0.5)).level(1).is_zero());
  CHECK_THROWS_AS(brute_force_ssk(str("abcdefghijklmno"), str("ab"), KernelParams(2, 0.5)),
                  std::length_error);
}

TEST_CASE("brute force suffix kernel") {
  const double l = 0.37;
  CHECK(brute_force_suffix(str("bar"), str("bat"), KernelParams(2, l)).is_zero());
  CHECK(brute_force_suffix(str("bat"), str("cat"), KernelParams(2, l)) == lam(l, 4));
  CHECK(brute_force_suffix(str("a"), str("a"), KernelParams(1, l)) == lam(l, 2));
}

TEST_CASE("explicit feature map") {
  const double l = 0.5;
  const KernelParams params(2, l);
  const FeatureMap bar = explicit_feature_map(str("bar"), params);
  CHECK(bar.size() == 3);
  CHECK(bar.at({'a', 'r'}) == lam(l, 2).to_double());
  CHECK(bar.at({'b', 'a'}) == lam(l, 2).to_double());
  CHECK(bar.at({'b', 'r'}) == lam(l, 3).to_double());
  const FeatureMap cat = explicit_feature_map(str("cat"), params);
  CHECK(cat.at({'a', 't'}) == lam(l, 2).to_double());
  CHECK(cat.at({'c', 'a'}) == lam(l, 2).to_double());
  CHECK(cat.at({'c', 't'}) == lam(l, 3).to_double());
  CHECK(explicit_feature_map(str("a"), params).empty());
  CHECK_THROWS_AS(explicit_feature_map(SymbolSeq({0}, 100), KernelParams(5, l)), std::length_error);
}

TEST_CASE("normalization") {
  const double l = 0.37;
  const KernelParams params(2, l);
  const HdrScalar st = brute_force_ssk(str("bar"), str("bat"), params).level(2);
  const HdrScalar ss = brute_force_ssk(str("bar"), str("bar"), params).level(2);
  const HdrScalar tt = brute_force_ssk(str("bat"), str("bat"), params).level(2);
  CHECK(normalize(st, ss, tt) == doctest::Approx(1.0 / (2.0 + l * l)).epsilon(1e-12));
  CHECK(normalize(ss, ss, ss) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(normalize(HdrScalar(0.0), HdrScalar(1.0), HdrScalar(1.0)) == 0.0);
  CHECK_THROWS_AS(normalize(HdrScalar(0.0), HdrScalar(0.0), HdrScalar(1.0)), std::domain_error);
  const KernelParams half(2, 0.5);
  CHECK(normalize(brute_force_ssk(str("bar"), str("bat"), half).level(2),
                  brute_force_ssk(str("bar"), str("bar"), half).level(2),
                  brute_force_ssk(str("bat"), str("bat"), half).level(2)) ==
        doctest::Approx(1.0 / 2.25).epsilon(1e-12));
}

TEST_CASE("oracle properties on random strings") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    const std::size_t alpha = 1 + rng() % 4;
    const auto s = ssk::testing::random_seq(rng, rng() % 9, alpha);
    const auto t = ssk::testing::random_seq(rng, rng() % 9, alpha);
    const KernelParams params(1 + rng() % 4, 0.3 + 0.1 * static_cast<double>(rng() % 7));
    const KernelVector st = brute_force_ssk(s, t, params);
    const KernelVector ts = brute_force_ssk(t, s, params);
    CHECK(st == ts);

    const double fm = feature_inner_product(explicit_feature_map(s, params), explicit_feature_map(t, params));
    CHECK(fm == doctest::Approx(st.level(params.p()).to_double()).epsilon(1e-9));

    HdrScalar total;
    for (std::size_t i = 1; i <= s.size(); ++i) {
      for (std::size_t j = 1; j <= t.size(); ++j) {
        total += brute_force_suffix(s.prefix(i), t.prefix(j), params);
      }
    }
    CHECK(ssk::testing::close(total, st.level(params.p()), 1e-12));
  }
}

TEST_CASE("gram matrix is positive semidefinite") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t alpha = 2 + rng() % 3;
    std::vector<SymbolSeq> set;
    for (int k = 0; k < 6; ++k) set.push_back(ssk::testing::random_seq(rng, 2 + rng() % 7, alpha));
    const KernelParams params(1 + rng() % 3, 0.5);
    std::vector<std::vector<double>> gram(6, std::vector<double>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        gram[a][b] = brute_force_ssk(set[a], set[b], params).level(params.p()).to_double();
    const auto ev = ssk::testing::symmetric_eigenvalues(gram);
    CHECK(ev.front() >= -1e-8 * std::max(ev.back(), 0.0));
  }
}

}  // TEST_SUITE
