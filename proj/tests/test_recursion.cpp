#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binrec/recursion.hpp"

using namespace binrec;

namespace {

BigRational q(long num, unsigned long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational pow_q(const BigRational& base, int e) {
  BigRational out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("a_sequence at x = 1 reproduces the integer listing") {
  const auto seq = a_sequence(q(1), 7);
  const std::vector<long> expected{1, 1, 2, 7, 34, 214, 1652};
  REQUIRE(seq.size() == 7);
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(seq[i] == expected[i]);
}

TEST_CASE("a_sequence at x = -1 gives alternating Catalan numbers") {
  const auto seq = a_sequence(q(-1), 6);
  const std::vector<long> expected{-1, 1, -2, 5, -14, 42};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(seq[i] == expected[i]);
}

TEST_CASE("a_sequence at x = -1/2, hand-evaluated") {
  // a_1..a_4 = x, x^2, 2x^3, x^3 + 6x^4 evaluated at -1/2.
  const auto seq = a_sequence(q(-1, 2), 4);
  CHECK(seq[0] == q(-1, 2));
  CHECK(seq[1] == q(1, 4));
  CHECK(seq[2] == q(-1, 4));
  CHECK(seq[3] == q(1, 4));
}

TEST_CASE("a_sequence rejects bad input") {
  CHECK_THROWS_AS(a_sequence(q(0), 5), std::invalid_argument);
  CHECK_THROWS_AS(a_sequence(q(1), 0), std::invalid_argument);
}

TEST_CASE("basic_format matches the published expansions") {
  const auto f6 = basic_format(6);
  CHECK(f6.xi == std::map<int, BigInt>{{4, 8}, {5, 86}, {6, 120}});
  CHECK(basic_format(1).xi == std::map<int, BigInt>{{1, 1}});
  CHECK(basic_format(5).xi == std::map<int, BigInt>{{4, 10}, {5, 24}});
  CHECK(basic_format(4).xi == std::map<int, BigInt>{{3, 1}, {4, 6}});
}

TEST_CASE("binomial_format matches the worked decomposition") {
  CHECK(binomial_format(6).prim == std::map<int, BigInt>{{4, 8}, {5, 70}, {6, 42}});
  CHECK(binomial_format(4).prim == std::map<int, BigInt>{{3, 1}, {4, 5}});
  CHECK(binomial_format(2).prim == std::map<int, BigInt>{{2, 1}});
  CHECK(binomial_format(5).prim == std::map<int, BigInt>{{4, 10}, {5, 14}});
}

TEST_CASE("catalan closed formula") {
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 1);
  CHECK(catalan(3) == 2);
  CHECK(catalan(4) == 5);
  CHECK(catalan(7) == 132);
  // against the recurrence C_{n+1} = sum C_k C_{n+1-k}
  for (int n = 2; n <= 25; ++n) {
    BigInt sum(0);
    for (int k = 1; k <= n - 1; ++k) sum += catalan(k) * catalan(n - k);
    CHECK(catalan(n) == sum);
  }
}

TEST_CASE("nzc_sequence") {
  const auto nzc = nzc_sequence(9);
  const std::vector<long> expected{1, 1, 1, 2, 3, 6, 11, 22, 42};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(nzc[i] == expected[i]);
  CHECK(nzc_sequence(1) == std::vector<BigInt>{1});
  CHECK(nzc_sequence(4) == std::vector<BigInt>{1, 1, 1, 2});
}

TEST_CASE("format consistency across pipelines") {
  const int n_max = 25;
  const auto polys = a_polynomials(n_max);
  std::vector<BinomialFormat> formats;
  for (int n = 1; n <= n_max; ++n) formats.push_back(binomial_format(n));

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  int tested = 0;
  while (tested < 12) {
    BigRational x = q(num(rng), static_cast<unsigned long>(den(rng)));
    if (x == 0) continue;
    ++tested;
    const BigRational y = x + 1;
    const auto seq = a_sequence(x, n_max);
    for (int n = 1; n <= n_max; ++n) {
      CHECK(poly_eval(polys[static_cast<std::size_t>(n) - 1], x) ==
            seq[static_cast<std::size_t>(n) - 1]);
      BigRational via_binomial(0);
      for (const auto& [r, p] : formats[static_cast<std::size_t>(n - 1)].prim)
        via_binomial += BigRational(p) * pow_q(x, r) * pow_q(y, n - r);
      CHECK(via_binomial == seq[static_cast<std::size_t>(n) - 1]);
    }
  }
}

TEST_CASE("theorem-2 identity to n = 25") {
  const auto seq = a_sequence(q(-1), 25);
  for (int n = 1; n <= 25; ++n) {
    BigRational expected(catalan(n));
    if (n % 2 == 1) expected = -expected;
    CHECK(seq[static_cast<std::size_t>(n) - 1] == expected);
  }
}

TEST_CASE("factorial lower bounds from the positive-format arguments") {
  // x > 0: every monomial is positive, the top one is (n-1)! x^n.
  for (const auto& x : {q(1), q(2), q(1, 2)}) {
    const auto seq = a_sequence(x, 30);
    for (int n = 4; n <= 30; ++n)
      CHECK(seq[static_cast<std::size_t>(n) - 1] >
            BigRational(factorial(static_cast<unsigned long>(n) - 1)) * pow_q(x, n));
  }
  // x < -1: the binomial format has one sign and |x| > |y|.
  for (const auto& x : {q(-2), q(-3, 2)}) {
    const auto seq = a_sequence(x, 30);
    const BigRational y = x + 1;
    for (int n = 1; n <= 30; ++n)
      CHECK(abs(seq[static_cast<std::size_t>(n) - 1]) >
            BigRational(factorial(static_cast<unsigned long>(n) - 1)) * abs(pow_q(y, n)));
  }
}

TEST_CASE("top coefficients count canonical and primitive-canonical arrays") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(basic_format(n).xi.at(n) == factorial(static_cast<unsigned long>(n) - 1));
    CHECK(binomial_format(n).prim.at(n) == catalan(n));
  }
}

TEST_CASE("basic format coefficients stay in the block-count window") {
  for (int n = 2; n <= 24; ++n) {
    int min_r = 0;
    while ((1 << min_r) < n) ++min_r;  // ceil(log2 n)
    for (const auto& [r, c] : basic_format(n).xi) {
      CHECK(c > 0);
      CHECK(r >= min_r);
      CHECK(r <= n);
    }
    for (const auto& [r, p] : binomial_format(n).prim) {
      CHECK(p >= 0);
      CHECK(r >= min_r);
      CHECK(r <= n);
    }
  }
}

TEST_CASE("primitive counts sum to (n-1)!") {
  for (int n = 1; n <= 20; ++n) {
    BigInt total(0);
    for (const auto& [r, p] : binomial_format(n).prim) total += p;
    CHECK(total == factorial(static_cast<unsigned long>(n) - 1));
  }
}
