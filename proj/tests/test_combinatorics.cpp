#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "binrec/combinatorics.hpp"
#include "binrec/recursion.hpp"

using namespace binrec;

TEST_CASE("signature validity and enumeration") {
  CHECK(enumerate_signatures(2).size() == 1);
  CHECK(enumerate_signatures(2).front().b == std::vector<int>{1});

  // hand enumeration for n = 5: tuples with b_{j+1} <= 2 b_j
  const auto sigs5 = enumerate_signatures(5);
  REQUIRE(sigs5.size() == 3);
  std::set<std::vector<int>> got;
  for (const auto& s : sigs5) got.insert(s.b);
  CHECK(got == std::set<std::vector<int>>{{1, 2, 3}, {1, 2, 3, 4}, {1, 2, 4}});

  // lexicographic order
  for (std::size_t i = 1; i < sigs5.size(); ++i) CHECK(sigs5[i - 1].b < sigs5[i].b);

  CHECK(enumerate_signatures(6).size() == 6);  // the six towers

  // counts match the Narayana-Zidek-Capell sequence
  const auto nzc = nzc_sequence(18);
  for (int n = 1; n <= 18; ++n)
    CHECK(BigInt(static_cast<unsigned long>(enumerate_signatures(n).size())) ==
          nzc[static_cast<std::size_t>(n) - 1]);

  CHECK(Signature::is_valid(1, {}));
  CHECK(!Signature::is_valid(5, {1, 2}));    // 5 > 2*2
  CHECK(!Signature::is_valid(5, {1, 3}));    // 3 > 2*1
  CHECK(!Signature::is_valid(5, {2, 3}));    // must start at 1
}

TEST_CASE("count_arrays on the worked 6-signature products") {
  CHECK(count_arrays({6, {1, 2, 3, 4}}) == 36);
  CHECK(count_arrays({6, {1, 2, 3, 5}}) == 30);
  CHECK(count_arrays({6, {1, 2, 4, 5}}) == 20);
  CHECK(count_arrays({5, {1, 2, 3}}) == 6);
  CHECK(count_arrays({1, {}}) == 1);
  CHECK_THROWS_AS(count_arrays({5, {1, 2}}), std::invalid_argument);
}

TEST_CASE("total array count equals a_n at x = 1") {
  for (int n = 1; n <= 12; ++n) {
    BigInt total(0);
    for (const auto& s : enumerate_signatures(n)) total += count_arrays(s);
    CHECK(total == a_sequence(BigRational(1), n).back());
  }
}

TEST_CASE("pattern enumeration") {
  std::vector<Pattern> p3;
  for_each_pattern(3, [&](const Pattern& p) { p3.push_back(p); });
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].t == std::vector<int>{1, 1});
  CHECK(p3[1].t == std::vector<int>{1, 2});

  long count4 = 0, count5 = 0;
  for_each_pattern(4, [&](const Pattern&) { ++count4; });
  for_each_pattern(5, [&](const Pattern&) { ++count5; });
  CHECK(count4 == 6);
  CHECK(count5 == 24);

  CHECK_THROWS_AS(for_each_pattern(13, [](const Pattern&) {}), std::invalid_argument);
  CHECK(Pattern{{1, 2, 3}}.valid());
  CHECK(!Pattern{{2, 1}}.valid());
  CHECK(!Pattern{{1, 0}}.valid());
}

TEST_CASE("descent statistics") {
  CHECK(descent_count(Pattern{{1, 2, 1, 4, 2}}) == 2);
  CHECK(descent_count(Pattern{{1, 2, 3, 4}}) == 0);
  CHECK(descent_count(Pattern{{1, 1, 2, 2, 1}}) == 1);
  CHECK(descent_locations(Pattern{{1, 2, 1, 4, 2}}) == std::vector<int>{2, 4});
}

TEST_CASE("arrays, splits and merges") {
  const Pattern p{{1, 2, 1, 4, 2}};
  const ArrayObj prim = ArrayObj::primitive_of(p);
  CHECK(prim.block_starts == std::vector<int>{1, 2, 4});
  CHECK(prim.is_primitive());
  CHECK(!prim.is_canonical());

  const ArrayObj canon = ArrayObj::canonical_of(p);
  CHECK(canon.is_canonical());
  CHECK(canon.block_count() == 5);
  // canonical arrays admit no split anywhere
  for (int loc = 2; loc <= 5; ++loc) CHECK_THROWS_AS(split(canon, loc), std::invalid_argument);

  // the primitive array of this pattern admits no merge
  for (int loc = 2; loc <= 5; ++loc) CHECK_THROWS_AS(merge(prim, loc), std::invalid_argument);

  // its two splits commute and generate the 4-element square
  const ArrayObj s3 = split(prim, 3);
  const ArrayObj s5 = split(prim, 5);
  const ArrayObj s35 = split(s3, 5);
  CHECK(split(s5, 3) == s35);
  CHECK(s35.is_canonical());
  std::set<std::vector<int>> members{prim.block_starts, s3.block_starts, s5.block_starts,
                                     s35.block_starts};
  CHECK(members.size() == 4);

  // split and merge at the same location are mutually inverse
  CHECK(merge(s3, 3) == prim);
  CHECK(merge(s5, 5) == prim);
  CHECK(merge(merge(s35, 3), 5) == prim);

  // signature of the primitive array
  CHECK(prim.signature().b == std::vector<int>{1, 2, 4});
  CHECK(Signature::is_valid(6, prim.signature().b));

  CHECK_THROWS_AS(ArrayObj::make(p, {1, 3, 4}), std::invalid_argument);  // cell 3 breaks descent
  CHECK_THROWS_AS(ArrayObj::make(p, {2, 4}), std::invalid_argument);     // must start at 1
  CHECK_THROWS_AS(ArrayObj::make(Pattern{{1, 2}}, {1}), std::invalid_argument);  // 2 > position 1
}

TEST_CASE("splits commute in general and reach the canonical array") {
  std::mt19937_64 rng(11);
  for_each_pattern(7, [&](const Pattern& p) {
    ArrayObj a = ArrayObj::primitive_of(p);
    const int steps = p.length() - a.block_count();
    // two random legal splits commute
    std::vector<int> splittable;
    for (int loc = 2; loc <= p.length(); ++loc)
      if (!std::binary_search(a.block_starts.begin(), a.block_starts.end(), loc))
        splittable.push_back(loc);
    if (splittable.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, splittable.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      if (i != j)
        CHECK(split(split(a, splittable[i]), splittable[j]) ==
              split(split(a, splittable[j]), splittable[i]));
    }
    // repeated splitting hits the canonical array in (#cells - #blocks) steps
    int made = 0;
    while (!a.is_canonical()) {
      for (int loc = 2; loc <= p.length(); ++loc)
        if (!std::binary_search(a.block_starts.begin(), a.block_starts.end(), loc)) {
          a = split(a, loc);
          ++made;
          break;
        }
    }
    CHECK(made == steps);
    CHECK(a == ArrayObj::canonical_of(p));
  });
}

TEST_CASE("hypercube decomposition of G_6") {
  const auto components = hypercube_decomposition(6);
  CHECK(components.size() == 120);  // (n-1)!
  std::map<int, int> by_dim;
  BigInt arrays(0);
  for (const auto& c : components) {
    ++by_dim[c.dimension];
    arrays += BigInt(1) << c.dimension;
  }
  CHECK(by_dim[2] == 8);
  CHECK(by_dim[1] == 70);
  CHECK(by_dim[0] == 42);
  CHECK(arrays == 214);  // 8 + 86 + 120 arrays in basic-format counting

  const auto one = hypercube_decomposition(2);
  REQUIRE(one.size() == 1);
  CHECK(one.front().dimension == 0);
}

TEST_CASE("component structure: 2^l members, unique primitive and canonical") {
  for (int n = 2; n <= 8; ++n) {
    BigInt components(0);
    for_each_hypercube_component(n, [&](const HypercubeComponent& c) {
      components += 1;
      verify_component_structure(c);
      // dimension = (n-1) - #blocks of the primitive member
      CHECK(c.dimension == n - 1 - ArrayObj::primitive_of(c.pattern).block_count());
    });
    CHECK(components == factorial(static_cast<unsigned long>(n) - 1));
  }
}

TEST_CASE("hypercube contributions rebuild a_n as a polynomial identity") {
  for (int n = 2; n <= 10; ++n) {
    // sum over patterns of x^(n-l) (1+x)^l, accumulated by descent count
    std::map<int, long> by_descents;
    for_each_pattern(n, [&](const Pattern& p) { ++by_descents[descent_count(p)]; });
    const BigPolynomial one_plus_x({1, 1});
    BigPolynomial total;
    for (const auto& [l, count] : by_descents) {
      BigPolynomial term = BigPolynomial::monomial(count, static_cast<std::size_t>(n - l));
      for (int k = 0; k < l; ++k) term = term * one_plus_x;
      total += term;
    }
    CHECK(total == a_polynomials(n).back());
  }
}

TEST_CASE("primitive-count DP against enumeration and back-substitution") {
  for (int n = 2; n <= 9; ++n) {
    std::map<int, BigInt> by_r;
    for_each_pattern(n, [&](const Pattern& p) { by_r[n - descent_count(p)] += 1; });
    CHECK(primitive_counts(n) == by_r);
  }
  for (int n = 1; n <= 40; ++n) CHECK(primitive_counts(n) == binomial_format(n).prim);
  CHECK(primitive_count_dp(6, 5) == 70);
  CHECK(primitive_count_dp(6, 6) == 42);
  CHECK(primitive_count_dp(6, 3) == 0);
  for (int n = 1; n <= 15; ++n) CHECK(primitive_count_dp(n, n) == catalan(n));
}

TEST_CASE("monotone path counts") {
  CHECK(monotone_path_count(1) == 1);
  CHECK(monotone_path_count(2) == 2);
  CHECK(monotone_path_count(3) == 5);  // the five 3x3 paths of the figure
  // closed formula C(2n,n)/(n+1), i.e. catalan(n+1)
  for (int n = 1; n <= 11; ++n) CHECK(monotone_path_count(n) == catalan(n + 1));
  CHECK_THROWS_AS(monotone_path_count(15), std::invalid_argument);
}

TEST_CASE("reflection bijection") {
  for (int n = 1; n <= 9; ++n) {
    const auto r = reflection_check(n);
    CHECK(r.passed());
    CHECK(r.noncrossing_count == catalan(n + 1));
    CHECK(r.crossing_count == r.target_count);
    CHECK(r.target_count == binomial(2 * n, n - 1));
  }
  const auto r5 = reflection_check(5);
  CHECK(r5.noncrossing_count == 42);
  CHECK(r5.crossing_count == binomial(10, 5) - 42);
}

TEST_CASE("nondecreasing patterns <-> non-crossing paths") {
  const auto b4 = nondecreasing_pattern_path_bijection(4);
  CHECK(b4.passed());
  CHECK(b4.pattern_count == 5);

  const auto b2 = nondecreasing_pattern_path_bijection(2);
  CHECK(b2.passed());
  CHECK(b2.pattern_count == 1);

  const auto b6 = nondecreasing_pattern_path_bijection(6);
  CHECK(b6.passed());
  CHECK(b6.pattern_count == 42);

  for (int n = 2; n <= 10; ++n) {
    const auto b = nondecreasing_pattern_path_bijection(n);
    CHECK(b.passed());
    CHECK(b.pattern_count == catalan(n));
  }
}
