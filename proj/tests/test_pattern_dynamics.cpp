#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binrec/pattern_dynamics.hpp"
#include "binrec/recursion.hpp"

using namespace binrec;

namespace {

BigRational q(long num, unsigned long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("initial sequence S_2") {
  const auto s = s_initial(q(-1, 2));
  CHECK(s.n == 2);
  CHECK(s.values == std::vector<BigRational>{q(1, 4)});
  CHECK(s.aux == q(-1, 4));  // y * a_1
  CHECK_THROWS_AS(s_initial(q(0)), std::invalid_argument);
}

TEST_CASE("hand-computed steps at x = -1/2") {
  const auto s2 = s_initial(q(-1, 2));
  const auto s3 = s_step(s2);
  CHECK(s3.values == std::vector<BigRational>{q(-1, 8), q(-1, 8)});
  CHECK(s3.aux == q(1, 8));
  CHECK(s3.sum() == q(-1, 4));  // a_3 = 2x^3

  const auto s4 = s_step(s3);
  CHECK(s4.values == std::vector<BigRational>{q(0), q(1, 8), q(1, 8)});
  CHECK(s4.aux == q(-1, 8));
  CHECK(s4.sum() == q(1, 4));  // a_4 = x^3 + 6x^4

  // finite differences: 1/8 = 0 - (-1/8)
  CHECK(finite_difference_check(s3, s4));
  CHECK(finite_difference_check(s2, s3));
}

TEST_CASE("x = 1 step") {
  const auto s3 = s_sequence(q(1), 3);
  CHECK(s3.values == std::vector<BigRational>{q(1), q(1)});
  CHECK(s3.sum() == q(2));
}

TEST_CASE("s_sequence input contract") {
  CHECK_THROWS_AS(s_sequence(q(0), 5), std::invalid_argument);
  CHECK_THROWS_AS(s_sequence(q(1), 1), std::invalid_argument);
}

TEST_CASE("sum of S_n recovers a_n across parameters") {
  for (const auto& x : {q(-1, 10), q(-1, 2), q(-9, 10), q(1), q(-2), q(-3, 4)}) {
    const auto a = a_sequence(x, 60);
    SSequence s = s_initial(x);
    for (;;) {
      CHECK(s.sum() == a[static_cast<std::size_t>(s.n) - 1]);
      if (s.n >= 60) break;
      s = s_step(s);
    }
  }
}

TEST_CASE("endpoint identities and tail duplication") {
  for (const auto& x : {q(-1, 2), q(-9, 10), q(2, 3)}) {
    const auto a = a_sequence(x, 40);
    SSequence s = s_sequence(x, 3);
    while (s.n <= 40) {
      const auto& a_prev = a[static_cast<std::size_t>(s.n) - 2];
      CHECK(s.aux == s.y * a_prev);
      CHECK(s.values.back() == s.x * a_prev);
      CHECK(s.values[s.values.size() - 1] == s.values[s.values.size() - 2]);
      CHECK(s.aux * s.x == s.values.back() * s.y);
      if (s.n == 40) break;
      s = s_step(s);
    }
  }
}

TEST_CASE("finite differences hold along the whole pipeline") {
  for (const auto& x : {q(-3, 4), q(-1, 4), q(-9, 10)}) {
    SSequence s = s_initial(x);
    while (s.n < 50) {
      SSequence next = s_step(s);
      CHECK(finite_difference_check(s, next));
      s = std::move(next);
    }
  }
}

TEST_CASE("shape_report on the n = 4 hand values") {
  const auto s4 = s_sequence(q(-1, 2), 4);
  const auto report = shape_report(s4);
  REQUIRE(report.sign_changes.size() == 1);
  CHECK(report.sign_changes.front().locus == Locus{0, 2});  // plateau over the zero at r = 1
  CHECK(report.sign_changes.front().kind == ChangeKind::kUp);
  CHECK(report.extremes.empty());
  CHECK(report.inflections.empty());
  CHECK(report.zero_count == 1);
}

TEST_CASE("shape_report contract") {
  CHECK_THROWS_AS(shape_report(s_sequence(q(1, 2), 6)), std::domain_error);
  const auto s6 = s_sequence(q(-1, 2), 6);
  const auto s5 = s_sequence(q(-1, 2), 5);
  // retained-buffer and reconstructed-buffer reports agree
  const auto r1 = shape_report(s6);
  const auto r2 = shape_report(s6, s5);
  CHECK(r1.sign_changes.size() == r2.sign_changes.size());
  CHECK(r1.extremes.size() == r2.extremes.size());
  CHECK(r1.inflections.size() == r2.inflections.size());
}

TEST_CASE("shape laws at x = -1/2 up to n = 120") {
  const auto scan = shape_scan(q(-1, 2), 120);
  if (!scan.violations.empty())
    MESSAGE("first violation: n=", scan.violations.front().n, " ", scan.violations.front().what);
  CHECK(scan.violations.empty());
  REQUIRE(scan.reports.size() == 115);
  for (const auto& r : scan.reports) {
    CHECK(r.sign_changes.size() == 1);
    CHECK(r.extremes.size() == 1);
    CHECK(r.inflections.size() == 1);
    CHECK(r.zero_count <= 1);
    const auto& e = r.extremes.front();
    if (e.kind == ExtremeKind::kMaximum) CHECK(e.value > 0);
    if (e.kind == ExtremeKind::kMinimum) CHECK(e.value < 0);
  }
}

TEST_CASE("shape laws at the other tested parameters") {
  CHECK(shape_scan(q(-1, 10), 80).violations.empty());
  CHECK(shape_scan(q(-9, 10), 80).violations.empty());
  CHECK_THROWS_AS(shape_scan(q(-2), 50), std::domain_error);
}

TEST_CASE("n = 16 matches the plotted sample: one change, one extreme") {
  const auto s = s_sequence(q(-1, 2), 16);
  const auto report = shape_report(s);
  CHECK(report.sign_changes.size() == 1);
  CHECK(report.extremes.size() == 1);
  CHECK(report.inflections.size() == 1);
}
