#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binrec/exact.hpp"

using namespace binrec;

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (int n = 1; n <= 60; ++n)
    for (int r = 0; r <= n; ++r)
      CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("binomial against multiplicative closed form") {
  BigInt expected;
  for (int n = 0; n <= 40; ++n)
    for (int r = 0; r <= n; ++r) {
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(r));
      CHECK(binomial(n, r) == expected);
    }
}

TEST_CASE("poly_eval on the published expansions") {
  // a_4 = x^3 + 6 x^4 at x = -1 gives 5
  const BigPolynomial a4({0, 0, 0, 1, 6});
  CHECK(poly_eval(a4, BigRational(-1)) == 5);

  CHECK(poly_eval(BigPolynomial{}, BigRational(7, 3)) == 0);

  // a_6 = 8 x^4 + 86 x^5 + 120 x^6 at x = -1 gives 42
  const BigPolynomial a6({0, 0, 0, 0, 8, 86, 120});
  CHECK(poly_eval(a6, BigRational(-1)) == 42);
}

TEST_CASE("polynomial arithmetic is exact under evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> pc(static_cast<std::size_t>(deg(rng)) + 1);
    std::vector<BigInt> qc(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : pc) c = coeff(rng);
    for (auto& c : qc) c = coeff(rng);
    const BigPolynomial p(pc), q(qc);
    BigRational x(num(rng), static_cast<unsigned long>(den(rng)));
    x.canonicalize();
    CHECK(poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x));
    CHECK(poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x));
  }
}

TEST_CASE("polynomial trimming and degree") {
  CHECK(BigPolynomial({0, 1, 0, 0}).degree() == 1);
  CHECK(BigPolynomial({0}).is_zero());
  CHECK(BigPolynomial::monomial(0, 5).is_zero());
  CHECK(BigPolynomial::monomial(3, 2).coeff(2) == 3);
  CHECK((BigPolynomial({1, 1}) * BigPolynomial({1, 1})) == BigPolynomial({1, 2, 1}));
}

TEST_CASE("parse_rational") {
  CHECK(*parse_rational("3/4") == BigRational(3, 4));
  CHECK(*parse_rational("-1/2") == BigRational(-1, 2));
  CHECK(*parse_rational("6/4") == BigRational(3, 2));  // canonicalized
  CHECK(*parse_rational("17") == 17);
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("a/b"));
  CHECK(!parse_rational("1.5"));
  CHECK(!parse_rational("1/2/3"));
}

TEST_CASE("float boundary conversions") {
  CHECK(to_double(BigRational(1, 2)) == 0.5);
  // huge numerator and denominator must not overflow on the way to double
  const BigRational big(factorial(400), factorial(399));
  CHECK(to_double(big) == doctest::Approx(400.0));
  CHECK(log_abs(BigRational(factorial(300), factorial(300) * 2)) ==
        doctest::Approx(-std::log(2.0)));
  // value far below double range still has a finite log
  const BigRational tiny(BigInt(1), factorial(300));
  CHECK(log_abs(tiny) == doctest::Approx(-1414.9).epsilon(0.01));
  CHECK_THROWS_AS(log_abs(BigRational(0)), std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}
