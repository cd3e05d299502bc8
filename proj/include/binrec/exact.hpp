#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalar and polynomial arithmetic shared by every pipeline.
 *
 * All exact values are GMP-backed: BigInt is an arbitrary-precision integer,
 * BigRational a fraction kept in lowest terms with positive denominator
 * (gmpxx canonicalizes after every operation). Nothing in this layer ever
 * rounds.
 */

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace binrec {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Pascal triangle of C(n, r), grown lazily and guarded by a mutex so the
/// enumeration pipelines can share one instance across threads.
class BinomialCache {
 public:
  /// C(n, r); returns 0 when r < 0 or r > n.
  BigInt at(long n, long r);

  static BinomialCache& global();

 private:
  void grow_to(std::size_t n);

  std::vector<std::vector<BigInt>> rows_;
  std::mutex mu_;
};

/// C(n, r) through the shared cache. n must be nonnegative.
BigInt binomial(long n, long r);

BigInt factorial(unsigned long n);

/// Dense polynomial in x with integer coefficients, index = degree.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class BigPolynomial {
 public:
  BigPolynomial() = default;
  explicit BigPolynomial(std::vector<BigInt> coeffs);

  static BigPolynomial monomial(BigInt c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(std::size_t k) const;

  BigPolynomial& operator+=(const BigPolynomial& o);
  friend BigPolynomial operator+(BigPolynomial a, const BigPolynomial& b);
  friend BigPolynomial operator*(const BigPolynomial& a, const BigPolynomial& b);
  BigPolynomial& scale(const BigInt& c);
  /// Multiplication by x^k.
  BigPolynomial shifted(std::size_t k) const;

  bool operator==(const BigPolynomial& o) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact Horner evaluation of p at x.
BigRational poly_eval(const BigPolynomial& p, const BigRational& x);

/// Parses "p", "-p/q" etc.; rejects zero denominators and malformed input.
std::optional<BigRational> parse_rational(const std::string& s);

/// Conversion at the float boundary; GMP reduces num/den bit lengths first,
/// so huge components cannot overflow the exponent.
double to_double(const BigRational& q);

/// log|q| computed from mantissa+exponent splits of numerator/denominator;
/// well-defined for rationals far outside double range. q must be nonzero.
double log_abs(const BigRational& q);

std::string to_string(const BigInt& z);
std::string to_string(const BigRational& q);

}  // namespace binrec
