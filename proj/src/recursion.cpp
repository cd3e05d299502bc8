#include "binrec/recursion.hpp"

#include <stdexcept>

namespace binrec {

std::vector<BigRational> a_sequence(const BigRational& x, int n_max) {
  if (x == 0) throw std::invalid_argument("a_sequence: x must be nonzero");
  if (n_max < 1) throw std::invalid_argument("a_sequence: n_max must be >= 1");
  std::vector<BigRational> a(static_cast<std::size_t>(n_max) + 1);
  a[1] = x;
  for (int n = 2; n <= n_max; ++n) {
    BigRational sum(0);
    for (int r = (n + 1) / 2; r <= n - 1; ++r) sum += BigRational(binomial(r, n - r)) * a[r];
    a[n] = x * sum;
  }
  return {a.begin() + 1, a.end()};
}

std::vector<BigPolynomial> a_polynomials(int n_max) {
  if (n_max < 1) throw std::invalid_argument("a_polynomials: n_max must be >= 1");
  std::vector<BigPolynomial> a(static_cast<std::size_t>(n_max) + 1);
  a[1] = BigPolynomial::monomial(1, 1);
  for (int n = 2; n <= n_max; ++n) {
    BigPolynomial sum;
    for (int r = (n + 1) / 2; r <= n - 1; ++r) {
      BigPolynomial term = a[r];
      term.scale(binomial(r, n - r));
      sum += term;
    }
    a[n] = sum.shifted(1);  // multiply by x
  }
  return {a.begin() + 1, a.end()};
}

BasicFormat basic_format(int n) {
  if (n < 1) throw std::invalid_argument("basic_format: n must be >= 1");
  BasicFormat out;
  out.n = n;
  const BigPolynomial poly = a_polynomials(n).back();
  const auto& coeffs = poly.coefficients();
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (coeffs[r] != 0) out.xi[static_cast<int>(r)] = coeffs[r];
  return out;
}

BinomialFormat binomial_format(int n) {
  BasicFormat basic = basic_format(n);
  BinomialFormat out;
  out.n = n;
  // residual[r] starts as xi_r; the lowest surviving coefficient must belong
  // to prim(n,r) alone, so peel that term off and expand x^r (1+x)^(n-r).
  std::vector<BigInt> residual(static_cast<std::size_t>(n) + 1);
  for (const auto& [r, c] : basic.xi) residual[static_cast<std::size_t>(r)] = c;
  for (int r = 0; r <= n; ++r) {
    const BigInt p = residual[static_cast<std::size_t>(r)];
    if (p == 0) continue;
    if (p < 0) throw std::logic_error("binomial_format: negative primitive count");
    for (int j = 0; j <= n - r; ++j)
      residual[static_cast<std::size_t>(r + j)] -= p * binomial(n - r, j);
    out.prim[r] = p;
  }
  return out;
}

BigInt catalan(int n) {
  if (n < 1) throw std::invalid_argument("catalan: n must be >= 1");
  BigInt c;
  mpz_divexact_ui(c.get_mpz_t(), binomial(2 * (n - 1), n - 1).get_mpz_t(),
                  static_cast<unsigned long>(n));
  return c;
}

std::vector<BigInt> nzc_sequence(int n_max) {
  if (n_max < 1) throw std::invalid_argument("nzc_sequence: n_max must be >= 1");
  std::vector<BigInt> nzc(static_cast<std::size_t>(n_max) + 1);
  nzc[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    BigInt sum(0);
    for (int r = (n + 1) / 2; r <= n - 1; ++r) sum += nzc[r];
    nzc[n] = sum;
  }
  return {nzc.begin() + 1, nzc.end()};
}

}  // namespace binrec
