#pragma once

/**
 * @file recursion.hpp
 * @brief The exact recursion a_1 = x, a_n = x * sum_{r=ceil(n/2)}^{n-1} C(r, n-r) a_r,
 *        evaluated for numeric x, as a polynomial (basic format), and in the
 *        x^r (1+x)^(n-r) basis (binomial format).
 */

#include <map>
#include <vector>

#include "binrec/exact.hpp"

namespace binrec {

/// a_n written as sum over r of xi_r x^r; xi_r counts the arrays with r-1
/// blocks, so every stored coefficient is positive and xi_n = (n-1)!.
struct BasicFormat {
  int n = 0;
  std::map<int, BigInt> xi;  // only nonzero entries
};

/// a_n written as sum over r of prim(n,r) x^r (1+x)^(n-r); prim(n,r) counts
/// the primitive arrays with r-1 blocks.
struct BinomialFormat {
  int n = 0;
  std::map<int, BigInt> prim;  // only nonzero entries
};

/// [a_1, ..., a_n_max] computed exactly. Rejects x = 0 and n_max < 1.
std::vector<BigRational> a_sequence(const BigRational& x, int n_max);

/// The polynomials a_1..a_n_max with x symbolic.
std::vector<BigPolynomial> a_polynomials(int n_max);

BasicFormat basic_format(int n);

/// Change of basis from the basic format, eliminating coefficients from the
/// lowest weight upward exactly as in the worked decomposition of a_6.
/// Throws std::logic_error if an intermediate count turns negative (that
/// would be a bug, not bad input).
BinomialFormat binomial_format(int n);

/// Catalan number C_n with C_1 = 1 (so C_n = C(2n-2, n-1) / n, divided exactly).
BigInt catalan(int n);

/// Narayana-Zidek-Capell numbers N_1 = 1, N_n = sum_{r=ceil(n/2)}^{n-1} N_r;
/// they count the n-signatures.
std::vector<BigInt> nzc_sequence(int n_max);

}  // namespace binrec
