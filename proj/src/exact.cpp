#include "binrec/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace binrec {

BigInt BinomialCache::at(long n, long r) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(static_cast<std::size_t>(n));
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

void BinomialCache::grow_to(std::size_t n) {
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(rows_.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t r = 1; r + 1 < row.size(); ++r) row[r] = prev[r - 1] + prev[r];
    rows_.push_back(std::move(row));
  }
}

BinomialCache& BinomialCache::global() {
  static BinomialCache cache;
  return cache;
}

BigInt binomial(long n, long r) { return BinomialCache::global().at(n, r); }

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigPolynomial::BigPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BigPolynomial BigPolynomial::monomial(BigInt c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return BigPolynomial(std::move(coeffs));
}

BigInt BigPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

void BigPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigPolynomial& BigPolynomial::operator+=(const BigPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

BigPolynomial operator+(BigPolynomial a, const BigPolynomial& b) {
  a += b;
  return a;
}

BigPolynomial operator*(const BigPolynomial& a, const BigPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  return BigPolynomial(std::move(out));
}

BigPolynomial& BigPolynomial::scale(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

BigPolynomial BigPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : BigPolynomial{};
  std::vector<BigInt> out(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return BigPolynomial(std::move(out));
}

BigRational poly_eval(const BigPolynomial& p, const BigRational& x) {
  BigRational acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

std::optional<BigRational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_set_str accepts the "p/q" syntax but is lenient about whitespace;
  // pre-validate so CLI input errors surface as parse failures.
  std::size_t slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) return std::nullopt;
  } else {
    if (!is_int(s.substr(0, slash)) || !is_int(s.substr(slash + 1))) return std::nullopt;
  }
  BigRational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;  // "p/0"
  q.canonicalize();
  return q;
}

double to_double(const BigRational& q) { return mpq_get_d(q.get_mpq_t()); }

double log_abs(const BigRational& q) {
  if (q == 0) throw std::domain_error("log_abs: zero argument");
  long num_exp = 0, den_exp = 0;
  double num_m = mpz_get_d_2exp(&num_exp, q.get_num().get_mpz_t());
  double den_m = mpz_get_d_2exp(&den_exp, q.get_den().get_mpz_t());
  return std::log(std::fabs(num_m)) - std::log(den_m) +
         std::log(2.0) * static_cast<double>(num_exp - den_exp);
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace binrec
