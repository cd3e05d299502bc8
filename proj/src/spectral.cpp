#include "binrec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace binrec {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_interval(double x, const char* who) {
  if (!(x > -1.0 && x < 0.0))
    throw std::domain_error(std::string(who) + ": x must lie in (-1, 0)");
}

double log_ratio_xy(double x) { return std::log(-x / (1.0 + x)); }

// Antiderivative building blocks evaluated over [v0, v1].
double int_exp(double a, double v0, double v1) {
  if (a == 0.0) return v1 - v0;
  return (std::exp(a * v1) - std::exp(a * v0)) / a;
}

double int_exp_cos(double a, double b, double v0, double v1) {
  if (b == 0.0) return int_exp(a, v0, v1);
  const double d = a * a + b * b;
  auto F = [&](double v) { return std::exp(a * v) * (a * std::cos(b * v) + b * std::sin(b * v)) / d; };
  return F(v1) - F(v0);
}

double int_exp_sin(double a, double b, double v0, double v1) {
  if (b == 0.0) return 0.0;
  const double d = a * a + b * b;
  auto F = [&](double v) { return std::exp(a * v) * (a * std::sin(b * v) - b * std::cos(b * v)) / d; };
  return F(v1) - F(v0);
}

double int_cos(double b, double v0, double v1) {
  if (b == 0.0) return v1 - v0;
  return (std::sin(b * v1) - std::sin(b * v0)) / b;
}

double int_sin(double b, double v0, double v1) {
  if (b == 0.0) return 0.0;
  return (std::cos(b * v0) - std::cos(b * v1)) / b;
}

double int_cos_cos(double b1, double b2, double v0, double v1) {
  return 0.5 * (int_cos(b1 - b2, v0, v1) + int_cos(b1 + b2, v0, v1));
}

double int_sin_sin(double b1, double b2, double v0, double v1) {
  return 0.5 * (int_cos(b1 - b2, v0, v1) - int_cos(b1 + b2, v0, v1));
}

double int_sin_cos(double b1, double b2, double v0, double v1) {
  return 0.5 * (int_sin(b1 + b2, v0, v1) + int_sin(b1 - b2, v0, v1));
}

}  // namespace

double StepFunction::operator()(double u) const {
  if (n_intervals <= 0) return 0.0;
  int j = static_cast<int>(u * n_intervals);
  j = std::clamp(j, 0, n_intervals - 1);
  return values[static_cast<std::size_t>(j)];
}

double PiecewiseLinear::operator()(double u) const {
  if (breakpoints.empty()) return 0.0;
  if (u <= breakpoints.front()) return node_values.front();
  if (u >= breakpoints.back()) return node_values.back();
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), u);
  const std::size_t hi = static_cast<std::size_t>(it - breakpoints.begin());
  const double u0 = breakpoints[hi - 1], u1 = breakpoints[hi];
  const double w = (u - u0) / (u1 - u0);
  return node_values[hi - 1] * (1.0 - w) + node_values[hi] * w;
}

std::vector<BigRational> embed_exact(const SSequence& s) {
  if (s.n < 2) throw std::invalid_argument("embed: n must be >= 2");
  const BigRational scale =
      BigRational(1) / BigRational(factorial(static_cast<unsigned long>(s.n) - 2));
  std::vector<BigRational> out;
  out.reserve(s.values.size());
  for (const auto& v : s.values) out.push_back(v * scale);
  return out;
}

StepFunction embed(const SSequence& s) {
  StepFunction f;
  f.n_intervals = s.n - 1;
  for (const auto& v : embed_exact(s)) f.values.push_back(to_double(v));
  return f;
}

StepFunction apply_A_n(const StepFunction& s, int n, double x) {
  if (s.n_intervals != n - 1)
    throw std::invalid_argument("apply_A_n: step function must have n-1 intervals");
  const double y = 1.0 + x;
  double total = 0.0;
  for (double v : s.values) total += v;
  StepFunction out;
  out.n_intervals = n;
  out.values.resize(static_cast<std::size_t>(n));
  double prefix = 0.0;
  for (int i = 1; i <= n; ++i) {
    if (i <= n - 1) prefix += s.values[static_cast<std::size_t>(i) - 1];
    out.values[static_cast<std::size_t>(i) - 1] = (x * prefix + y * (total - prefix)) / (n - 1);
  }
  return out;
}

std::vector<BigRational> apply_A_n_exact(const std::vector<BigRational>& s, int n,
                                         const BigRational& x) {
  if (static_cast<int>(s.size()) != n - 1)
    throw std::invalid_argument("apply_A_n_exact: need n-1 values");
  const BigRational y = x + 1;
  BigRational total(0);
  for (const auto& v : s) total += v;
  std::vector<BigRational> out(static_cast<std::size_t>(n));
  BigRational prefix(0);
  const BigRational inv(1, static_cast<unsigned long>(n - 1));
  for (int i = 1; i <= n; ++i) {
    if (i <= n - 1) prefix += s[static_cast<std::size_t>(i) - 1];
    out[static_cast<std::size_t>(i) - 1] = (x * prefix + y * (total - prefix)) * inv;
  }
  return out;
}

PiecewiseLinear apply_T(const StepFunction& s, double x) {
  const int m = s.n_intervals;
  const double y = 1.0 + x;
  // F is the primitive of s with F(0) = 0; Tf = -F(u) + y F(1).
  std::vector<double> F(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 1; j <= m; ++j)
    F[static_cast<std::size_t>(j)] =
        F[static_cast<std::size_t>(j) - 1] + s.values[static_cast<std::size_t>(j) - 1] / m;
  PiecewiseLinear out;
  out.breakpoints.resize(static_cast<std::size_t>(m) + 1);
  out.node_values.resize(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    out.breakpoints[static_cast<std::size_t>(j)] = static_cast<double>(j) / m;
    out.node_values[static_cast<std::size_t>(j)] = -F[static_cast<std::size_t>(j)] + y * F[static_cast<std::size_t>(m)];
  }
  return out;
}

BigRational omega_measure_exact(int n) {
  if (n < 2) throw std::invalid_argument("omega_measure_exact: n must be >= 2");
  // Omega_n = union over cells with i >= j of the part above the diagonal.
  // Area of {u < v} within [u0,u1] x [v0,v1]:
  //   integrate clamp(v - u0, 0, u1 - u0) over [v0, v1].
  BigRational total(0);
  for (int j = 1; j <= n - 1; ++j) {
    const BigRational v0(j - 1, static_cast<unsigned long>(n - 1));
    const BigRational v1(j, static_cast<unsigned long>(n - 1));
    for (int i = j; i <= n; ++i) {
      const BigRational u0(i - 1, static_cast<unsigned long>(n));
      if (u0 >= v1) break;  // cells only move right; no overlap from here on
      const BigRational u1(i, static_cast<unsigned long>(n));
      BigRational c1 = std::max(v0, std::min(v1, u0));
      BigRational c2 = std::max(v0, std::min(v1, u1));
      total += ((c2 - u0) * (c2 - u0) - (c1 - u0) * (c1 - u0)) / 2 + (v1 - c2) * (u1 - u0);
    }
  }
  return total;
}

double hs_norm_gap(int n) {
  if (n < 2) throw std::invalid_argument("hs_norm_gap: n must be >= 2");
  // (kappa - alpha_n)^2 is the indicator of Omega_n, so the squared HS norm
  // is the same cell-by-cell area sum, here accumulated in double.
  double total = 0.0;
  for (int j = 1; j <= n - 1; ++j) {
    const double v0 = static_cast<double>(j - 1) / (n - 1);
    const double v1 = static_cast<double>(j) / (n - 1);
    for (int i = j; i <= n; ++i) {
      const double u0 = static_cast<double>(i - 1) / n;
      if (u0 >= v1) break;
      const double u1 = static_cast<double>(i) / n;
      const double c1 = std::max(v0, std::min(v1, u0));
      const double c2 = std::max(v0, std::min(v1, u1));
      total += 0.5 * ((c2 - u0) * (c2 - u0) - (c1 - u0) * (c1 - u0)) + (v1 - c2) * (u1 - u0);
    }
  }
  return std::sqrt(total);
}

OperatorGap operator_gap(int n) { return {omega_measure_exact(n), hs_norm_gap(n)}; }

std::complex<double> Eigenpair::eigenfunction(double u) const {
  return std::exp(std::complex<double>(log_ratio * u, (2 * m + 1) * kPi * u));
}

EigenSystem eigenpairs(double x, int m_lo, int m_hi) {
  require_open_interval(x, "eigenpairs");
  if (m_lo > m_hi) throw std::invalid_argument("eigenpairs: empty index range");
  const double c = log_ratio_xy(x);
  EigenSystem sys;
  for (int m = m_lo; m <= m_hi; ++m) {
    Eigenpair p;
    p.m = m;
    p.lambda = -1.0 / std::complex<double>(c, (2 * m + 1) * kPi);
    p.log_ratio = c;
    sys.pairs.push_back(p);
  }
  sys.lambda_mag = 1.0 / std::hypot(c, kPi);
  sys.mu_mag = 1.0 / std::hypot(c, 3 * kPi);
  return sys;
}

double eigen_residual(double x, int m, int grid_points) {
  require_open_interval(x, "eigen_residual");
  if (grid_points < 2) throw std::invalid_argument("eigen_residual: need at least 2 grid points");
  const double c = log_ratio_xy(x);
  const double y = 1.0 + x;
  const std::complex<double> rate(c, (2 * m + 1) * kPi);
  const std::complex<double> lambda = -1.0 / rate;
  auto f = [&](double u) { return std::exp(rate * u); };
  auto F = [&](double u) { return std::exp(rate * u) / rate; };
  const std::complex<double> tail = y * F(1.0) - x * F(0.0);
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double u = static_cast<double>(i) / (grid_points - 1);
    worst = std::max(worst, std::abs(-F(u) + tail - lambda * f(u)));
  }
  return worst;
}

double weighted_inner(const StepFunction& s, TrigBasis basis, int m, double x) {
  require_open_interval(x, "weighted_inner");
  // weight |x/y|^(-2v) times basis |x/y|^v leaves e^(-c v).
  const double c = log_ratio_xy(x);
  const double b = (2 * m + 1) * kPi;
  double acc = 0.0;
  for (int j = 0; j < s.n_intervals; ++j) {
    const double v0 = static_cast<double>(j) / s.n_intervals;
    const double v1 = static_cast<double>(j + 1) / s.n_intervals;
    const double piece = basis == TrigBasis::kCos ? int_exp_cos(-c, b, v0, v1)
                                                  : int_exp_sin(-c, b, v0, v1);
    acc += s.values[static_cast<std::size_t>(j)] * piece;
  }
  return acc;
}

double weighted_norm_sq(const StepFunction& s, double x) {
  require_open_interval(x, "weighted_norm_sq");
  const double c = log_ratio_xy(x);
  double acc = 0.0;
  for (int j = 0; j < s.n_intervals; ++j) {
    const double v0 = static_cast<double>(j) / s.n_intervals;
    const double v1 = static_cast<double>(j + 1) / s.n_intervals;
    const double v = s.values[static_cast<std::size_t>(j)];
    acc += v * v * int_exp(-2.0 * c, v0, v1);
  }
  return acc;
}

double weighted_dist_sq_to_plane(const StepFunction& s, double c1, double c2, double x) {
  require_open_interval(x, "weighted_dist_sq_to_plane");
  const double c = log_ratio_xy(x);
  const double b = kPi;
  double acc = 0.0;
  for (int j = 0; j < s.n_intervals; ++j) {
    const double v0 = static_cast<double>(j) / s.n_intervals;
    const double v1 = static_cast<double>(j + 1) / s.n_intervals;
    const double v = s.values[static_cast<std::size_t>(j)];
    acc += v * v * int_exp(-2.0 * c, v0, v1);
    acc -= 2.0 * v * (c1 * int_exp_cos(-c, b, v0, v1) + c2 * int_exp_sin(-c, b, v0, v1));
    acc += c1 * c1 * int_cos_cos(b, b, v0, v1) + c2 * c2 * int_sin_sin(b, b, v0, v1) +
           2.0 * c1 * c2 * int_sin_cos(b, b, v0, v1);
  }
  return acc;
}

AngleTrace angle_trace(const BigRational& x, int n_min, int n_max) {
  if (!(x > -1 && x < 0)) throw std::domain_error("angle_trace: x must lie in (-1, 0)");
  if (n_min < 3) n_min = 3;
  if (n_max < n_min) throw std::invalid_argument("angle_trace: empty range");
  const double xd = to_double(x);
  AngleTrace trace;
  trace.x = xd;
  SSequence s = s_sequence(x, n_min);
  for (;;) {
    const StepFunction f = embed(s);
    const double sc = weighted_inner(f, TrigBasis::kCos, 0, xd);
    const double ss = weighted_inner(f, TrigBasis::kSin, 0, xd);
    // basis norms^2 are 1/2 each, so projection coefficients are 2<,>
    const double p_sq = 2.0 * (sc * sc + ss * ss);
    const double norm_sq = weighted_norm_sq(f, xd);
    const double perp_sq = weighted_dist_sq_to_plane(f, 2.0 * sc, 2.0 * ss, xd);
    AngleRecord rec;
    rec.n = s.n;
    rec.p_norm = std::sqrt(std::max(0.0, p_sq));
    rec.p_perp_norm = std::sqrt(std::max(0.0, perp_sq));
    rec.theta = std::atan2(rec.p_perp_norm, rec.p_norm);
    rec.tan_theta = rec.p_norm > 0 ? rec.p_perp_norm / rec.p_norm
                                   : std::numeric_limits<double>::infinity();
    rec.parseval_gap = norm_sq > 0 ? std::abs(p_sq + perp_sq - norm_sq) / norm_sq : 0.0;
    trace.records.push_back(rec);
    if (s.n >= n_max) break;
    s = s_step(s);
  }
  return trace;
}

RegimeReport tan_regime_check(const AngleTrace& trace, double x) {
  require_open_interval(x, "tan_regime_check");
  const EigenSystem sys = eigenpairs(x, 0, 1);
  const double lambda = sys.lambda_mag, mu = sys.mu_mag;
  RegimeReport report;
  for (const auto& rec : trace.records) report.theta_sup = std::max(report.theta_sup, rec.theta);
  const double cos_sup = std::cos(report.theta_sup);
  report.n_threshold = 9.0 / (cos_sup * cos_sup * (lambda - mu) * (lambda - mu));
  const double shift = 9.0 / ((lambda - mu) * (lambda - mu));

  for (std::size_t i = 0; i + 1 < trace.records.size(); ++i) {
    const auto& cur = trace.records[i];
    const auto& nxt = trace.records[i + 1];
    if (nxt.n != cur.n + 1) throw std::invalid_argument("tan_regime_check: trace must be consecutive");
    const double n = cur.n;
    if (n <= report.n_threshold) {
      ++report.skipped_precondition;
      continue;
    }
    if (std::sqrt(n) * std::sin(cur.theta) >= 3.0 / (lambda - mu)) {
      ++report.regime_a;
      if (!(nxt.tan_theta < cur.tan_theta))
        report.violations.push_back("n=" + std::to_string(cur.n) +
                                    ": no relative decrease of tan(theta)");
    } else {
      const double denom = lambda * std::sqrt(n - shift) - 1.0;
      if (denom <= 0.0) {
        ++report.skipped_vacuous;
        continue;
      }
      ++report.regime_b;
      const double bound = (3.0 * mu / (lambda - mu) + 1.0) / denom;
      if (!(nxt.tan_theta < bound))
        report.violations.push_back("n=" + std::to_string(cur.n) +
                                    ": tan(theta) above the absolute bound");
    }
  }
  return report;
}

GrowthFit growth_rate(const BigRational& x, int n_lo, int n_hi) {
  if (!(x > -1 && x < 0)) throw std::domain_error("growth_rate: x must lie in (-1, 0)");
  if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("growth_rate: bad range");
  GrowthFit fit;
  fit.predicted = std::log(eigenpairs(to_double(x), 0, 0).lambda_mag);

  std::vector<double> ns, logs;
  SSequence s = s_sequence(x, 2);
  BigInt fact(1);  // (n-1)!
  while (s.n <= n_hi) {
    if (s.n >= n_lo) {
      const BigRational a_n = s.sum();
      if (a_n != 0) {
        const BigRational r = abs(a_n) / BigRational(fact);
        ns.push_back(s.n);
        logs.push_back(log_abs(r));
      }
    }
    fact *= s.n;  // advance to n!
    s = s_step(s);
  }
  fit.points_used = static_cast<int>(ns.size());
  if (fit.points_used < 2) {
    fit.degenerate = true;
    return fit;
  }
  double mean_n = 0, mean_l = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    mean_n += ns[i];
    mean_l += logs[i];
  }
  mean_n /= fit.points_used;
  mean_l /= fit.points_used;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sxx += (ns[i] - mean_n) * (ns[i] - mean_n);
    sxy += (ns[i] - mean_n) * (logs[i] - mean_l);
  }
  fit.slope = sxy / sxx;
  return fit;
}

BigRational norm_ratio_1_inf(const SSequence& s) {
  BigRational sum_abs(0), max_abs(0);
  for (const auto& v : s.values) {
    const BigRational a = abs(v);
    sum_abs += a;
    if (a > max_abs) max_abs = a;
  }
  if (max_abs == 0) throw std::domain_error("norm_ratio_1_inf: zero sequence");
  return sum_abs / (BigRational(s.n - 1) * max_abs);
}

}  // namespace binrec
