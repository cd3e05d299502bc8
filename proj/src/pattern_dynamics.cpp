#include "binrec/pattern_dynamics.hpp"

#include <stdexcept>
#include <utility>

namespace binrec {

BigRational SSequence::sum() const {
  BigRational total(0);
  for (const auto& v : values) total += v;
  return total;
}

SSequence s_initial(const BigRational& x) {
  if (x == 0) throw std::invalid_argument("s_initial: x must be nonzero");
  SSequence s;
  s.n = 2;
  s.x = x;
  s.y = x + 1;
  s.values = {x * x};
  s.aux = s.y * x;  // y * a_1
  return s;
}

SSequence s_step(const SSequence& s) {
  const int n = s.n;
  SSequence next;
  next.n = n + 1;
  next.x = s.x;
  next.y = s.y;
  next.values.resize(static_cast<std::size_t>(n));

  const BigRational total = s.sum();
  BigRational prefix(0);
  for (int r = 1; r <= n - 1; ++r) {
    prefix += s.values[static_cast<std::size_t>(r) - 1];
    next.values[static_cast<std::size_t>(r) - 1] = s.x * prefix + s.y * (total - prefix);
  }
  next.values[static_cast<std::size_t>(n) - 1] = next.values[static_cast<std::size_t>(n) - 2];
  next.aux = s.y * total;
  return next;
}

SSequence s_sequence(const BigRational& x, int n) {
  if (n < 2) throw std::invalid_argument("s_sequence: n must be >= 2");
  SSequence s = s_initial(x);
  while (s.n < n) s = s_step(s);
  return s;
}

bool finite_difference_check(const SSequence& s_prev, const SSequence& s) {
  if (s.n != s_prev.n + 1) throw std::invalid_argument("finite_difference_check: indices not consecutive");
  for (int r = 1; r <= s_prev.n - 1; ++r)
    if (s.at(r) != s.at(r - 1) - s_prev.at(r)) return false;
  return true;
}

std::optional<Locus> ShapeReport::sign_change_locus() const {
  if (sign_changes.size() != 1) return std::nullopt;
  return sign_changes.front().locus;
}

std::optional<Locus> ShapeReport::extreme_locus() const {
  if (extremes.size() != 1) return std::nullopt;
  return extremes.front().locus;
}

std::optional<Locus> ShapeReport::inflection_locus() const {
  if (inflections.size() != 1) return std::nullopt;
  return inflections.front().locus;
}

namespace {

int sign_of(const BigRational& q) { return sgn(q); }

// V[i] = S_n(i) for 0 <= i <= n-2 (the auxiliary term plus the sequence
// without its duplicated tail); W likewise for S_{n-1}.
ShapeReport make_report(int n, const std::vector<BigRational>& V, const std::vector<BigRational>& W) {
  ShapeReport report;
  report.n = n;
  const int m = n - 2;

  if (n >= 4) {
    int prev_nonzero = -1;
    for (int i = 0; i <= m; ++i) {
      const int s = sign_of(V[static_cast<std::size_t>(i)]);
      if (s == 0) continue;
      if (prev_nonzero >= 0) {
        const int ps = sign_of(V[static_cast<std::size_t>(prev_nonzero)]);
        if (ps != s)
          report.sign_changes.push_back(
              {Locus{prev_nonzero, i}, s > 0 ? ChangeKind::kUp : ChangeKind::kDown});
      }
      prev_nonzero = i;
    }
  }

  if (n >= 5) {
    // Plateaus live strictly inside [1, m]: the locus (a, b) needs a >= 1
    // and b <= m, so a run starting at index i has its left comparator at
    // i-1 >= 1.
    int i = 2;
    while (i <= m - 1) {
      if (V[static_cast<std::size_t>(i)] == V[static_cast<std::size_t>(i) - 1]) {
        ++i;
        continue;
      }
      int k = i;
      while (k + 1 <= m - 1 && V[static_cast<std::size_t>(k) + 1] == V[static_cast<std::size_t>(i)]) ++k;
      if (k + 1 <= m) {
        const auto& left = V[static_cast<std::size_t>(i) - 1];
        const auto& mid = V[static_cast<std::size_t>(i)];
        const auto& right = V[static_cast<std::size_t>(k) + 1];
        if (left < mid && right < mid)
          report.extremes.push_back({Locus{i - 1, k + 1}, ExtremeKind::kMaximum, mid});
        else if (left > mid && right > mid)
          report.extremes.push_back({Locus{i - 1, k + 1}, ExtremeKind::kMinimum, mid});
      }
      i = k + 1;
    }
  }

  if (n >= 6) {
    // An inflection of S_n is a one-signed bump or dip of the discrete
    // derivative S_{n-1}, with locus window 1 <= a < b-2 <= n-4.
    int i = 3;
    while (i <= m - 1) {
      if (W[static_cast<std::size_t>(i)] == W[static_cast<std::size_t>(i) - 1]) {
        ++i;
        continue;
      }
      int k = i;
      while (k + 1 <= m - 1 && W[static_cast<std::size_t>(k) + 1] == W[static_cast<std::size_t>(i)]) ++k;
      if (k + 1 <= m) {
        const auto& left = W[static_cast<std::size_t>(i) - 1];
        const auto& mid = W[static_cast<std::size_t>(i)];
        const auto& right = W[static_cast<std::size_t>(k) + 1];
        if (left > 0 && left < mid && right < mid && right > 0)
          report.inflections.push_back(Locus{i - 2, k + 1});
        else if (left < 0 && left > mid && right > mid && right < 0)
          report.inflections.push_back(Locus{i - 2, k + 1});
      }
      i = k + 1;
    }
  }

  for (int r = 1; r <= m; ++r)
    if (V[static_cast<std::size_t>(r)] == 0) ++report.zero_count;
  return report;
}

std::vector<BigRational> scan_values(const SSequence& s) {
  std::vector<BigRational> V;
  V.reserve(static_cast<std::size_t>(s.n) - 1);
  for (int i = 0; i <= s.n - 2; ++i) V.push_back(s.at(i));
  return V;
}

void require_shape_domain(const SSequence& s) {
  if (!(s.x > -1 && s.x < 0))
    throw std::domain_error("shape detection is only defined for x in (-1, 0)");
  if (s.n < 3) throw std::invalid_argument("shape_report: n must be >= 3");
}

}  // namespace

ShapeReport shape_report(const SSequence& s) {
  require_shape_domain(s);
  // Reconstruct the discrete derivative: S_{n-1}(r) = S_n(r-1) - S_n(r),
  // and S_{n-1}(0) = (y/x) * S_{n-1}(n-2).
  std::vector<BigRational> W(static_cast<std::size_t>(s.n) - 1);
  for (int r = 1; r <= s.n - 2; ++r) W[static_cast<std::size_t>(r)] = s.at(r - 1) - s.at(r);
  W[0] = s.y * W[static_cast<std::size_t>(s.n) - 2] / s.x;
  return make_report(s.n, scan_values(s), W);
}

ShapeReport shape_report(const SSequence& s, const SSequence& s_prev) {
  require_shape_domain(s);
  if (s_prev.n != s.n - 1) throw std::invalid_argument("shape_report: buffers not consecutive");
  return make_report(s.n, scan_values(s), scan_values(s_prev));
}

namespace {

void check_shape_laws(const SSequence& s, const SSequence& prev, const ShapeReport& report,
                      std::vector<ShapeViolation>& out) {
  const int n = s.n;
  auto flag = [&](const std::string& what) { out.push_back({n, what}); };

  if (report.sign_changes.size() != 1)
    flag("expected exactly one sign change, found " + std::to_string(report.sign_changes.size()));
  if (report.extremes.size() != 1)
    flag("expected exactly one extreme, found " + std::to_string(report.extremes.size()));
  if (report.inflections.size() != 1)
    flag("expected exactly one inflection, found " + std::to_string(report.inflections.size()));

  for (const auto& e : report.extremes) {
    if (e.kind == ExtremeKind::kMaximum && !(e.value > 0)) flag("maximum with nonpositive value");
    if (e.kind == ExtremeKind::kMinimum && !(e.value < 0)) flag("minimum with nonnegative value");
  }

  if (report.zero_count > 1)
    flag("found " + std::to_string(report.zero_count) + " zeros");

  // Band check: min or max of S_n(1..n-1) between x*a_n and y*a_n.
  const BigRational a_n = s.sum();
  BigRational lo = s.x * a_n, hi = s.y * a_n;
  if (lo > hi) std::swap(lo, hi);
  BigRational vmin = s.values.front(), vmax = s.values.front();
  for (const auto& v : s.values) {
    if (v < vmin) vmin = v;
    if (v > vmax) vmax = v;
  }
  const bool min_in = (lo <= vmin && vmin <= hi);
  const bool max_in = (lo <= vmax && vmax <= hi);
  if (!min_in && !max_in) flag("neither extreme value lies between x*a_n and y*a_n");

  if (report.extremes.size() == 1 && report.inflections.size() == 1) {
    const int a = report.extremes.front().locus.a;
    const int c = report.inflections.front().a;
    const bool is_max = report.extremes.front().kind == ExtremeKind::kMaximum;
    const auto& w0 = prev.at(0);
    const auto& w1 = prev.at(1);
    const auto& w2 = prev.at(2);
    bool ok;
    if (is_max)
      ok = (a <= c) ? (w0 <= w1 && w1 <= w2 && w2 < 0) : (0 > w0 && w0 >= w1 && w1 >= w2);
    else
      ok = (a <= c) ? (w0 >= w1 && w1 >= w2 && w2 > 0) : (0 < w0 && w0 <= w1 && w1 <= w2);
    if (!ok) flag("endpoint slope condition violated");
  }
}

}  // namespace

ShapeScanResult shape_scan(const BigRational& x, int n_max) {
  if (!(x > -1 && x < 0)) throw std::domain_error("shape_scan: x must lie in (-1, 0)");
  ShapeScanResult result;
  if (n_max < 6) return result;
  SSequence prev = s_sequence(x, 5);
  SSequence cur = s_step(prev);
  for (;;) {
    ShapeReport report = shape_report(cur, prev);
    check_shape_laws(cur, prev, report, result.violations);
    result.reports.push_back(std::move(report));
    if (cur.n >= n_max) break;
    prev = std::move(cur);
    cur = s_step(prev);
  }
  return result;
}

}  // namespace binrec
