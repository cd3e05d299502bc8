#include "binrec/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "binrec/pattern_dynamics.hpp"
#include "binrec/recursion.hpp"
#include "binrec/spectral.hpp"

namespace binrec {

namespace {

struct Reporter {
  std::vector<CheckResult>& out;
  const VerifyOptions& opts;

  bool wants(const std::string& name) const { return !opts.only || *opts.only == name; }

  void add(const std::string& name, bool passed, const std::string& detail) {
    out.push_back({name, passed, detail});
  }
};

std::string str(int n) { return std::to_string(n); }

void check_formats(Reporter& rep) {
  // Three-way: pattern enumeration grouped by descents == DP == triangular
  // back-substitution from the basic format.
  const int n_enum = std::min(rep.opts.n > 0 ? rep.opts.n : 10, rep.opts.pattern_cap);
  for (int n = 2; n <= n_enum; ++n) {
    std::map<int, BigInt> by_r;
    for_each_pattern(
        n, [&](const Pattern& p) { by_r[n - descent_count(p)] += 1; }, rep.opts.pattern_cap);
    const auto dp = primitive_counts(n);
    const auto bf = binomial_format(n).prim;
    if (by_r != dp || dp != bf) {
      rep.add("formats", false, "pattern-count mismatch at n=" + str(n));
      return;
    }
  }
  // Evaluation agreement on random rationals.
  const int n_eval = rep.opts.n > 0 ? rep.opts.n : 40;
  std::mt19937_64 rng(rep.opts.seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 24);
  const auto polys = a_polynomials(n_eval);
  std::vector<BinomialFormat> formats;
  for (int n = 1; n <= n_eval; ++n) formats.push_back(binomial_format(n));
  for (int trial = 0; trial < 20; ++trial) {
    BigRational x(num(rng), static_cast<unsigned long>(den(rng)));
    x.canonicalize();
    if (x == 0) continue;
    const auto seq = a_sequence(x, n_eval);
    const BigRational y = x + 1;
    for (int n = 1; n <= n_eval; ++n) {
      const BigRational via_poly = poly_eval(polys[static_cast<std::size_t>(n) - 1], x);
      BigRational via_binomial(0);
      for (const auto& [r, p] : formats[static_cast<std::size_t>(n) - 1].prim) {
        BigRational term(p);
        for (int k = 0; k < r; ++k) term *= x;
        for (int k = 0; k < n - r; ++k) term *= y;
        via_binomial += term;
      }
      if (via_poly != seq[static_cast<std::size_t>(n) - 1] || via_binomial != via_poly) {
        rep.add("formats", false, "evaluation mismatch at n=" + str(n) + ", x=" + to_string(x));
        return;
      }
    }
  }
  rep.add("formats", true,
          "enumeration == dp == back-substitution for n<=" + str(n_enum) +
              "; 20 random x agree up to n=" + str(n_eval));
}

void check_thm2(Reporter& rep) {
  const int n_max = rep.opts.n > 0 ? rep.opts.n : 25;
  const auto seq = a_sequence(BigRational(-1), n_max);
  for (int n = 1; n <= n_max; ++n) {
    BigRational expected(catalan(n));
    if (n % 2 == 1) expected = -expected;
    if (seq[static_cast<std::size_t>(n) - 1] != expected) {
      rep.add("thm2", false, "a_n(-1) != (-1)^n C_n at n=" + str(n));
      return;
    }
  }
  rep.add("thm2", true, "a_n(-1) = (-1)^n C_n for n<=" + str(n_max));
}

void check_nzc(Reporter& rep) {
  const int n_max = rep.opts.n > 0 ? rep.opts.n : 20;
  const auto nzc = nzc_sequence(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const auto sigs = enumerate_signatures(n);
    if (BigInt(static_cast<unsigned long>(sigs.size())) != nzc[static_cast<std::size_t>(n) - 1]) {
      rep.add("nzc", false, "signature count != NZC at n=" + str(n));
      return;
    }
  }
  rep.add("nzc", true, "signature count matches NZC for n<=" + str(n_max));
}

void check_hypercubes(Reporter& rep) {
  const int n_max = std::min(rep.opts.n > 0 ? rep.opts.n : 10, rep.opts.pattern_cap);
  const int n_structural = std::min(n_max, 9);
  for (int n = 2; n <= n_max; ++n) {
    BigInt components(0), arrays(0), canonicals(0), primitives(0);
    bool structural_ok = true;
    for_each_hypercube_component(
        n,
        [&](const HypercubeComponent& c) {
          components += 1;
          arrays += BigInt(1) << c.dimension;
          canonicals += 1;  // one canonical member each
          primitives += 1;
          if (n <= n_structural) {
            try {
              verify_component_structure(c);
            } catch (const std::exception&) {
              structural_ok = false;
            }
          }
        },
        rep.opts.pattern_cap);
    BigInt array_total(0);
    for (const auto& sig : enumerate_signatures(n)) array_total += count_arrays(sig);
    const BigInt fact = factorial(static_cast<unsigned long>(n) - 1);
    if (!structural_ok || components != fact || arrays != array_total ||
        array_total != a_sequence(BigRational(1), n).back()) {
      rep.add("hypercubes", false, "component structure mismatch at n=" + str(n));
      return;
    }
  }
  rep.add("hypercubes", true,
          "components = (n-1)!, array totals agree, structure verified to n=" +
              str(n_structural));
}

void check_lattice(Reporter& rep) {
  const int n_count = std::min(rep.opts.n > 0 ? rep.opts.n : 12, rep.opts.path_cap);
  for (int n = 1; n <= n_count; ++n)
    if (monotone_path_count(n, rep.opts.path_cap) != catalan(n + 1)) {
      rep.add("lattice", false, "path count != C(2n,n)/(n+1) at n=" + str(n));
      return;
    }
  const int n_reflect = std::min(n_count, 10);
  for (int n = 1; n <= n_reflect; ++n) {
    const auto r = reflection_check(n, rep.opts.path_cap);
    if (!r.passed() || r.crossing_count != r.target_count ||
        r.target_count != binomial(2 * n, n - 1)) {
      rep.add("lattice", false, "reflection bijection failed at n=" + str(n));
      return;
    }
  }
  for (int n = 2; n <= n_reflect; ++n) {
    const auto b = nondecreasing_pattern_path_bijection(n, rep.opts.path_cap);
    if (!b.passed() || b.pattern_count != catalan(n)) {
      rep.add("lattice", false, "pattern-path bijection failed at n=" + str(n));
      return;
    }
  }
  rep.add("lattice", true,
          "path counts to n=" + str(n_count) + ", bijections to n=" + str(n_reflect));
}

void check_dynamics(Reporter& rep) {
  const int n_max = rep.opts.n > 0 ? rep.opts.n : 200;
  const std::vector<BigRational> xs = {BigRational(-1, 10), BigRational(-1, 2),
                                       BigRational(-9, 10), BigRational(1), BigRational(-2)};
  for (const auto& x : xs) {
    const auto a = a_sequence(x, n_max);
    SSequence s = s_initial(x);
    for (;;) {
      if (s.sum() != a[static_cast<std::size_t>(s.n) - 1]) {
        rep.add("dynamics", false, "sum S_n != a_n at n=" + str(s.n) + ", x=" + to_string(x));
        return;
      }
      if (s.n >= 3 && s.aux * s.x != s.values.back() * s.y) {
        rep.add("dynamics", false, "endpoint identity failed at n=" + str(s.n));
        return;
      }
      if (s.n >= n_max) break;
      SSequence next = s_step(s);
      if (!finite_difference_check(s, next)) {
        rep.add("dynamics", false, "finite-difference relation failed at n=" + str(next.n));
        return;
      }
      s = std::move(next);
    }
  }
  rep.add("dynamics", true, "sum, endpoint and finite-difference identities hold to n=" + str(n_max));
}

void check_shapes(Reporter& rep) {
  const int n_max = rep.opts.n > 0 ? rep.opts.n : 200;
  const auto scan = shape_scan(rep.opts.x, n_max);
  if (!scan.violations.empty()) {
    std::ostringstream oss;
    oss << scan.violations.size() << " violations; first: n=" << scan.violations.front().n << " "
        << scan.violations.front().what;
    rep.add("shapes", false, oss.str());
    return;
  }
  rep.add("shapes", true,
          "shape laws hold for 6<=n<=" + str(n_max) + " at x=" + to_string(rep.opts.x));
}

void check_operator_gap(Reporter& rep) {
  const int n_max = rep.opts.n > 0 ? rep.opts.n : 1000;
  for (int n = 2; n <= n_max; ++n) {
    if (omega_measure_exact(n) != BigRational(1, static_cast<unsigned long>(n))) {
      rep.add("operator_gap", false, "measure(Omega_n) != 1/n at n=" + str(n));
      return;
    }
  }
  for (int n : {10, 50, 100}) {
    if (hs_norm_gap(n) > 1.0 / std::sqrt(n) + 1e-6) {
      rep.add("operator_gap", false, "HS norm above 1/sqrt(n) at n=" + str(n));
      return;
    }
  }
  rep.add("operator_gap", true, "measure = 1/n for n<=" + str(n_max) + "; HS bound holds");
}

void check_eigen(Reporter& rep) {
  for (double x : {-0.5, -0.1, -0.9}) {
    const double ratio = x / (1.0 + x);
    for (const auto& p : eigenpairs(x, -3, 3).pairs) {
      const std::complex<double> back = std::exp(-1.0 / p.lambda);
      if (std::abs(back - std::complex<double>(ratio, 0.0)) > 1e-12) {
        rep.add("eigen", false, "exp(-1/lambda_m) != x/y at m=" + str(p.m));
        return;
      }
    }
    for (int m : {-2, -1, 0, 1}) {
      if (eigen_residual(x, m, 10000) >= 1e-8) {
        rep.add("eigen", false, "eigen-residual too large at m=" + str(m));
        return;
      }
    }
  }
  rep.add("eigen", true, "eigenvalue equation and residuals verified for three x");
}

void check_norms(Reporter& rep) {
  const int n_max = rep.opts.n > 0 ? rep.opts.n : 120;
  const auto trace = angle_trace(rep.opts.x, 3, n_max);
  for (const auto& r : trace.records) {
    if (r.parseval_gap > 1e-10) {
      rep.add("norms", false, "Parseval audit failed at n=" + str(r.n));
      return;
    }
    const double s = std::sin(r.theta), c = std::cos(r.theta);
    if (std::abs(s * s + c * c - 1.0) > 1e-12) {
      rep.add("norms", false, "angle identity failed at n=" + str(r.n));
      return;
    }
  }
  rep.add("norms", true, "Parseval and angle identities hold to n=" + str(n_max));
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  Reporter rep{results, opts};
  if (rep.wants("formats")) check_formats(rep);
  if (rep.wants("thm2")) check_thm2(rep);
  if (rep.wants("nzc")) check_nzc(rep);
  if (rep.wants("hypercubes")) check_hypercubes(rep);
  if (rep.wants("lattice")) check_lattice(rep);
  if (rep.wants("dynamics")) check_dynamics(rep);
  if (rep.wants("shapes")) check_shapes(rep);
  if (rep.wants("operator_gap")) check_operator_gap(rep);
  if (rep.wants("eigen")) check_eigen(rep);
  if (rep.wants("norms")) check_norms(rep);
  return results;
}

}  // namespace binrec
