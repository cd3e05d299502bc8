// binrec: exact evaluation, enumeration, verification and spectral
// diagnostics for the binomial recursion a_n = x * sum C(r, n-r) a_r.
//
// Exit codes: 0 all good, 1 invariant violation, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binrec/combinatorics.hpp"
#include "binrec/exact.hpp"
#include "binrec/pattern_dynamics.hpp"
#include "binrec/recursion.hpp"
#include "binrec/spectral.hpp"
#include "binrec/verify.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

binrec::BigRational parse_x(const std::string& text) {
  auto x = binrec::parse_rational(text);
  if (!x) throw UsageError("cannot parse rational '" + text + "' (expected p or p/q)");
  if (*x == 0) throw UsageError("x must be nonzero");
  return *x;
}

binrec::BigRational parse_x_open_interval(const std::string& text) {
  auto x = parse_x(text);
  if (!(x > -1 && x < 0)) throw UsageError("x must lie in (-1, 0) for this command");
  return x;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like lo:hi");
  try {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) throw UsageError("range is empty");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("range must look like lo:hi");
  }
}

int env_cap(int fallback) {
  if (const char* cap = std::getenv("BINREC_CAP")) {
    try {
      return std::stoi(cap);
    } catch (const std::exception&) {
      throw UsageError("BINREC_CAP is not an integer");
    }
  }
  return fallback;
}

enum class Format { kTable, kCsv, kJson };

Format parse_format(const std::string& text) {
  if (text == "table") return Format::kTable;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("unknown output format '" + text + "'");
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const std::string& x_text, int n, bool as_float, Format format) {
  const auto x = parse_x(x_text);
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto seq = binrec::a_sequence(x, n);
  if (format == Format::kJson) {
    json rows = json::array();
    for (int i = 1; i <= n; ++i) {
      const auto& a = seq[static_cast<std::size_t>(i) - 1];
      json row{{"n", i}};
      if (as_float)
        row["a_n"] = binrec::to_double(a);
      else
        row["a_n"] = binrec::to_string(a);
      rows.push_back(row);
    }
    std::cout << json{{"command", "compute"},
                      {"params", {{"x", x_text}, {"n", n}, {"float", as_float}}},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  if (format == Format::kCsv) {
    if (as_float)
      std::cout << "n,a_n\n";
    else
      std::cout << "n,a_n_num,a_n_den\n";
    for (int i = 1; i <= n; ++i) {
      const auto& a = seq[static_cast<std::size_t>(i) - 1];
      if (as_float)
        std::cout << i << "," << binrec::to_double(a) << "\n";
      else
        std::cout << i << "," << binrec::to_string(a.get_num()) << ","
                  << binrec::to_string(a.get_den()) << "\n";
    }
    return kExitOk;
  }
  for (int i = 1; i <= n; ++i) {
    const auto& a = seq[static_cast<std::size_t>(i) - 1];
    std::cout << "a_" << i << " = ";
    if (as_float)
      std::cout << binrec::to_double(a);
    else
      std::cout << binrec::to_string(a);
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- formats ---------------------------------------------------------------

int cmd_formats(int n, Format format) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto basic = binrec::basic_format(n);
  const auto binom = binrec::binomial_format(n);
  if (format == Format::kJson) {
    json xi = json::object(), prim = json::object();
    for (const auto& [r, c] : basic.xi) xi[std::to_string(r)] = binrec::to_string(c);
    for (const auto& [r, c] : binom.prim) prim[std::to_string(r)] = binrec::to_string(c);
    std::cout << json{{"command", "formats"},
                      {"params", {{"n", n}}},
                      {"basic", xi},
                      {"binomial", prim}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  if (format == Format::kCsv) {
    std::cout << "format,r,count\n";
    for (const auto& [r, c] : basic.xi) std::cout << "basic," << r << "," << binrec::to_string(c) << "\n";
    for (const auto& [r, c] : binom.prim)
      std::cout << "binomial," << r << "," << binrec::to_string(c) << "\n";
    return kExitOk;
  }
  std::cout << "a_" << n << " basic format (xi_r x^r):\n";
  for (const auto& [r, c] : basic.xi) std::cout << "  r=" << r << "  " << binrec::to_string(c) << "\n";
  std::cout << "a_" << n << " binomial format (prim(n,r) x^r y^(n-r)):\n";
  for (const auto& [r, c] : binom.prim) std::cout << "  r=" << r << "  " << binrec::to_string(c) << "\n";
  return kExitOk;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(int n, const std::string& what, Format format) {
  const int cap = env_cap(binrec::kDefaultPatternCap);
  if (what == "signatures") {
    const auto sigs = binrec::enumerate_signatures(n);
    if (format == Format::kJson) {
      json rows = json::array();
      for (const auto& s : sigs)
        rows.push_back({{"b", s.b}, {"arrays", binrec::to_string(count_arrays(s))}});
      std::cout << json{{"command", "enumerate"},
                        {"params", {{"n", n}, {"what", what}}},
                        {"signatures", rows}}
                       .dump(2)
                << "\n";
      return kExitOk;
    }
    if (format == Format::kCsv) std::cout << "signature,arrays\n";
    for (const auto& s : sigs) {
      std::string tuple;
      for (std::size_t i = 0; i < s.b.size(); ++i)
        tuple += (i ? " " : "") + std::to_string(s.b[i]);
      if (format == Format::kCsv)
        std::cout << '"' << tuple << "\"," << binrec::to_string(count_arrays(s)) << "\n";
      else
        std::cout << "(" << tuple << ")  arrays=" << binrec::to_string(count_arrays(s)) << "\n";
    }
    return kExitOk;
  }
  if (what == "components") {
    std::map<int, long> by_dim;
    binrec::for_each_hypercube_component(
        n, [&](const binrec::HypercubeComponent& c) { ++by_dim[c.dimension]; }, cap);
    if (format == Format::kJson) {
      json hist = json::object();
      for (const auto& [dim, count] : by_dim) hist[std::to_string(dim)] = count;
      std::cout << json{{"command", "enumerate"},
                        {"params", {{"n", n}, {"what", what}}},
                        {"components_by_dimension", hist}}
                       .dump(2)
                << "\n";
      return kExitOk;
    }
    if (format == Format::kCsv) std::cout << "dimension,components\n";
    for (const auto& [dim, count] : by_dim)
      if (format == Format::kCsv)
        std::cout << dim << "," << count << "\n";
      else
        std::cout << "dimension " << dim << ": " << count << " components\n";
    return kExitOk;
  }
  if (what == "patterns") {
    long count = 0;
    binrec::for_each_pattern(
        n,
        [&](const binrec::Pattern& p) {
          ++count;
          if (format == Format::kTable) {
            std::string row;
            for (std::size_t i = 0; i < p.t.size(); ++i) row += (i ? " " : "") + std::to_string(p.t[i]);
            std::cout << row << "\n";
          }
        },
        cap);
    if (format != Format::kTable) std::cout << "patterns," << count << "\n";
    return kExitOk;
  }
  throw UsageError("--what must be signatures, patterns or components");
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const binrec::VerifyOptions& opts, const std::string& x_text, Format format) {
  const auto checks = binrec::run_verify(opts);
  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.passed;
  if (format == Format::kJson) {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    json params{{"x", x_text}, {"seed", opts.seed}};
    if (opts.n > 0) params["n"] = opts.n;
    if (opts.only) params["only"] = *opts.only;
    std::cout << json{{"command", "verify"}, {"params", params}, {"checks", arr}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  }
  if (opts.only && checks.empty()) throw UsageError("unknown check '" + *opts.only + "'");
  return all_ok ? kExitOk : kExitViolation;
}

// ---- shapes ----------------------------------------------------------------

int cmd_shapes(const std::string& x_text, int n_max, Format format) {
  const auto x = parse_x_open_interval(x_text);
  const auto scan = binrec::shape_scan(x, n_max);
  auto locus_str = [](const std::optional<binrec::Locus>& l) {
    return l ? "(" + std::to_string(l->a) + "," + std::to_string(l->b) + ")" : std::string("-");
  };
  if (format == Format::kJson) {
    json rows = json::array(), violations = json::array();
    for (const auto& r : scan.reports) {
      json row{{"n", r.n}, {"zeros", r.zero_count}};
      if (auto l = r.sign_change_locus()) row["sign_change"] = {l->a, l->b};
      if (auto l = r.extreme_locus()) {
        row["extreme"] = {l->a, l->b};
        row["extreme_kind"] =
            r.extremes.front().kind == binrec::ExtremeKind::kMaximum ? "max" : "min";
      }
      if (auto l = r.inflection_locus()) row["inflection"] = {l->a, l->b};
      rows.push_back(row);
    }
    for (const auto& v : scan.violations) violations.push_back({{"n", v.n}, {"what", v.what}});
    std::cout << json{{"command", "shapes"},
                      {"params", {{"x", x_text}, {"n", n_max}}},
                      {"reports", rows},
                      {"violations", violations}}
                     .dump(2)
              << "\n";
  } else {
    if (format == Format::kCsv) std::cout << "n,sign_change,extreme,kind,inflection,zeros\n";
    for (const auto& r : scan.reports) {
      const char* kind = r.extremes.size() == 1
                             ? (r.extremes.front().kind == binrec::ExtremeKind::kMaximum ? "max" : "min")
                             : "-";
      std::cout << r.n << "," << locus_str(r.sign_change_locus()) << ","
                << locus_str(r.extreme_locus()) << "," << kind << ","
                << locus_str(r.inflection_locus()) << "," << r.zero_count << "\n";
    }
    for (const auto& v : scan.violations)
      std::cout << "violation,n=" << v.n << "," << v.what << "\n";
  }
  return scan.violations.empty() ? kExitOk : kExitViolation;
}

// ---- spectral --------------------------------------------------------------

int cmd_spectral(const std::string& x_text, int gap_n, const std::string& trace_range,
                 Format format) {
  const auto x = parse_x_open_interval(x_text);
  const double xd = binrec::to_double(x);
  const auto sys = binrec::eigenpairs(xd, -3, 3);
  const auto gap = binrec::operator_gap(gap_n);

  json out{{"command", "spectral"}, {"params", {{"x", x_text}, {"n", gap_n}}}};
  if (format == Format::kJson) {
    json pairs = json::array();
    for (const auto& p : sys.pairs)
      pairs.push_back({{"m", p.m}, {"re", p.lambda.real()}, {"im", p.lambda.imag()}});
    out["eigenvalues"] = pairs;
    out["lambda"] = sys.lambda_mag;
    out["mu"] = sys.mu_mag;
    out["omega_measure"] = binrec::to_string(gap.measure);
    out["hs_norm"] = gap.hs_norm;
  } else {
    std::cout << "lambda = " << sys.lambda_mag << ", mu = " << sys.mu_mag << "\n";
    for (const auto& p : sys.pairs)
      std::cout << "lambda_" << p.m << " = " << p.lambda.real() << (p.lambda.imag() < 0 ? " - " : " + ")
                << std::abs(p.lambda.imag()) << "i\n";
    std::cout << "measure(Omega_" << gap_n << ") = " << binrec::to_string(gap.measure)
              << ", HS(kappa - alpha_n) = " << gap.hs_norm << "\n";
  }

  if (!trace_range.empty()) {
    const auto [lo, hi] = parse_range(trace_range);
    const auto trace = binrec::angle_trace(x, lo, hi);
    const auto regime = binrec::tan_regime_check(trace, xd);
    if (format == Format::kJson) {
      json rows = json::array();
      for (const auto& r : trace.records)
        rows.push_back({{"n", r.n}, {"theta", r.theta}, {"tan_theta", r.tan_theta}});
      out["trace"] = rows;
      out["regime"] = {{"violations", regime.violations},
                       {"regime_a", regime.regime_a},
                       {"regime_b", regime.regime_b},
                       {"theta_sup", regime.theta_sup}};
    } else {
      std::cout << "n,theta,tan_theta\n";
      for (const auto& r : trace.records)
        std::cout << r.n << "," << r.theta << "," << r.tan_theta << "\n";
      std::cout << "regime check: " << regime.violations.size() << " violations ("
                << regime.regime_a << " relative, " << regime.regime_b << " absolute)\n";
    }
    if (format == Format::kJson) std::cout << out.dump(2) << "\n";
    return regime.violations.empty() ? kExitOk : kExitViolation;
  }
  if (format == Format::kJson) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ---- growth ----------------------------------------------------------------

int cmd_growth(const std::string& x_text, const std::string& range, Format format) {
  const auto x = parse_x_open_interval(x_text);
  const auto [lo, hi] = parse_range(range);
  const auto fit = binrec::growth_rate(x, lo, hi);
  if (fit.degenerate) {
    std::cout << "degenerate fit: only " << fit.points_used << " usable points\n";
    return kExitViolation;
  }
  if (format == Format::kJson) {
    std::cout << json{{"command", "growth"},
                      {"params", {{"x", x_text}, {"range", range}}},
                      {"slope", fit.slope},
                      {"predicted_log_lambda", fit.predicted},
                      {"points", fit.points_used}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "slope,predicted,points\n"
              << fit.slope << "," << fit.predicted << "," << fit.points_used << "\n";
  }
  return kExitOk;
}

// ---- plotdata --------------------------------------------------------------

int cmd_plotdata(const std::string& x_text, int n, const std::string& growth_range) {
  const auto x = parse_x_open_interval(x_text);
  if (!growth_range.empty()) {
    const auto [lo, hi] = parse_range(growth_range);
    const auto trace = binrec::angle_trace(x, lo, hi);
    binrec::SSequence s = binrec::s_sequence(x, std::max(2, lo));
    binrec::BigInt fact = binrec::factorial(static_cast<unsigned long>(s.n) - 1);
    std::cout << "n,theta,tan_theta,log_r\n";
    for (const auto& r : trace.records) {
      while (s.n < r.n) {
        fact *= s.n;
        s = binrec::s_step(s);
      }
      const binrec::BigRational a_n = s.sum();
      const double log_r =
          a_n == 0 ? -std::numeric_limits<double>::infinity()
                   : binrec::log_abs(binrec::BigRational(abs(a_n)) / binrec::BigRational(fact));
      std::cout << r.n << "," << r.theta << "," << r.tan_theta << "," << log_r << "\n";
    }
    return kExitOk;
  }
  if (n < 3) throw UsageError("--n must be >= 3");
  const auto s = binrec::s_sequence(x, n);
  const auto values = binrec::embed_exact(s);
  std::cout << "u,s_n\n";
  for (int j = 1; j <= n - 1; ++j)
    std::cout << static_cast<double>(j) / (n - 1) << ","
              << binrec::to_double(values[static_cast<std::size_t>(j) - 1]) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and spectral pipelines for the binomial recursion a_n"};
  app.require_subcommand(1);

  std::string x_text = "-1/2", format_text = "table", what = "signatures";
  std::string trace_range, growth_range;
  int n = 0;
  bool as_float = false;
  binrec::VerifyOptions vopts;
  std::string only;

  auto* compute = app.add_subcommand("compute", "print a_1..a_n exactly (or as floats)");
  compute->add_option("--x", x_text, "parameter x as p/q")->required();
  compute->add_option("--n", n, "largest index")->required();
  compute->add_flag("--float", as_float, "print doubles instead of rationals");
  compute->add_option("--format", format_text, "table|csv|json");

  auto* formats = app.add_subcommand("formats", "basic and binomial format of a_n");
  formats->add_option("--n", n, "index")->required();
  formats->add_option("--format", format_text, "table|csv|json");

  auto* enumerate = app.add_subcommand("enumerate", "signatures, patterns or components");
  enumerate->add_option("--n", n, "index")->required();
  enumerate->add_option("--what", what, "signatures|patterns|components");
  enumerate->add_option("--format", format_text, "table|csv|json");

  auto* verify = app.add_subcommand("verify", "run the cross-pipeline invariant battery");
  verify->add_option("--x", x_text, "parameter for shape/norm checks");
  verify->add_option("--n", n, "depth override");
  verify->add_option("--only", only, "run a single check");
  verify->add_option("--seed", vopts.seed, "seed for randomized sweeps");
  verify->add_option("--format", format_text, "table|json");

  auto* shapes = app.add_subcommand("shapes", "scan shape laws of S_n for x in (-1,0)");
  shapes->add_option("--x", x_text, "parameter x as p/q")->required();
  shapes->add_option("--n", n, "scan up to this index")->required();
  shapes->add_option("--format", format_text, "table|csv|json");

  auto* spectral = app.add_subcommand("spectral", "eigenstructure, operator gap, angle trace");
  spectral->add_option("--x", x_text, "parameter x as p/q")->required();
  spectral->add_option("--n", n, "operator-gap index")->default_val(100);
  spectral->add_option("--trace", trace_range, "angle trace over lo:hi");
  spectral->add_option("--format", format_text, "table|json");

  auto* growth = app.add_subcommand("growth", "decay-rate fit of |a_n|/(n-1)!");
  growth->add_option("--x", x_text, "parameter x as p/q")->required();
  growth->add_option("--range", growth_range, "fit window lo:hi")->required();
  growth->add_option("--format", format_text, "table|json");

  auto* plotdata = app.add_subcommand("plotdata", "CSV plot data for s_n or spectral sweeps");
  plotdata->add_option("--x", x_text, "parameter x as p/q")->required();
  plotdata->add_option("--n", n, "sequence index for s_n rows");
  plotdata->add_option("--growth", growth_range, "emit (n, theta, tan theta, log r) over lo:hi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(format_text);
    if (compute->parsed()) return cmd_compute(x_text, n, as_float, format);
    if (formats->parsed()) return cmd_formats(n, format);
    if (enumerate->parsed()) return cmd_enumerate(n, what, format);
    if (verify->parsed()) {
      if (!only.empty()) vopts.only = only;
      vopts.x = parse_x(x_text);
      vopts.n = n;
      vopts.pattern_cap = env_cap(binrec::kDefaultPatternCap);
      vopts.path_cap = env_cap(binrec::kDefaultPathCap);
      return cmd_verify(vopts, x_text, format);
    }
    if (shapes->parsed()) return cmd_shapes(x_text, n, format);
    if (spectral->parsed()) return cmd_spectral(x_text, n, trace_range, format);
    if (growth->parsed()) return cmd_growth(x_text, growth_range, format);
    if (plotdata->parsed()) return cmd_plotdata(x_text, n, growth_range);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}
