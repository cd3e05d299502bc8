#pragma once

/**
 * @file spectral.hpp
 * @brief The functional-analytic side: S_n embedded as a step function s_n on
 *        [0,1), the integral operators A_n with piecewise-constant kernel
 *        alpha_n, their limit T with kernel kappa(u,v) = x for u >= v and
 *        y = 1+x otherwise, the eigenstructure of T, projection angles onto
 *        the dominant eigenplane, and growth diagnostics for a_n/(n-1)!.
 *
 * Numbers here are doubles; exact rationals cross into floats only at this
 * boundary. Integrals against the weighted inner product
 * <f,g> = int |x/y|^(-2v) f(v) conj(g)(v) dv are evaluated with closed-form
 * antiderivatives per step interval, never by quadrature.
 *
 * Angle convention: theta_n is measured in the weighted norm throughout;
 * orthogonality of the eigenplane and its complement only holds there.
 * Normalization: a_n = (n-1)! * int s_n (the (n-2)! variant floating around
 * the source material does not match the definition of s_n and is ignored).
 */

#include <complex>
#include <string>
#include <vector>

#include "binrec/exact.hpp"
#include "binrec/pattern_dynamics.hpp"

namespace binrec {

/// Step function on [0,1) with uniform breakpoints j/n_intervals.
struct StepFunction {
  int n_intervals = 0;
  std::vector<double> values;

  double operator()(double u) const;
};

/// Continuous piecewise-linear function on [0,1].
struct PiecewiseLinear {
  std::vector<double> breakpoints;
  std::vector<double> node_values;

  double operator()(double u) const;
};

/// s_n(u) = S_n(j)/(n-2)! on [(j-1)/(n-1), j/(n-1)); int s_n = a_n/(n-1)!.
StepFunction embed(const SSequence& s);

/// The same step values as exact rationals, for the commuting-diagram checks.
std::vector<BigRational> embed_exact(const SSequence& s);

/// A_n applied to a step function with n-1 intervals: entry i of the result
/// is (1/(n-1)) * (x * sum_{j<=i} s_j + y * sum_{j>i} s_j).
StepFunction apply_A_n(const StepFunction& s, int n, double x);
std::vector<BigRational> apply_A_n_exact(const std::vector<BigRational>& s, int n,
                                         const BigRational& x);

/// (Tf)(u) = -F(u) + y F(1) - x F(0) for the piecewise-linear primitive F.
PiecewiseLinear apply_T(const StepFunction& s, double x);

/// Exact Lebesgue measure of the staircase region Omega_n where the kernels
/// kappa and alpha_n differ; equals 1/n.
BigRational omega_measure_exact(int n);

/// Hilbert-Schmidt norm of kappa - alpha_n, integrated in double precision
/// on the common refinement of the u- and v-grids (split at the diagonal).
/// Bounds the operator norm of T - A_n.
double hs_norm_gap(int n);

struct OperatorGap {
  BigRational measure;
  double hs_norm = 0.0;
};

OperatorGap operator_gap(int n);

/// lambda_m = -1 / (log|x/y| + (2m+1) pi i), f_m(u) = |x/y|^u e^((2m+1) pi i u).
struct Eigenpair {
  int m = 0;
  std::complex<double> lambda;

  std::complex<double> eigenfunction(double u) const;
  double log_ratio = 0.0;  // log|x/y|
};

struct EigenSystem {
  std::vector<Eigenpair> pairs;
  double lambda_mag = 0.0;  // |lambda_0| = |lambda_{-1}|
  double mu_mag = 0.0;      // |lambda_1| = |lambda_{-2}|
};

/// Rejects x outside (-1, 0): x/y is negative exactly there, which is what
/// makes e^(-1/lambda) = x/y solvable.
EigenSystem eigenpairs(double x, int m_lo, int m_hi);

/// sup over a uniform grid of |T f_m - lambda_m f_m|, with T f_m integrated
/// in closed form.
double eigen_residual(double x, int m, int grid_points);

enum class TrigBasis { kCos, kSin };

/// <s, g> under the weighted inner product, g = |x/y|^v trig((2m+1) pi v).
double weighted_inner(const StepFunction& s, TrigBasis basis, int m, double x);

/// ||s||^2 in the weighted inner product.
double weighted_norm_sq(const StepFunction& s, double x);

/// ||s - c1 g_cos - c2 g_sin||^2 integrated directly (not via Parseval), so
/// it cross-checks the closed-form integrals.
double weighted_dist_sq_to_plane(const StepFunction& s, double c1, double c2, double x);

struct AngleRecord {
  int n = 0;
  double p_norm = 0.0;       // ||P s_n||
  double p_perp_norm = 0.0;  // ||P^perp s_n||
  double theta = 0.0;
  double tan_theta = 0.0;
  double parseval_gap = 0.0;  // relative defect of ||P||^2 + ||P^perp||^2 = ||s||^2
};

struct AngleTrace {
  double x = 0.0;
  std::vector<AngleRecord> records;  // consecutive n
};

/// Exact S-pipeline, embedded per step; angles against the real eigenplane
/// E = span{|x/y|^u cos(pi u), |x/y|^u sin(pi u)}.
AngleTrace angle_trace(const BigRational& x, int n_min, int n_max);

struct RegimeReport {
  double theta_sup = 0.0;    // observed supremum, stands in for the Theta bound
  double n_threshold = 0.0;  // 9 / (cos^2 Theta (lambda-mu)^2)
  int regime_a = 0;          // sqrt(n) sin(theta) >= 3/(lambda-mu): relative decrease
  int regime_b = 0;          // otherwise: absolute bound
  int skipped_precondition = 0;
  int skipped_vacuous = 0;   // regime-b bound has nonpositive denominator
  std::vector<std::string> violations;
};

/// Classifies each step of the trace and checks the decrease guarantees.
/// This is a diagnostic: Theta is the observed angle supremum, not a proved
/// uniform bound.
RegimeReport tan_regime_check(const AngleTrace& trace, double x);

struct GrowthFit {
  double slope = 0.0;      // least-squares slope of log(|a_n|/(n-1)!)
  double predicted = 0.0;  // log lambda
  int points_used = 0;
  bool degenerate = false;
};

/// Fits the decay rate of r_n = |a_n|/(n-1)! over n in [n_lo, n_hi] (indices
/// with r_n = 0 are skipped) and compares with log lambda. Requires
/// x in (-1, 0).
GrowthFit growth_rate(const BigRational& x, int n_lo, int n_hi);

/// ||s_n||_1 / ||s_n||_inf, exact; the shape analysis keeps it away from 0.
BigRational norm_ratio_1_inf(const SSequence& s);

}  // namespace binrec
