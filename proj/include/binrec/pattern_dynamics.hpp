#pragma once

/**
 * @file pattern_dynamics.hpp
 * @brief The S_n recursion: S_2(1) = x^2 and
 *        S_{n+1}(r) = x * sum_{j<=r} S_n(j) + y * sum_{j>r} S_n(j), y = 1+x,
 *        with S_{n+1}(n-1) = S_{n+1}(n) (no descent possible at the last
 *        position). Summing S_n recovers a_n, so this is an independent
 *        pipeline for the recursion, and for x in (-1,0) the sequences have a
 *        rigid sinusoidal shape that shape_report/shape_scan verify with
 *        exact rational comparisons.
 *
 * Shape events are plateau-aware loci (a,b): e.g. an up-change means
 * S_n(a) < 0 = ... = 0 < S_n(b) with the zeros optional (b = a+1 when none).
 * The scan covers the auxiliary term S_n(0) = y*a_{n-1} but never the
 * duplicated tail S_n(n-1).
 */

#include <optional>
#include <string>
#include <vector>

#include "binrec/exact.hpp"

namespace binrec {

struct SSequence {
  int n = 0;                        // index, >= 2
  std::vector<BigRational> values;  // S_n(1..n-1); values[r-1] holds S_n(r)
  BigRational aux;                  // S_n(0) = y * a_{n-1}
  BigRational x, y;                 // y = 1 + x

  const BigRational& at(int r) const { return r == 0 ? aux : values[static_cast<std::size_t>(r) - 1]; }
  BigRational sum() const;  // a_n
};

/// S_2 for the given nonzero x.
SSequence s_initial(const BigRational& x);

/// One step of the recursion, computed with prefix sums in O(n).
SSequence s_step(const SSequence& s);

/// Iterates s_step from S_2 up to index n. Rejects x = 0 and n < 2.
SSequence s_sequence(const BigRational& x, int n);

/// Checks S_{n+1}(r) = S_{n+1}(r-1) - S_n(r) for 1 <= r <= n-1 against the
/// independently generated prefix-sum values.
bool finite_difference_check(const SSequence& s_prev, const SSequence& s);

struct Locus {
  int a = 0, b = 0;
  bool operator==(const Locus&) const = default;
};

enum class ChangeKind { kUp, kDown };
enum class ExtremeKind { kMaximum, kMinimum };

struct SignChange {
  Locus locus;
  ChangeKind kind;
};

struct Extreme {
  Locus locus;
  ExtremeKind kind;
  BigRational value;  // the plateau value
};

struct ShapeReport {
  int n = 0;
  std::vector<SignChange> sign_changes;  // n >= 4
  std::vector<Extreme> extremes;         // n >= 5
  std::vector<Locus> inflections;        // n >= 6, detected on S_{n-1}
  int zero_count = 0;                    // zeros among S_n(1..n-2)

  std::optional<Locus> sign_change_locus() const;
  std::optional<Locus> extreme_locus() const;
  std::optional<Locus> inflection_locus() const;
};

/// Scans S_n(0..n-2) with exact comparisons. The discrete-derivative buffer
/// S_{n-1} is reconstructed from the sequence itself when no retained buffer
/// is supplied. Requires x in (-1, 0).
ShapeReport shape_report(const SSequence& s);
ShapeReport shape_report(const SSequence& s, const SSequence& s_prev);

struct ShapeViolation {
  int n = 0;
  std::string what;
};

struct ShapeScanResult {
  std::vector<ShapeReport> reports;      // for 6 <= n <= n_max
  std::vector<ShapeViolation> violations;
};

/// Runs shape_report for 6 <= n <= n_max and checks the shape laws:
/// exactly one sign change / extreme / inflection, maxima positive and
/// minima negative, at most one zero, min or max inside the band spanned by
/// x*a_n and y*a_n, and the endpoint slope conditions tied to the relative
/// order of the extreme and inflection loci.
ShapeScanResult shape_scan(const BigRational& x, int n_max);

}  // namespace binrec
