#pragma once

/**
 * @file combinatorics.hpp
 * @brief Signatures, towers, arrays, patterns, split/merge and the hypercube
 *        decomposition of the array graph. Everything here enumerates real
 *        objects, so it doubles as the brute-force oracle for the recursion
 *        engine at small n.
 *
 * Conventions: cells of a tower are numbered 1..n-1 from the bottom; a
 * pattern (t_1, ..., t_{n-1}) is read bottom-up and is valid iff t_j <= j.
 * A descent is a location j with t_{j+1} < t_j.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "binrec/exact.hpp"

namespace binrec {

inline constexpr int kDefaultPatternCap = 12;
inline constexpr int kDefaultPathCap = 14;

/// Strictly increasing tuple (b_1, ..., b_s) with b_1 = 1, b_{j+1} <= 2 b_j
/// and b_s < n <= 2 b_s. For n = 1 the tuple is empty.
struct Signature {
  int n = 0;
  std::vector<int> b;

  static bool is_valid(int n, const std::vector<int>& b);
};

/// All n-signatures in lexicographic order; their number is the
/// Narayana-Zidek-Capell number N_n.
std::vector<Signature> enumerate_signatures(int n);

/// Product of C(b_j, b_{j+1} - b_j) over the blocks, with b_{s+1} = n.
BigInt count_arrays(const Signature& s);

struct Pattern {
  std::vector<int> t;  // t[j-1] holds t_j

  int length() const { return static_cast<int>(t.size()); }
  bool valid() const;
  bool operator==(const Pattern& o) const = default;
  bool operator<(const Pattern& o) const { return t < o.t; }
};

/// Streams all (n-1)! valid patterns in lexicographic order without ever
/// materializing the set. Refuses n < 2 or n above the cap.
void for_each_pattern(int n, const std::function<void(const Pattern&)>& fn,
                      int cap = kDefaultPatternCap);

/// Number of locations j with t_{j+1} < t_j.
int descent_count(const Pattern& p);

/// Locations j (1-based) with t_{j+1} < t_j.
std::vector<int> descent_locations(const Pattern& p);

/// A tower filled with numbers: the pattern plus the block structure.
/// block_starts lists the lowest cell of each block, always beginning at 1.
/// Within a block the numbers strictly descend going up and never exceed the
/// block position, which is exactly the array condition; the signature
/// inequality b_{j+1} <= 2 b_j follows from it.
struct ArrayObj {
  Pattern pattern;
  std::vector<int> block_starts;

  /// Validates and constructs; throws std::invalid_argument with the broken
  /// condition spelled out.
  static ArrayObj make(Pattern pattern, std::vector<int> block_starts);

  /// Maximal descending runs as blocks: the unique unmergeable filling.
  static ArrayObj primitive_of(const Pattern& pattern);
  /// Every block a single cell.
  static ArrayObj canonical_of(const Pattern& pattern);

  Signature signature() const;
  int block_count() const { return static_cast<int>(block_starts.size()); }
  bool is_primitive() const;
  bool is_canonical() const;
  bool operator==(const ArrayObj& o) const = default;
};

/// Splits the block containing cell `location` so that a new block starts
/// there. Rejects locations that are already block starts or out of range.
ArrayObj split(const ArrayObj& a, int location);

/// Merges the two blocks adjacent at cell `location` (which must start a
/// block whose numbers run together in descending order with the block
/// below). split and merge at the same location are mutually inverse.
ArrayObj merge(const ArrayObj& a, int location);

/// One connected component of the split/merge graph: a pattern together with
/// its descent locations. The component is a hypercube of this dimension.
struct HypercubeComponent {
  Pattern pattern;
  std::vector<int> descent_locations;
  int dimension = 0;
};

std::vector<HypercubeComponent> hypercube_decomposition(int n, int cap = kDefaultPatternCap);

void for_each_hypercube_component(int n, const std::function<void(const HypercubeComponent&)>& fn,
                                  int cap = kDefaultPatternCap);

/// Walks all 2^dimension members of the component and checks the hypercube
/// structure: every member is a valid array, toggling any descent location
/// is a split/merge involution, and the component has exactly one primitive
/// and one canonical member. Throws std::logic_error on any failure.
void verify_component_structure(const HypercubeComponent& c);

/// Counts valid patterns of length n-1 with exactly n-r descents (that is,
/// primitive arrays with r-1 blocks) by dynamic programming over
/// (position, last value, descents so far). Scales far beyond the
/// enumeration cap.
BigInt primitive_count_dp(int n, int r);

/// All nonzero counts of primitive_count_dp for one n, keyed by r.
std::map<int, BigInt> primitive_counts(int n);

/// Monotone lattice paths as step masks: bit i set means step i moves up.
/// Paths live on (0,0)..(n,n) and "non-crossing" means never entering
/// y > x, i.e. never touching (j, j+1).
///
/// Counts the non-crossing paths by direct enumeration. The total is
/// C(2n,n)/(n+1); in the Catalan indexing used by catalan() that is
/// catalan(n+1). (The worked 3x3 case in the source material shows 5 paths.)
BigInt monotone_path_count(int n, int cap = kDefaultPathCap);

struct ReflectionCheck {
  int n = 0;
  BigInt noncrossing_count;
  BigInt crossing_count;
  BigInt target_count;  // all monotone paths to (n-1, n+1)
  bool images_distinct = false;
  bool images_cover_target = false;
  bool roundtrip_identity = false;

  bool passed() const { return images_distinct && images_cover_target && roundtrip_identity; }
};

/// Verifies the reflection bijection behind the path count: reflecting a
/// crossing path at its first touch of y = x+1 lands on a path to
/// (n-1, n+1), bijectively.
ReflectionCheck reflection_check(int n, int cap = kDefaultPathCap);

struct PatternPathBijectionCheck {
  int n = 0;
  BigInt pattern_count;
  bool roundtrip_identity = false;
  bool images_are_noncrossing_paths = false;

  bool passed() const { return roundtrip_identity && images_are_noncrossing_paths; }
};

/// Nondecreasing valid patterns of length n-1 <-> non-crossing monotone
/// paths to (n-1, n-1): subtract 1 from each entry and read the results as
/// heights of the horizontal steps. Round-trips identically; the common
/// count is catalan(n).
PatternPathBijectionCheck nondecreasing_pattern_path_bijection(int n, int cap = kDefaultPathCap);

}  // namespace binrec
