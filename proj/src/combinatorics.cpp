#include "binrec/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace binrec {

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

void check_cap(int n, int cap, const char* who) {
  if (n > cap)
    reject(std::string(who) + ": n = " + std::to_string(n) + " exceeds enumeration cap " +
           std::to_string(cap));
}

}  // namespace

bool Signature::is_valid(int n, const std::vector<int>& b) {
  if (n < 1) return false;
  if (n == 1) return b.empty();
  if (b.empty() || b.front() != 1) return false;
  for (std::size_t j = 0; j + 1 < b.size(); ++j)
    if (b[j + 1] <= b[j] || b[j + 1] > 2 * b[j]) return false;
  return b.back() < n && n <= 2 * b.back();
}

std::vector<Signature> enumerate_signatures(int n) {
  if (n < 1) reject("enumerate_signatures: n must be >= 1");
  std::vector<Signature> out;
  if (n == 1) {
    out.push_back({1, {}});
    return out;
  }
  std::vector<int> b{1};
  // Emitting each prefix before its extensions yields lexicographic order.
  std::function<void()> dfs = [&]() {
    const int last = b.back();
    if (n <= 2 * last) out.push_back({n, b});
    const int hi = std::min(2 * last, n - 1);
    for (int v = last + 1; v <= hi; ++v) {
      b.push_back(v);
      dfs();
      b.pop_back();
    }
  };
  dfs();
  return out;
}

BigInt count_arrays(const Signature& s) {
  if (!Signature::is_valid(s.n, s.b)) reject("count_arrays: invalid signature");
  BigInt product(1);
  for (std::size_t j = 0; j < s.b.size(); ++j) {
    const int next = (j + 1 < s.b.size()) ? s.b[j + 1] : s.n;
    product *= binomial(s.b[j], next - s.b[j]);
  }
  return product;
}

bool Pattern::valid() const {
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t[j] < 1 || t[j] > static_cast<int>(j) + 1) return false;
  return true;
}

void for_each_pattern(int n, const std::function<void(const Pattern&)>& fn, int cap) {
  if (n < 2) reject("for_each_pattern: n must be >= 2");
  check_cap(n, cap, "for_each_pattern");
  Pattern p;
  p.t.assign(static_cast<std::size_t>(n) - 1, 1);
  // Odometer over t_j in [1, j]; rightmost digit turns fastest.
  for (;;) {
    fn(p);
    int j = n - 2;
    while (j >= 0 && p.t[static_cast<std::size_t>(j)] == j + 1) {
      p.t[static_cast<std::size_t>(j)] = 1;
      --j;
    }
    if (j < 0) break;
    ++p.t[static_cast<std::size_t>(j)];
  }
}

int descent_count(const Pattern& p) {
  int count = 0;
  for (std::size_t j = 1; j < p.t.size(); ++j)
    if (p.t[j] < p.t[j - 1]) ++count;
  return count;
}

std::vector<int> descent_locations(const Pattern& p) {
  std::vector<int> locs;
  for (std::size_t j = 1; j < p.t.size(); ++j)
    if (p.t[j] < p.t[j - 1]) locs.push_back(static_cast<int>(j));
  return locs;
}

ArrayObj ArrayObj::make(Pattern pattern, std::vector<int> block_starts) {
  const int len = pattern.length();
  if (len < 1) reject("ArrayObj: empty pattern");
  if (!pattern.valid()) reject("ArrayObj: pattern entry exceeds its position");
  if (block_starts.empty() || block_starts.front() != 1)
    reject("ArrayObj: first block must start at cell 1");
  for (std::size_t i = 0; i < block_starts.size(); ++i) {
    if (block_starts[i] < 1 || block_starts[i] > len) reject("ArrayObj: block start out of range");
    if (i > 0 && block_starts[i] <= block_starts[i - 1])
      reject("ArrayObj: block starts must increase");
  }
  for (std::size_t i = 0; i < block_starts.size(); ++i) {
    const int start = block_starts[i];
    const int end = (i + 1 < block_starts.size()) ? block_starts[i + 1] : len + 1;
    if (pattern.t[static_cast<std::size_t>(start) - 1] > start)
      reject("ArrayObj: block value " + std::to_string(pattern.t[start - 1]) +
             " exceeds block position " + std::to_string(start));
    for (int c = start + 1; c < end; ++c)
      if (pattern.t[static_cast<std::size_t>(c) - 1] >= pattern.t[static_cast<std::size_t>(c) - 2])
        reject("ArrayObj: numbers in the block at position " + std::to_string(start) +
               " do not descend at cell " + std::to_string(c));
  }
  ArrayObj a;
  a.pattern = std::move(pattern);
  a.block_starts = std::move(block_starts);
  return a;
}

ArrayObj ArrayObj::primitive_of(const Pattern& pattern) {
  std::vector<int> starts{1};
  for (std::size_t j = 1; j < pattern.t.size(); ++j)
    if (pattern.t[j] >= pattern.t[j - 1]) starts.push_back(static_cast<int>(j) + 1);
  return make(pattern, std::move(starts));
}

ArrayObj ArrayObj::canonical_of(const Pattern& pattern) {
  std::vector<int> starts(pattern.t.size());
  for (std::size_t i = 0; i < starts.size(); ++i) starts[i] = static_cast<int>(i) + 1;
  return make(pattern, std::move(starts));
}

Signature ArrayObj::signature() const { return Signature{pattern.length() + 1, block_starts}; }

bool ArrayObj::is_primitive() const {
  for (std::size_t i = 1; i < block_starts.size(); ++i) {
    const int s = block_starts[i];
    if (pattern.t[static_cast<std::size_t>(s) - 1] < pattern.t[static_cast<std::size_t>(s) - 2])
      return false;  // mergeable boundary
  }
  return true;
}

bool ArrayObj::is_canonical() const { return block_count() == pattern.length(); }

ArrayObj split(const ArrayObj& a, int location) {
  if (location < 2 || location > a.pattern.length())
    reject("split: location " + std::to_string(location) + " out of range");
  if (std::binary_search(a.block_starts.begin(), a.block_starts.end(), location))
    reject("split: cell " + std::to_string(location) + " already starts a block");
  std::vector<int> starts = a.block_starts;
  starts.insert(std::upper_bound(starts.begin(), starts.end(), location), location);
  return ArrayObj::make(a.pattern, std::move(starts));
}

ArrayObj merge(const ArrayObj& a, int location) {
  if (location < 2 || location > a.pattern.length())
    reject("merge: location " + std::to_string(location) + " out of range");
  if (!std::binary_search(a.block_starts.begin(), a.block_starts.end(), location))
    reject("merge: no block starts at cell " + std::to_string(location));
  if (a.pattern.t[static_cast<std::size_t>(location) - 1] >=
      a.pattern.t[static_cast<std::size_t>(location) - 2])
    reject("merge: numbers do not descend across the boundary at cell " +
           std::to_string(location));
  std::vector<int> starts = a.block_starts;
  starts.erase(std::find(starts.begin(), starts.end(), location));
  return ArrayObj::make(a.pattern, std::move(starts));
}

void for_each_hypercube_component(int n, const std::function<void(const HypercubeComponent&)>& fn,
                                  int cap) {
  for_each_pattern(
      n,
      [&](const Pattern& p) {
        HypercubeComponent c;
        c.pattern = p;
        c.descent_locations = descent_locations(p);
        c.dimension = static_cast<int>(c.descent_locations.size());
        fn(c);
      },
      cap);
}

std::vector<HypercubeComponent> hypercube_decomposition(int n, int cap) {
  std::vector<HypercubeComponent> out;
  for_each_hypercube_component(
      n, [&](const HypercubeComponent& c) { out.push_back(c); }, cap);
  return out;
}

void verify_component_structure(const HypercubeComponent& c) {
  const int len = c.pattern.length();
  const int dim = c.dimension;
  if (dim > 30) throw std::logic_error("verify_component_structure: dimension too large");

  // Boundaries at non-descents are forced; descent locations carry the free
  // hypercube coordinates.
  std::vector<int> forced{1};
  for (int j = 1; j < len; ++j)
    if (c.pattern.t[static_cast<std::size_t>(j)] >= c.pattern.t[static_cast<std::size_t>(j) - 1])
      forced.push_back(j + 1);

  auto member = [&](unsigned mask) {
    std::vector<int> starts = forced;
    for (int i = 0; i < dim; ++i)
      if (mask & (1u << i)) starts.push_back(c.descent_locations[static_cast<std::size_t>(i)] + 1);
    std::sort(starts.begin(), starts.end());
    return ArrayObj::make(c.pattern, std::move(starts));
  };

  int primitives = 0, canonicals = 0;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    const ArrayObj a = member(mask);
    if (a.is_primitive()) {
      ++primitives;
      if (mask != 0) throw std::logic_error("unexpected primitive member");
    }
    if (a.is_canonical()) {
      ++canonicals;
      if (mask + 1 != (1u << dim)) throw std::logic_error("unexpected canonical member");
    }
    for (int i = 0; i < dim; ++i) {
      const int loc = c.descent_locations[static_cast<std::size_t>(i)] + 1;
      const ArrayObj neighbor = member(mask ^ (1u << i));
      const ArrayObj moved = (mask & (1u << i)) ? merge(a, loc) : split(a, loc);
      if (!(moved == neighbor))
        throw std::logic_error("split/merge does not toggle the hypercube coordinate");
    }
  }
  if (primitives != 1 || canonicals != 1)
    throw std::logic_error("component must contain exactly one primitive and one canonical array");
}

std::map<int, BigInt> primitive_counts(int n) {
  if (n < 1) reject("primitive_counts: n must be >= 1");
  std::map<int, BigInt> out;
  if (n == 1) {
    out[1] = 1;
    return out;
  }
  // dp[v][d]: patterns of the first j entries with t_j = v and d descents.
  const std::size_t len = static_cast<std::size_t>(n) - 1;
  std::vector<std::vector<BigInt>> dp(len + 2, std::vector<BigInt>(len + 1));
  dp[1][0] = 1;
  for (std::size_t j = 1; j < len; ++j) {
    std::vector<std::vector<BigInt>> next(len + 2, std::vector<BigInt>(len + 1));
    for (std::size_t d = 0; d < j; ++d) {
      // prefix[v] = sum of dp[w][d] over w <= v
      std::vector<BigInt> prefix(j + 2);
      for (std::size_t v = 1; v <= j; ++v) prefix[v] = prefix[v - 1] + dp[v][d];
      prefix[j + 1] = prefix[j];
      for (std::size_t v = 1; v <= j + 1; ++v) {
        next[v][d] += prefix[v];                    // t_{j+1} = v >= previous entry
        next[v][d + 1] += prefix[j] - prefix[v];    // previous entry exceeded v: descent
      }
    }
    dp = std::move(next);
  }
  std::vector<BigInt> by_descents(len);
  for (std::size_t v = 1; v <= len; ++v)
    for (std::size_t d = 0; d < len; ++d) by_descents[d] += dp[v][d];
  for (std::size_t d = 0; d < len; ++d)
    if (by_descents[d] != 0) out[n - static_cast<int>(d)] = by_descents[d];
  return out;
}

BigInt primitive_count_dp(int n, int r) {
  const auto counts = primitive_counts(n);
  const auto it = counts.find(r);
  return it == counts.end() ? BigInt(0) : it->second;
}

namespace {

// Paths are step masks over `steps` bits; bit i set = step i moves up.
// Walking with diff = ups - rights, a path touches the line y = x + 1
// exactly when diff reaches +1.
int first_touch_above(std::uint32_t mask, int steps) {
  int diff = 0;
  for (int i = 0; i < steps; ++i) {
    diff += (mask >> i) & 1u ? 1 : -1;
    if (diff == 1) return i;
  }
  return -1;
}

std::uint32_t reflect_after(std::uint32_t mask, int steps, int k) {
  const std::uint32_t tail = ((steps - k - 1) >= 32)
                                 ? ~0u
                                 : (((1u << (steps - k - 1)) - 1u) << (k + 1));
  return mask ^ tail;
}

template <typename Fn>
void for_each_path_mask(int rights, int ups, Fn&& fn) {
  const int steps = rights + ups;
  if (steps > 30) reject("path enumeration: too many steps");
  const std::uint32_t end = 1u << steps;
  for (std::uint32_t mask = 0; mask < end; ++mask)
    if (std::popcount(mask) == ups) fn(mask, steps);
}

}  // namespace

BigInt monotone_path_count(int n, int cap) {
  if (n < 1) reject("monotone_path_count: n must be >= 1");
  check_cap(n, cap, "monotone_path_count");
  unsigned long count = 0;
  for_each_path_mask(n, n, [&](std::uint32_t mask, int steps) {
    if (first_touch_above(mask, steps) < 0) ++count;
  });
  return BigInt(count);
}

ReflectionCheck reflection_check(int n, int cap) {
  if (n < 1) reject("reflection_check: n must be >= 1");
  check_cap(n, cap, "reflection_check");
  ReflectionCheck result;
  result.n = n;

  unsigned long noncross = 0;
  std::vector<std::uint32_t> crossing, images;
  for_each_path_mask(n, n, [&](std::uint32_t mask, int steps) {
    const int k = first_touch_above(mask, steps);
    if (k < 0) {
      ++noncross;
    } else {
      crossing.push_back(mask);
      images.push_back(reflect_after(mask, steps, k));
    }
  });
  result.noncrossing_count = BigInt(noncross);
  result.crossing_count = BigInt(static_cast<unsigned long>(crossing.size()));

  std::vector<std::uint32_t> target;
  for_each_path_mask(n - 1, n + 1, [&](std::uint32_t mask, int) { target.push_back(mask); });
  result.target_count = BigInt(static_cast<unsigned long>(target.size()));

  // Reflecting the image at its own first touch must restore the original;
  // paths to (n-1, n+1) end above the diagonal, so they always touch.
  result.roundtrip_identity = true;
  const int steps = 2 * n;
  for (std::size_t i = 0; i < crossing.size(); ++i) {
    const int k = first_touch_above(images[i], steps);
    if (k < 0 || reflect_after(images[i], steps, k) != crossing[i]) {
      result.roundtrip_identity = false;
      break;
    }
  }

  std::vector<std::uint32_t> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  result.images_distinct =
      std::adjacent_find(sorted_images.begin(), sorted_images.end()) == sorted_images.end();
  std::sort(target.begin(), target.end());
  result.images_cover_target = (sorted_images == target);
  return result;
}

PatternPathBijectionCheck nondecreasing_pattern_path_bijection(int n, int cap) {
  if (n < 2) reject("nondecreasing_pattern_path_bijection: n must be >= 2");
  check_cap(n, cap, "nondecreasing_pattern_path_bijection");
  PatternPathBijectionCheck result;
  result.n = n;
  const int len = n - 1;
  const int steps = 2 * len;

  // Heights of horizontal steps are the pattern entries minus one.
  auto to_path = [&](const std::vector<int>& t) {
    std::uint32_t mask = 0;
    int bit = 0, y = 0;
    for (int j = 0; j < len; ++j) {
      const int h = t[static_cast<std::size_t>(j)] - 1;
      while (y < h) {
        mask |= 1u << bit;
        ++bit;
        ++y;
      }
      ++bit;  // horizontal step, bit stays 0
    }
    while (y < len) {
      mask |= 1u << bit;
      ++bit;
      ++y;
    }
    return mask;
  };
  auto from_path = [&](std::uint32_t mask) {
    std::vector<int> t;
    int y = 0;
    for (int i = 0; i < steps; ++i) {
      if ((mask >> i) & 1u)
        ++y;
      else
        t.push_back(y + 1);
    }
    return t;
  };

  unsigned long count = 0;
  bool roundtrip = true;
  std::vector<std::uint32_t> images;
  std::vector<int> t(static_cast<std::size_t>(len), 1);
  std::function<void(int)> dfs = [&](int j) {
    if (j == len) {
      ++count;
      const std::uint32_t mask = to_path(t);
      images.push_back(mask);
      if (from_path(mask) != t) roundtrip = false;
      return;
    }
    const int lo = (j == 0) ? 1 : t[static_cast<std::size_t>(j) - 1];
    for (int v = lo; v <= j + 1; ++v) {
      t[static_cast<std::size_t>(j)] = v;
      dfs(j + 1);
    }
  };
  dfs(0);
  result.pattern_count = BigInt(count);
  result.roundtrip_identity = roundtrip;

  std::vector<std::uint32_t> noncrossing;
  for_each_path_mask(len, len, [&](std::uint32_t mask, int s) {
    if (first_touch_above(mask, s) < 0) noncrossing.push_back(mask);
  });
  std::sort(images.begin(), images.end());
  std::sort(noncrossing.begin(), noncrossing.end());
  result.images_are_noncrossing_paths = (images == noncrossing);
  return result;
}

}  // namespace binrec
