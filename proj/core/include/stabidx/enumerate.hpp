#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stabidx/digraph.hpp"
#include "stabidx/theta.hpp"

namespace stabidx {

/// An order-n digraph as an n^2-bit integer: bit (i*n + j) is arc (i,j).
using Code = std::uint64_t;

inline constexpr std::size_t kMaxCodeOrder = 8;         // n^2 <= 64
inline constexpr std::size_t kMaxEnumerableOrder = 7;   // 2^(n^2) must fit in a Code
inline constexpr std::size_t kDefaultCeiling = 5;
inline constexpr std::size_t kMaxSampleOrder = 12;

/// Throws CodeOutOfRange when order(D) > 8.
Code encode(const Digraph& d);
/// Throws CodeOutOfRange when code >= 2^(n^2) or n > 8.
Digraph decode(std::size_t n, Code code);

/// 2^(n^2); requires n <= 7.
Code code_space(std::size_t n);

/// Half-open code range [lo, hi) of order-n digraphs.
struct Partition {
  std::size_t n;
  Code lo;
  Code hi;

  static Partition full(std::size_t n) { return {n, 0, code_space(n)}; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Splits [0, 2^(n^2)) into `parts` contiguous, near-equal partitions.
std::vector<Partition> split_range(std::size_t n, std::size_t parts);

enum class ThetaAlgorithm { Bounded, CycleDetect };

/// Histogram of stable indices over a set of order-n digraphs. `range`
/// spans the covered codes for exhaustive runs; `seed` is set for sampled
/// runs.
struct EnumSummary {
  std::size_t n = 0;
  std::map<Theta, std::uint64_t> histogram;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> max_finite;
  std::optional<std::pair<Code, Code>> range;
  std::optional<std::uint64_t> seed;

  void add(Theta theta, std::uint64_t count = 1);
  std::set<std::uint64_t> achieved_finite() const;
  bool has_infinite() const { return histogram.contains(Theta::infinite()); }

  friend bool operator==(const EnumSummary&, const EnumSummary&) = default;
};

/// Pointwise histogram sum. Associative and commutative; ranges are
/// assumed disjoint and are combined into their covering span. Throws
/// OrderMismatch.
EnumSummary merge(const EnumSummary& a, const EnumSummary& b);

/// Stable index of every code in the partition. Throws CeilingExceeded for
/// n > ceiling (or n > 7).
EnumSummary enumerate_exhaustive(const Partition& part, std::size_t ceiling = kDefaultCeiling,
                                 ThetaAlgorithm algorithm = ThetaAlgorithm::Bounded);

/// Full order-n run split over `workers` threads (0 = hardware
/// concurrency). Each worker owns a contiguous slice of chunks; the result
/// does not depend on the worker count.
EnumSummary enumerate_parallel(std::size_t n, std::size_t workers = 1,
                               std::size_t ceiling = kDefaultCeiling);

/// `samples` uniformly random order-n digraphs, drawn with replacement.
///
/// Generator contract: std::mt19937_64 seeded with `seed`; each sample
/// consumes ceil(n^2/64) consecutive raw outputs, and code bit b is bit
/// (b mod 64) of output number floor(b/64). No std distribution is used, so
/// the stream is identical on every conforming platform.
EnumSummary enumerate_random(std::size_t n, std::uint64_t samples, std::uint64_t seed);

/// Exhaustive ground truth for order n against the closed forms.
struct EmpiricalReport {
  std::size_t n = 0;
  EnumSummary summary;
  std::set<std::uint64_t> expected;   // theta_set(n) finite members
  std::set<std::uint64_t> achieved;
  std::set<std::uint64_t> missing;    // expected, never seen
  std::set<std::uint64_t> unexpected; // seen, not expected
  std::uint64_t expected_max = 0;     // s_max(n)
  bool infinity_seen = false;

  bool matches() const {
    return missing.empty() && unexpected.empty() && infinity_seen &&
           summary.max_finite.value_or(0) == expected_max;
  }
};

EmpiricalReport empirical_check(std::size_t n, std::size_t workers = 1,
                                std::size_t ceiling = kDefaultCeiling);

// Summary persistence. The JSON document carries n, range, seed, total,
// max_finite, the histogram as [{"theta": {...}, "count": c}] and a
// format version; theta is {"kind": "finite", "value": k} or
// {"kind": "infinite"}.
inline constexpr int kSummaryFormatVersion = 1;
std::string summary_to_json(const EnumSummary& s, int indent = 2);
EnumSummary summary_from_json(const std::string& text);
/// Columns theta,count; infinity is written as "inf".
std::string summary_to_csv(const EnumSummary& s);

}  // namespace stabidx
