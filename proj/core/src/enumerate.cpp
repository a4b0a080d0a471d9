#include "stabidx/enumerate.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

#include "stabidx/errors.hpp"
#include "stabidx/saturating_matrix.hpp"
#include "stabidx/stable_index.hpp"
#include "stabidx/theorem.hpp"

namespace stabidx {

Code encode(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kMaxCodeOrder) throw Error(ErrorKind::CodeOutOfRange, "digraphs above order 8 have no 64-bit code");
  Code code = 0;
  for (const auto& [u, v] : d.arcs()) code |= Code{1} << (u * n + v);
  return code;
}

Digraph decode(std::size_t n, Code code) {
  if (n == 0 || n > kMaxCodeOrder) throw Error(ErrorKind::CodeOutOfRange, "decode supports orders 1..8");
  if (n * n < 64 && (code >> (n * n)) != 0)
    throw Error(ErrorKind::CodeOutOfRange,
                "code " + std::to_string(code) + " exceeds 2^" + std::to_string(n * n));
  std::vector<Arc> arcs;
  for (std::size_t b = 0; b < n * n; ++b)
    if ((code >> b) & 1U) arcs.emplace_back(static_cast<Vertex>(b / n), static_cast<Vertex>(b % n));
  return Digraph::from_arcs(n, arcs);
}

Code code_space(std::size_t n) {
  if (n == 0 || n > kMaxEnumerableOrder)
    throw Error(ErrorKind::CeilingExceeded, "code space of order " + std::to_string(n) + " is not representable");
  return Code{1} << (n * n);
}

std::vector<Partition> split_range(std::size_t n, std::size_t parts) {
  const Code space = code_space(n);
  parts = std::max<std::size_t>(parts, 1);
  std::vector<Partition> out;
  out.reserve(parts);
  const Code base = space / parts;
  const Code extra = space % parts;
  Code lo = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const Code hi = lo + base + (i < extra ? 1 : 0);
    out.push_back({n, lo, hi});
    lo = hi;
  }
  return out;
}

void EnumSummary::add(Theta theta, std::uint64_t count) {
  if (count == 0) return;
  histogram[theta] += count;
  total += count;
  if (theta.is_finite()) max_finite = std::max(max_finite.value_or(0), theta.value());
}

std::set<std::uint64_t> EnumSummary::achieved_finite() const {
  std::set<std::uint64_t> out;
  for (const auto& [theta, count] : histogram)
    if (theta.is_finite() && count > 0) out.insert(theta.value());
  return out;
}

EnumSummary merge(const EnumSummary& a, const EnumSummary& b) {
  if (a.total == 0 && !a.range && !a.seed) return b;
  if (b.total == 0 && !b.range && !b.seed) return a;
  if (a.n != b.n)
    throw Error(ErrorKind::OrderMismatch,
                "cannot merge summaries of orders " + std::to_string(a.n) + " and " + std::to_string(b.n));
  EnumSummary out = a;
  for (const auto& [theta, count] : b.histogram) out.add(theta, count);
  if (a.range && b.range)
    out.range = std::pair{std::min(a.range->first, b.range->first), std::max(a.range->second, b.range->second)};
  else if (b.range)
    out.range = b.range;
  if (a.seed != b.seed) out.seed.reset();
  return out;
}

namespace {

// Tallies into a flat array while scanning; converted to a map once.
class Tally {
 public:
  explicit Tally(std::size_t n) : finite_(s_max(n) + 1, 0) {}

  void add(const Theta& theta) {
    if (theta.is_infinite()) {
      ++infinite_;
    } else {
      const auto k = theta.value();
      if (k >= finite_.size()) finite_.resize(k + 1, 0);
      ++finite_[k];
    }
  }

  void flush_into(EnumSummary& s) const {
    for (std::size_t k = 0; k < finite_.size(); ++k) s.add(Theta::finite(k), finite_[k]);
    s.add(Theta::infinite(), infinite_);
  }

 private:
  std::vector<std::uint64_t> finite_;
  std::uint64_t infinite_ = 0;
};

void check_ceiling(std::size_t n, std::size_t ceiling) {
  if (n == 0) throw Error(ErrorKind::ParameterOutOfRange, "order must be at least 1");
  if (n > ceiling || n > kMaxEnumerableOrder)
    throw Error(ErrorKind::CeilingExceeded, "exhaustive enumeration of order " + std::to_string(n) +
                                                " exceeds the ceiling " +
                                                std::to_string(std::min(ceiling, kMaxEnumerableOrder)));
}

}  // namespace

EnumSummary enumerate_exhaustive(const Partition& part, std::size_t ceiling, ThetaAlgorithm algorithm) {
  const std::size_t n = part.n;
  check_ceiling(n, ceiling);
  if (part.lo > part.hi || part.hi > code_space(n))
    throw Error(ErrorKind::CodeOutOfRange, "partition bounds outside [0, 2^(n^2)]");

  EnumSummary summary;
  summary.n = n;
  summary.range = std::pair{part.lo, part.hi};
  Tally tally(n);

  if (algorithm == ThetaAlgorithm::CycleDetect) {
    for (Code code = part.lo; code < part.hi; ++code) tally.add(stable_index_cycle_detect(decode(n, code)));
  } else {
    SaturatingMatrix adj(n);
    PowerWorkspace ws;
    const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
    for (Code code = part.lo; code < part.hi; ++code) {
      for (std::size_t u = 0; u < n; ++u) {
        const std::uint64_t row = (code >> (u * n)) & row_mask;
        adj.assign_row(u, std::span<const std::uint64_t>(&row, 1));
      }
      tally.add(stable_index_bounded(adj, ws));
    }
  }
  tally.flush_into(summary);
  return summary;
}

EnumSummary enumerate_parallel(std::size_t n, std::size_t workers, std::size_t ceiling) {
  check_ceiling(n, ceiling);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  const auto parts = split_range(n, workers);
  std::vector<EnumSummary> results(parts.size());
  {
    std::vector<std::jthread> threads;
    threads.reserve(parts.size());
    for (std::size_t w = 0; w < parts.size(); ++w)
      threads.emplace_back([&, w] { results[w] = enumerate_exhaustive(parts[w], ceiling); });
  }
  EnumSummary out;
  for (const auto& r : results) out = merge(out, r);
  return out;
}

EnumSummary enumerate_random(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n == 0 || n > kMaxSampleOrder)
    throw Error(ErrorKind::ParameterOutOfRange,
                "sampling supports orders 1.." + std::to_string(kMaxSampleOrder));
  std::mt19937_64 gen(seed);
  const std::size_t bits = n * n;
  std::vector<std::uint64_t> words((bits + 63) / 64);
  SaturatingMatrix adj(n);
  PowerWorkspace ws;
  Tally tally(n);
  std::vector<std::uint64_t> row(adj.words_per_row());
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& w : words) w = gen();
    for (std::size_t u = 0; u < n; ++u) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t b = u * n + v;
        if ((words[b / 64] >> (b % 64)) & 1U) row[v / 64] |= std::uint64_t{1} << (v % 64);
      }
      adj.assign_row(u, row);
    }
    tally.add(stable_index_bounded(adj, ws));
  }
  EnumSummary summary;
  summary.n = n;
  summary.seed = seed;
  tally.flush_into(summary);
  return summary;
}

EmpiricalReport empirical_check(std::size_t n, std::size_t workers, std::size_t ceiling) {
  EmpiricalReport report;
  report.n = n;
  report.summary = enumerate_parallel(n, workers, ceiling);
  report.expected = theta_set(n).finite_members;
  report.achieved = report.summary.achieved_finite();
  report.expected_max = s_max(n);
  report.infinity_seen = report.summary.has_infinite();
  std::set_difference(report.expected.begin(), report.expected.end(), report.achieved.begin(),
                      report.achieved.end(), std::inserter(report.missing, report.missing.end()));
  std::set_difference(report.achieved.begin(), report.achieved.end(), report.expected.begin(),
                      report.expected.end(), std::inserter(report.unexpected, report.unexpected.end()));
  return report;
}

}  // namespace stabidx
