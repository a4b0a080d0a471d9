#pragma once

#include <cstdint>
#include <optional>

#include "stabidx/digraph.hpp"
#include "stabidx/saturating_matrix.hpp"
#include "stabidx/theta.hpp"

namespace stabidx {

/// Largest finite stable index over digraphs of order n. Tabulated for
/// n <= 6; closed form for n >= 7. s_max(1) = 0: no digraph of order 1 has
/// a finite stable index.
std::uint64_t s_max(std::uint64_t n) noexcept;

/// Where the first pair of distinct equal-length walks shows up: `length`
/// is k+1 for stable index k.
struct DuplicateWalk {
  Vertex from;
  Vertex to;
  std::uint64_t length;

  friend bool operator==(const DuplicateWalk&, const DuplicateWalk&) = default;
};

struct StableIndexResult {
  Theta theta;
  std::optional<DuplicateWalk> first_duplicate;
};

/// Scratch buffers for repeated stable-index evaluation without allocation.
struct PowerWorkspace {
  SaturatingMatrix current;
  SaturatingMatrix next;
};

/// Powers A^2 .. A^(s_max(n)+1) with M <- M * A; reports the first power
/// holding an entry >= 2. No finite index of an order-n digraph exceeds
/// s_max(n), so reaching the cap proves the index is infinite.
Theta stable_index_bounded(const Digraph& d);
Theta stable_index_bounded(const SaturatingMatrix& adj, PowerWorkspace& ws);

/// Same as stable_index_bounded but also returns the (row-major first)
/// entry of the first non-0-1 power.
StableIndexResult explain_stable_index(const Digraph& d);

/// Powers until either an entry >= 2 appears or a 0-1 power repeats. A
/// repeat means the power sequence has become periodic inside the 0-1
/// matrices, so the index is infinite. Uses no a-priori bound.
Theta stable_index_cycle_detect(const Digraph& d);

/// Default algorithm.
inline Theta stable_index(const Digraph& d) { return stable_index_bounded(d); }

}  // namespace stabidx
