#include "stabidx/stable_index.hpp"

#include <set>
#include <utility>
#include <vector>

namespace stabidx {

std::uint64_t s_max(std::uint64_t n) noexcept {
  switch (n) {
    case 0:
    case 1: return 0;
    case 2: return 1;
    case 3: return 3;
    case 4: return 4;
    case 5: return 6;
    case 6: return 7;
    default: break;
  }
  const std::uint64_t sq = n * n;
  if (n % 2 == 1) return (sq - 1) / 4;
  if (n % 4 == 0) return (sq - 4) / 4;
  return (sq - 16) / 4;
}

namespace {

bool all_zero(const SaturatingMatrix& m) noexcept {
  for (auto w : m.ones_plane())
    if (w != 0) return false;
  return true;
}

// Shared power loop for the bounded algorithm. Returns the index k or
// nullopt (infinite); on a hit, `ws.next` holds A^(k+1).
std::optional<std::uint64_t> bounded_power_loop(const SaturatingMatrix& adj, PowerWorkspace& ws) {
  const std::uint64_t cap = s_max(adj.dim());
  ws.current = adj;
  for (std::uint64_t power = 2; power <= cap + 1; ++power) {
    sat_multiply_into(ws.current, adj, ws.next);
    if (!ws.next.is_zero_one()) return power - 1;
    // A nilpotent tail stays zero forever.
    if (all_zero(ws.next)) return std::nullopt;
    std::swap(ws.current, ws.next);
  }
  return std::nullopt;
}

}  // namespace

Theta stable_index_bounded(const SaturatingMatrix& adj, PowerWorkspace& ws) {
  auto k = bounded_power_loop(adj, ws);
  return k ? Theta::finite(*k) : Theta::infinite();
}

Theta stable_index_bounded(const Digraph& d) {
  PowerWorkspace ws;
  return stable_index_bounded(adjacency(d), ws);
}

StableIndexResult explain_stable_index(const Digraph& d) {
  PowerWorkspace ws;
  auto k = bounded_power_loop(adjacency(d), ws);
  if (!k) return {Theta::infinite(), std::nullopt};
  auto [u, v] = *ws.next.first_saturated();
  return {Theta::finite(*k), DuplicateWalk{u, v, *k + 1}};
}

Theta stable_index_cycle_detect(const Digraph& d) {
  const SaturatingMatrix adj = adjacency(d);
  std::set<std::vector<std::uint64_t>> seen;
  seen.insert(adj.ones_plane());
  SaturatingMatrix current = adj;
  SaturatingMatrix next(adj.dim());
  for (std::uint64_t power = 2;; ++power) {
    sat_multiply_into(current, adj, next);
    if (!next.is_zero_one()) return Theta::finite(power - 1);
    if (!seen.insert(next.ones_plane()).second) return Theta::infinite();
    std::swap(current, next);
  }
}

}  // namespace stabidx
