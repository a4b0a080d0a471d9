#pragma once

#include <cstdint>

#include "stabidx/digraph.hpp"

namespace stabidx {

inline constexpr std::uint64_t kDefaultWalkBudget = 50'000'000;

/// Number of u-v walks of exactly `length` arcs, by explicit depth-first
/// enumeration of vertex sequences. Shares no code with the matrix
/// routines; it exists to check them. Throws BudgetExceeded once more than
/// `budget` DFS steps are needed.
std::uint64_t walk_count_oracle(const Digraph& d, Vertex u, Vertex v, std::uint64_t length,
                                std::uint64_t budget = kDefaultWalkBudget);

}  // namespace stabidx
