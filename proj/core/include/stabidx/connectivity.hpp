#pragma once

#include "stabidx/digraph.hpp"

namespace stabidx {

/// True iff every ordered pair (u, v) is joined by a u-v walk (the empty
/// walk counts for u == v, so every order-1 digraph qualifies).
bool is_strongly_connected(const Digraph& d);

/// True iff D is a single directed cycle through all of its vertices;
/// a lone loop is the 1-cycle.
bool is_cycle_graph(const Digraph& d);

}  // namespace stabidx
