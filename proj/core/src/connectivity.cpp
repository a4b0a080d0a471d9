#include "stabidx/connectivity.hpp"

#include <vector>

namespace stabidx {

namespace {

template <typename Next>
std::size_t reach_count(std::size_t n, Next&& next) {
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : next(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.order();
  if (reach_count(n, [&](Vertex u) { return d.successors(u); }) != n) return false;
  return reach_count(n, [&](Vertex u) { return d.predecessors(u); }) == n;
}

bool is_cycle_graph(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    if (d.out_degree(u) != 1 || d.in_degree(u) != 1) return false;
  return is_strongly_connected(d);
}

}  // namespace stabidx
