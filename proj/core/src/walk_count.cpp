#include "stabidx/walk_count.hpp"

#include <string>
#include <vector>

#include "stabidx/errors.hpp"

namespace stabidx {

namespace {

struct WalkSearch {
  const std::vector<std::vector<Vertex>>& succ;
  Vertex target;
  std::uint64_t budget;
  std::uint64_t steps = 0;

  std::uint64_t count(Vertex at, std::uint64_t remaining) {
    if (++steps > budget)
      throw Error(ErrorKind::BudgetExceeded, "walk enumeration exceeded " + std::to_string(budget) + " steps");
    if (remaining == 0) return at == target ? 1 : 0;
    std::uint64_t total = 0;
    for (Vertex next : succ[at]) total += count(next, remaining - 1);
    return total;
  }
};

}  // namespace

std::uint64_t walk_count_oracle(const Digraph& d, Vertex u, Vertex v, std::uint64_t length,
                                std::uint64_t budget) {
  if (u >= d.order() || v >= d.order())
    throw Error(ErrorKind::IndexOutOfRange, "walk endpoint outside digraph");
  std::vector<std::vector<Vertex>> succ(d.order());
  for (Vertex w = 0; w < d.order(); ++w) succ[w] = d.successors(w);
  WalkSearch search{succ, v, budget};
  return search.count(u, length);
}

}  // namespace stabidx
