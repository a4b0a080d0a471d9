#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stabidx {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Finite digraph on vertices 0..order-1. Loops are allowed, parallel arcs
/// are not. Arcs are stored as one bit row per vertex.
class Digraph {
 public:
  /// Throws IndexOutOfRange for an endpoint >= n, DuplicateArc when a pair
  /// repeats, ParameterOutOfRange for n == 0.
  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);
  static Digraph from_arcs(std::size_t n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  /// Edgeless digraph of order n.
  explicit Digraph(std::size_t n);

  std::size_t order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept;
  bool has_arc(Vertex u, Vertex v) const;

  /// Arcs in row-major order (u ascending, then v ascending).
  std::vector<Arc> arcs() const;
  std::vector<Vertex> successors(Vertex u) const;
  std::vector<Vertex> predecessors(Vertex v) const;
  std::size_t out_degree(Vertex u) const;
  std::size_t in_degree(Vertex v) const;

  /// Words of the bit row of u; bit j of word w is arc (u, 64*w + j).
  std::span<const std::uint64_t> row(Vertex u) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void set_arc(Vertex u, Vertex v) noexcept;

  std::size_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace stabidx
