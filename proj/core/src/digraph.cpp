#include "stabidx/digraph.hpp"

#include <bit>
#include <string>

#include "stabidx/errors.hpp"

namespace stabidx {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Digraph::Digraph(std::size_t n) : order_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
  if (n == 0) throw Error(ErrorKind::ParameterOutOfRange, "digraph order must be at least 1");
}

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::IndexOutOfRange, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                                  ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (d.has_arc(u, v))
      throw Error(ErrorKind::DuplicateArc,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ") listed twice");
    d.set_arc(u, v);
  }
  return d;
}

void Digraph::set_arc(Vertex u, Vertex v) noexcept {
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) throw Error(ErrorKind::IndexOutOfRange, "vertex outside digraph");
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t Digraph::arc_count() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v : successors(u)) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Digraph::successors(Vertex u) const {
  if (u >= order_) throw Error(ErrorKind::IndexOutOfRange, "vertex outside digraph");
  std::vector<Vertex> out;
  auto r = row(u);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
  }
  return out;
}

std::vector<Vertex> Digraph::predecessors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < order_; ++u)
    if (has_arc(u, v)) out.push_back(u);
  return out;
}

std::size_t Digraph::out_degree(Vertex u) const {
  if (u >= order_) throw Error(ErrorKind::IndexOutOfRange, "vertex outside digraph");
  std::size_t c = 0;
  for (auto w : row(u)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Digraph::in_degree(Vertex v) const { return predecessors(v).size(); }

}  // namespace stabidx
