#include "stabidx/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "stabidx/errors.hpp"

namespace stabidx {

namespace {

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorKind::ParameterOutOfRange, what);
}

void add_cycle(std::vector<Arc>& arcs, Vertex first, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    arcs.emplace_back(first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % len));
}

// Path through `vertices` in order.
void add_path(std::vector<Arc>& arcs, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) arcs.emplace_back(vertices[i], vertices[i + 1]);
}

std::string params(std::initializer_list<std::uint64_t> xs) {
  std::string s = "(";
  for (auto x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

Digraph build_cycle(std::size_t p) {
  if (p < 1) out_of_range("cycle length must be at least 1");
  std::vector<Arc> arcs;
  add_cycle(arcs, 0, p);
  return Digraph::from_arcs(p, arcs);
}

Digraph build_complete(std::size_t n) {
  if (n < 1) out_of_range("complete digraph order must be at least 1");
  std::vector<Arc> arcs;
  arcs.reserve(n * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, arcs);
}

Digraph build_lollipop(std::size_t n) {
  if (n < 3) out_of_range("L_n requires n >= 3");
  std::vector<Arc> arcs;
  add_cycle(arcs, 0, n);
  arcs.emplace_back(0, 2);
  return Digraph::from_arcs(n, arcs);
}

Digraph build_g(std::size_t p, std::size_t k, std::size_t q) {
  if (p < 1 || q < 1 || k < 2) out_of_range("g(p,k,q) requires p, q >= 1 and k >= 2, got " + params({p, k, q}));
  const std::size_t n = p + q + k - 2;
  const Vertex q_start = static_cast<Vertex>(p + k - 2);
  std::vector<Arc> arcs;
  add_cycle(arcs, 0, p);
  std::vector<Vertex> path{0};
  for (Vertex v = static_cast<Vertex>(p); v < q_start; ++v) path.push_back(v);
  path.push_back(q_start);
  add_path(arcs, path);
  add_cycle(arcs, q_start, q);
  return Digraph::from_arcs(n, arcs);
}

std::uint64_t theta_g(std::uint64_t p, std::uint64_t k, std::uint64_t q) {
  if (p < 1 || q < 1 || k < 2) out_of_range("g(p,k,q) requires p, q >= 1 and k >= 2, got " + params({p, k, q}));
  return std::lcm(p, q) + k - 2;
}

std::size_t min_order_G(std::size_t p, std::size_t q, std::size_t l, std::size_t t) {
  if (p < 1 || q < 1) out_of_range("G(p,q,l,t) requires p, q >= 1");
  if (l < 2 || t < 1) throw Error(ErrorKind::Unrealizable, "G(p,q,l,t) requires l >= 2 and t >= 1");
  const std::size_t r = l - 1 - std::min(p, l - 1);
  const std::size_t s = t - std::min(q, t);
  return 1 + r + s + p + q;
}

std::optional<GRealization> realize_G(std::size_t p, std::size_t q, std::size_t l, std::size_t t,
                                      std::size_t n) {
  if (p < 1 || q < 1) out_of_range("G(p,q,l,t) requires p, q >= 1");
  if (l < 2 || t < 1) return std::nullopt;
  GRealization g{};
  g.p = p;
  g.q = q;
  g.i = std::min(p, l - 1);
  g.r = l - 1 - g.i;
  g.j = 1;
  g.s = t - 1;
  if (g.order() > n) {
    const std::size_t excess = g.order() - n;
    const std::size_t shift = std::min({excess, q - 1, g.s});
    g.j += shift;
    g.s -= shift;
  }
  if (g.order() != n) return std::nullopt;
  return g;
}

Digraph build_G(std::size_t p, std::size_t q, std::size_t l, std::size_t t, std::size_t n) {
  const auto g = realize_G(p, q, l, t, n);
  if (!g)
    throw Error(ErrorKind::Unrealizable,
                "G" + params({p, q, l, t}) + " has no member of order " + std::to_string(n));
  // x = 0, x_1..x_r, u_1..u_p, y_1..y_s, v_1..v_q.
  const Vertex x = 0;
  const Vertex u1 = static_cast<Vertex>(1 + g->r);
  const Vertex y1 = static_cast<Vertex>(u1 + p);
  const Vertex v1 = static_cast<Vertex>(y1 + g->s);
  std::vector<Arc> arcs;

  std::vector<Vertex> to_p{x};
  for (Vertex v = 1; v < u1; ++v) to_p.push_back(v);
  to_p.push_back(u1);
  add_path(arcs, to_p);
  add_cycle(arcs, u1, p);

  std::vector<Vertex> to_q{x};
  for (Vertex v = y1; v < v1; ++v) to_q.push_back(v);
  to_q.push_back(v1);
  add_path(arcs, to_q);
  add_cycle(arcs, v1, q);

  arcs.emplace_back(u1 + static_cast<Vertex>(g->i - 1), v1 + static_cast<Vertex>(g->j - 1));
  return Digraph::from_arcs(n, arcs);
}

Theta theta_G(std::uint64_t p, std::uint64_t q, std::uint64_t l, std::uint64_t t) {
  if (p < 1 || q < 1 || l < 1 || t < 1) out_of_range("theta_G requires p, q, l, t >= 1, got " + params({p, q, l, t}));
  const std::uint64_t gap = l > t ? l - t : t - l;
  const std::uint64_t a_max = std::lcm(p, q) / p + (gap + p - 1) / p;
  for (std::uint64_t a = 0; a <= a_max; ++a) {
    const std::uint64_t len = l + a * p;
    if (len >= t && (len - t) % q == 0) return Theta::finite(len - 1);
  }
  return Theta::infinite();
}

std::set<std::uint64_t> f_set(std::size_t p, std::size_t q, std::size_t d, std::size_t n) {
  if (!(p > q && q >= 1)) out_of_range("f_set requires p > q >= 1");
  if (d < 1) out_of_range("f_set requires d >= 1");
  if (n < p + q + 1) out_of_range("f_set requires n >= p + q + 1");
  std::set<std::uint64_t> out;
  // The minimal order is non-decreasing in t, so stop at the first miss.
  for (std::size_t t = 1; min_order_G(p, q, t + d, t) <= n; ++t) {
    const Theta th = theta_G(p, q, t + d, t);
    if (th.is_finite()) out.insert(th.value());
  }
  return out;
}

Digraph pad_isolated(const Digraph& d, std::size_t n) {
  if (n < d.order())
    throw Error(ErrorKind::ShrinkNotAllowed,
                "cannot pad order " + std::to_string(d.order()) + " down to " + std::to_string(n));
  const auto arcs = d.arcs();
  return Digraph::from_arcs(n, arcs);
}

}  // namespace stabidx
