#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>

#include "stabidx/digraph.hpp"
#include "stabidx/theta.hpp"

namespace stabidx {

// Vertex labels of every construction are fixed, so formatted edge lists
// are byte-stable across runs.

/// C_p: arcs i -> (i+1) mod p. build_cycle(1) is a single loop.
Digraph build_cycle(std::size_t p);

/// K_n: all n^2 arcs, loops included.
Digraph build_complete(std::size_t n);

/// L_n: C_n plus the chord 0 -> 2, which closes a second cycle of length
/// n-1. Requires n >= 3.
Digraph build_lollipop(std::size_t n);

/// g(p,k,q): disjoint cycles C_p and C_q joined by a (k-1)-arc path.
/// Labels: C_p on 0..p-1, the k-2 path internals next, C_q last. The path
/// leaves vertex 0 and enters vertex p+k-2. Order p+q+k-2; needs
/// p, q >= 1 and k >= 2.
Digraph build_g(std::size_t p, std::size_t k, std::size_t q);

/// LCM(p,q) + k - 2.
std::uint64_t theta_g(std::uint64_t p, std::uint64_t k, std::uint64_t q);

/// Layout of one member of the two-branch family G(p,q,l,t): a source x,
/// r vertices on the branch x -> u_1 into C_p, s vertices on the branch
/// x -> v_1 into C_q, and the crossing arc u_i -> v_j. Then
///   l = r + i + 1   (x .. u_1 .. u_i, v_j)
///   t = s + j       (x .. v_1 .. v_j)
///   order = 1 + r + s + p + q.
struct GRealization {
  std::size_t r;
  std::size_t s;
  std::size_t i;
  std::size_t j;
  std::size_t p;
  std::size_t q;

  std::size_t order() const noexcept { return 1 + r + s + p + q; }
  friend bool operator==(const GRealization&, const GRealization&) = default;
};

/// Layout of G(p,q,l,t) with exactly n vertices, or nullopt. Starts from
/// j = 1 and the largest i = min(p, l-1); when that is too large, slack is
/// taken out of the C_q branch by moving j forward. The layout never adds
/// vertices; padding an undersized member is pad_isolated's job.
std::optional<GRealization> realize_G(std::size_t p, std::size_t q, std::size_t l, std::size_t t,
                                      std::size_t n);

/// Fewest vertices of any member of G(p,q,l,t). Throws Unrealizable when
/// l < 2 or t < 1.
std::size_t min_order_G(std::size_t p, std::size_t q, std::size_t l, std::size_t t);

/// Canonical member of G(p,q,l,t) on exactly n vertices. Labels: x = 0,
/// then x_1..x_r, u_1..u_p, y_1..y_s, v_1..v_q. Throws Unrealizable.
Digraph build_G(std::size_t p, std::size_t q, std::size_t l, std::size_t t, std::size_t n);

/// Closed form for the family: min{l + a*p : l + a*p = t + b*q, a,b >= 0} - 1,
/// or infinite when no common length exists (gcd(p,q) does not divide l-t).
/// This formula is only an upper bound on the true index in general; use
/// stable_index on a built member when the actual value matters.
Theta theta_G(std::uint64_t p, std::uint64_t q, std::uint64_t l, std::uint64_t t);

/// {theta_G(p,q,t+d,t)} over t >= 1 such that G(p,q,t+d,t) has a member of
/// order at most n (finite values only). Requires p > q >= 1, d >= 1 and
/// n >= p+q+1 (the smallest member order).
std::set<std::uint64_t> f_set(std::size_t p, std::size_t q, std::size_t d, std::size_t n);

/// Appends n - order(D) isolated vertices. Throws ShrinkNotAllowed when
/// n < order(D).
Digraph pad_isolated(const Digraph& d, std::size_t n);

}  // namespace stabidx
