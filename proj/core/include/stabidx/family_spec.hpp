#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "stabidx/digraph.hpp"
#include "stabidx/theta.hpp"

namespace stabidx {

struct CycleSpec {
  std::size_t p;
  friend bool operator==(const CycleSpec&, const CycleSpec&) = default;
};
struct CompleteSpec {
  std::size_t n;
  friend bool operator==(const CompleteSpec&, const CompleteSpec&) = default;
};
/// L_n.
struct LollipopSpec {
  std::size_t n;
  friend bool operator==(const LollipopSpec&, const LollipopSpec&) = default;
};
/// g(p,k,q).
struct DumbbellSpec {
  std::size_t p;
  std::size_t k;
  std::size_t q;
  friend bool operator==(const DumbbellSpec&, const DumbbellSpec&) = default;
};
/// Canonical order-n member of G(p,q,l,t).
struct ThetaGraphSpec {
  std::size_t p;
  std::size_t q;
  std::size_t l;
  std::size_t t;
  std::size_t n;
  friend bool operator==(const ThetaGraphSpec&, const ThetaGraphSpec&) = default;
};

using FamilySpec = std::variant<CycleSpec, CompleteSpec, LollipopSpec, DumbbellSpec, ThetaGraphSpec>;

/// Canonical strings: cycle:p  complete:n  lollipop:n  g:p,k,q  G:p,q,l,t,n.
/// Throws ParseError for malformed text; parameter ranges are checked at
/// build time.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

Digraph build(const FamilySpec& spec);
std::size_t order_of(const FamilySpec& spec);

/// Index predicted by the family's closed form (theta_G for ThetaGraph).
Theta predicted_theta(const FamilySpec& spec);

}  // namespace stabidx
