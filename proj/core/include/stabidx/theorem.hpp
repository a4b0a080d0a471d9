#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stabidx/digraph.hpp"
#include "stabidx/family_spec.hpp"
#include "stabidx/theta.hpp"

namespace stabidx {

/// The set of stable indices attained by digraphs of order n.
struct IndexSet {
  std::size_t n = 0;
  std::set<std::uint64_t> finite_members;
  bool has_infinity = false;

  bool contains(const Theta& t) const {
    return t.is_infinite() ? has_infinity : finite_members.contains(t.value());
  }
  /// Members as compressed ranges, e.g. "1-8,10,12,inf".
  std::string to_string() const;
};

/// n >= 7: [1, s(n-1)+1] together with LCM(p,q) over p+q = n, and infinity.
/// 2 <= n <= 6: [1, s(n)] and infinity. n = 1: infinity only.
IndexSet theta_set(std::size_t n);

/// [1, s_max(n)] split into attained members and gaps.
struct GapReport {
  std::size_t n = 0;
  std::set<std::uint64_t> gaps;
  /// Member -> construction used; filled only when requested.
  std::map<std::uint64_t, FamilySpec> witnessed;
};

/// Requires n >= 2.
GapReport gaps(std::size_t n, bool include_witnesses = false);

struct Witness {
  Digraph digraph;      // order n, isolated vertices appended as needed
  FamilySpec family;    // construction before padding
  Theta theta;          // recomputed on `digraph`
};

/// An order-n digraph whose directly computed index is m.
///
/// Candidates, in order: C_n for infinity, K_n for 1, L_n for n, g(p,q)
/// with p+q = n, then g(p,k,q) and members of G(p,q,l,t) whose closed form
/// gives m, smallest parameters first. Every candidate is padded and
/// recomputed; closed forms only nominate. Throws NotAchievable when m is
/// not in theta_set(n) and SearchExhausted if no candidate checks out.
Witness witness(std::size_t n, const Theta& m);

struct VerifyEntry {
  Theta member = Theta::infinite();
  std::optional<std::string> family;
  std::optional<Theta> computed;
  bool ok = false;
  std::string error;
  double micros = 0.0;
};

struct VerifyOptions {
  /// Orders up to this also get an exhaustive check that nothing outside
  /// theta_set(n) is attained.
  std::size_t exhaustive_up_to = 4;
  std::size_t workers = 1;
};

struct TheoremReport {
  std::size_t n = 0;
  std::vector<VerifyEntry> entries;
  bool exhaustive_checked = false;
  bool exhaustive_ok = false;
  std::set<std::uint64_t> exhaustive_missing;
  std::set<std::uint64_t> exhaustive_unexpected;
  std::optional<std::uint64_t> exhaustive_max;

  bool passed() const;
};

/// Witnesses every member of theta_set(n) (infinity included) and, for
/// small n, cross-checks the whole set against exhaustive enumeration.
TheoremReport verify_theorem(std::size_t n, const VerifyOptions& options = {});

/// One record per line: "member n=<n> m=<m> status=<PASS|FAIL> ..." and a
/// closing "summary" record.
std::string report_to_lines(const TheoremReport& report);
std::string report_to_json(const TheoremReport& report, int indent = 2);

/// "1-8,10,12"; empty string for an empty set.
std::string format_ranges(const std::set<std::uint64_t>& values);

}  // namespace stabidx
