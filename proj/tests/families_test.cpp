#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "stabidx/enumerate.hpp"
#include "stabidx/families.hpp"
#include "stabidx/family_spec.hpp"
#include "stabidx/number_theory.hpp"
#include "stabidx/stable_index.hpp"
#include "test_support.hpp"

namespace stabidx {
namespace {

using testing::expect_error;
using testing::with_extra_arc;

// Smallest common length of l + a*p and t + b*q over a wide (a, b) grid,
// minus one; no window reasoning.
std::optional<std::uint64_t> brute_theta_G(std::uint64_t p, std::uint64_t q, std::uint64_t l, std::uint64_t t) {
  std::optional<std::uint64_t> best;
  for (std::uint64_t a = 0; a <= 200; ++a)
    for (std::uint64_t b = 0; b <= 200; ++b)
      if (l + a * p == t + b * q && (!best || l + a * p - 1 < *best)) best = l + a * p - 1;
  return best;
}

std::set<std::uint64_t> interval(std::uint64_t lo, std::uint64_t hi) {
  std::set<std::uint64_t> out;
  for (auto k = lo; k <= hi; ++k) out.insert(k);
  return out;
}

// --------------------------------------------------------------- builders

TEST(Builders, CycleCompleteLollipop) {
  EXPECT_EQ(build_cycle(1), Digraph::from_arcs(1, {{0, 0}}));
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(stable_index(build_lollipop(n)), Theta::finite(n)) << n;
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(stable_index(build_complete(n)), Theta::finite(1)) << n;
  EXPECT_EQ(build_complete(3).arc_count(), 9u);
  EXPECT_TRUE(build_lollipop(5).has_arc(0, 2));
  EXPECT_EQ(build_lollipop(5).arc_count(), 6u);
  // The literal chord 0 -> n-1 closes a 2-cycle and undershoots for even n.
  EXPECT_EQ(stable_index(with_extra_arc(build_cycle(8), {0, 7})), Theta::finite(6));
  EXPECT_TRUE(stable_index(build_complete(1)).is_infinite());
  expect_error(ErrorKind::ParameterOutOfRange, [] { build_lollipop(2); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { build_cycle(0); });
}

TEST(Builders, DumbbellLabeling) {
  // C_2 on {0,1}, path 0 -> 2 -> 3, C_3 on {3,4,5}.
  const auto d = build_g(2, 3, 3);
  EXPECT_EQ(d.order(), 6u);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {0, 2}, {1, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}));
  EXPECT_EQ(build_g(2, 2, 3).arcs(), (std::vector<Arc>{{0, 1}, {0, 2}, {1, 0}, {2, 3}, {3, 4}, {4, 2}}));
  expect_error(ErrorKind::ParameterOutOfRange, [] { build_g(2, 1, 3); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { build_g(0, 2, 3); });
}

TEST(Builders, DumbbellNamedValues) {
  EXPECT_EQ(stable_index(build_g(2, 2, 3)), Theta::finite(6));
  EXPECT_EQ(stable_index(build_g(2, 3, 3)), Theta::finite(7));
  EXPECT_EQ(stable_index(build_g(2, 4, 3)), Theta::finite(8));
  EXPECT_EQ(stable_index(build_g(1, 2, 2)), Theta::finite(2));
}

TEST(ThetaG, ClosedForm) {
  EXPECT_EQ(theta_g(2, 2, 3), 6u);
  EXPECT_EQ(theta_g(3, 2, 4), 12u);
  EXPECT_EQ(stable_index(build_g(3, 2, 4)), Theta::finite(12));
  for (std::uint64_t p = 1; p <= 5; ++p) {
    EXPECT_EQ(theta_g(p, 2, p), p);
    EXPECT_EQ(stable_index(build_g(p, 2, p)), Theta::finite(p));
  }
  expect_error(ErrorKind::ParameterOutOfRange, [] { theta_g(1, 1, 1); });
}

TEST(ThetaG, MatchesDirectComputation) {
  for (std::size_t p = 1; p <= 8; ++p)
    for (std::size_t q = 1; q <= 8; ++q)
      for (std::size_t k = 2; k <= 6; ++k)
        ASSERT_EQ(stable_index(build_g(p, k, q)), Theta::finite(theta_g(p, k, q)))
            << "g(" << p << "," << k << "," << q << ")";
}

// ------------------------------------------------------------- G(p,q,l,t)

TEST(BuildG, CanonicalRealization) {
  EXPECT_FALSE(realize_G(4, 3, 3, 1, 9));
  expect_error(ErrorKind::Unrealizable, [] { build_G(4, 3, 3, 1, 9); });
  const auto g = realize_G(4, 3, 3, 1, 8);
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, (GRealization{0, 0, 2, 1, 4, 3}));
  const auto d = build_G(4, 3, 3, 1, 8);
  EXPECT_EQ(d.order(), 8u);
  // x=0 -> u_1=1; C_4 on 1..4; x -> v_1=5; C_3 on 5..7; u_2=2 -> v_1=5.
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 1}, {5, 6}, {6, 7},
                                        {7, 5}}));
  EXPECT_EQ(stable_index(d), Theta::finite(6));
  expect_error(ErrorKind::Unrealizable, [] { build_G(2, 2, 1, 1, 5); });
  EXPECT_FALSE(realize_G(2, 2, 1, 1, 5));
}

TEST(BuildG, ShortensTheQBranchWhenTooLarge) {
  // Canonical j = 1 needs s = 2 and order 8; moving to j = 2 gives order 7.
  EXPECT_EQ(min_order_G(3, 2, 4, 3), 7u);
  const auto g = realize_G(3, 2, 4, 3, 7);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->j, 2u);
  EXPECT_EQ(g->s, 1u);
  EXPECT_EQ(g->order(), 7u);
  EXPECT_FALSE(realize_G(3, 2, 4, 3, 6));
  EXPECT_EQ(build_G(3, 2, 4, 3, 8).order(), 8u);
}

TEST(BuildG, LayoutLengthsHold) {
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = 1; q <= 4; ++q)
      for (std::size_t l = 2; l <= 7; ++l)
        for (std::size_t t = 1; t <= 7; ++t)
          for (std::size_t n = 1; n <= 16; ++n) {
            const auto g = realize_G(p, q, l, t, n);
            if (!g) continue;
            EXPECT_EQ(g->r + g->i + 1, l);
            EXPECT_EQ(g->s + g->j, t);
            EXPECT_GE(g->i, 1u);
            EXPECT_LE(g->i, p);
            EXPECT_GE(g->j, 1u);
            EXPECT_LE(g->j, q);
            const auto d = build_G(p, q, l, t, n);
            EXPECT_EQ(d.order(), n);
            EXPECT_EQ(d.arc_count(), (g->r + 1) + p + (g->s + 1) + q + 1);
          }
}

TEST(ThetaGFormula, Examples) {
  EXPECT_EQ(theta_G(4, 3, 3, 1), Theta::finite(6));
  EXPECT_EQ(brute_theta_G(4, 3, 3, 1), 6u);
  for (std::uint64_t p = 1; p <= 6; ++p)
    for (std::uint64_t l = 1; l <= 6; ++l) EXPECT_EQ(theta_G(p, p, l, l), Theta::finite(l - 1));
  EXPECT_TRUE(theta_G(2, 2, 2, 1).is_infinite());
  expect_error(ErrorKind::ParameterOutOfRange, [] { theta_G(0, 2, 2, 1); });
}

TEST(ThetaGFormula, MatchesBruteForceSearch) {
  for (std::uint64_t p = 1; p <= 9; ++p)
    for (std::uint64_t q = 1; q <= 9; ++q)
      for (std::uint64_t l = 1; l <= 12; ++l)
        for (std::uint64_t t = 1; t <= 12; ++t) {
          const auto brute = brute_theta_G(p, q, l, t);
          const Theta got = theta_G(p, q, l, t);
          if (brute) {
            ASSERT_EQ(got, Theta::finite(*brute)) << p << "," << q << "," << l << "," << t;
          } else {
            ASSERT_TRUE(got.is_infinite()) << p << "," << q << "," << l << "," << t;
            ASSERT_NE((l > t ? l - t : t - l) % std::gcd(p, q), 0u);
          }
        }
}

TEST(ThetaGFormula, ConsecutiveCycleSpecialization) {
  // q = p-1, 1 <= d = l-t < p: t - 1 + (p-1)(p-d).
  for (std::uint64_t p = 2; p <= 10; ++p)
    for (std::uint64_t d = 1; d < p; ++d)
      for (std::uint64_t t = 1; t <= 10; ++t)
        EXPECT_EQ(theta_G(p, p - 1, t + d, t), Theta::finite(t - 1 + (p - 1) * (p - d)));
}

// The closed form always bounds the index from above, and is exact while it
// stays below LCM(p,q). Above that, shorter collisions through the crossing
// arc can win; when no common length exists the index is still finite.
TEST(ThetaGFormula, AgreesWithDirectComputationOnBuiltMembers) {
  int exact = 0;
  int bounded_only = 0;
  int formula_infinite = 0;
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t p = 1; p <= n; ++p)
      for (std::size_t q = 1; p + q + 1 <= n; ++q)
        for (std::size_t t = 1; t <= n; ++t)
          for (std::size_t l = 2; l <= n; ++l) {
            if (!realize_G(p, q, l, t, n)) continue;
            const Theta core = stable_index(build_G(p, q, l, t, n));
            const Theta formula = theta_G(p, q, l, t);
            ASSERT_TRUE(core.is_finite());
            EXPECT_LE(core.value(), std::lcm<std::uint64_t>(p, q) + l);
            if (formula.is_infinite()) {
              ++formula_infinite;
              continue;
            }
            ASSERT_LE(core, formula) << "G(" << p << "," << q << "," << l << "," << t << ")@" << n;
            if (formula.value() < std::lcm<std::uint64_t>(p, q)) {
              ASSERT_EQ(core, formula) << "G(" << p << "," << q << "," << l << "," << t << ")@" << n;
              ++exact;
            } else {
              bounded_only += core == formula ? 0 : 1;
            }
          }
  EXPECT_EQ(exact, 562);
  EXPECT_EQ(bounded_only, 362);
  EXPECT_EQ(formula_infinite, 192);
}

// ------------------------------------------------------------------ f_set

TEST(FSet, KnownIntervals) {
  EXPECT_EQ(f_set(3, 2, 1, 7), interval(4, 6));
  EXPECT_EQ(f_set(5, 3, 2, 9), interval(12, 14));
  EXPECT_EQ(f_set(7, 3, 4, 11), interval(18, 20));
}

TEST(FSet, NonCoprimeExampleByEnumeration) {
  std::set<std::uint64_t> expected;
  for (std::size_t t = 1; t <= 12; ++t)
    if (min_order_G(6, 4, t + 4, t) <= 12)
      if (auto v = brute_theta_G(6, 4, t + 4, t)) expected.insert(*v);
  EXPECT_EQ(expected, (std::set<std::uint64_t>{4, 5, 6, 7}));
  EXPECT_EQ(f_set(6, 4, 4, 12), expected);
}

TEST(FSet, ConsecutiveCycleIntervals) {
  for (std::size_t n = 7; n <= 14; ++n)
    for (std::size_t p = 3; p <= n / 2; ++p) {
      const std::uint64_t half_up = (n + 1) / 2;
      const std::uint64_t half_down = n / 2;
      EXPECT_EQ(f_set(p, p - 1, 1, n), interval((p - 1) * (p - 1), (p - 1) * (p - 1) + half_up - 2))
          << "p=" << p << " n=" << n;
      EXPECT_EQ(f_set(p, p - 1, 2, n), interval((p - 1) * (p - 2), (p - 1) * (p - 2) + half_down - 2))
          << "p=" << p << " n=" << n;
    }
}

TEST(FSet, Preconditions) {
  expect_error(ErrorKind::ParameterOutOfRange, [] { f_set(3, 3, 1, 10); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { f_set(3, 2, 0, 10); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { f_set(3, 2, 1, 5); });
}

// -------------------------------------------------------------- padding

TEST(PadIsolated, Examples) {
  EXPECT_TRUE(stable_index(pad_isolated(build_cycle(3), 5)).is_infinite());
  EXPECT_EQ(stable_index(pad_isolated(build_g(2, 2, 3), 7)), Theta::finite(6));
  EXPECT_EQ(pad_isolated(build_lollipop(4), 4), build_lollipop(4));
  expect_error(ErrorKind::ShrinkNotAllowed, [] { pad_isolated(build_cycle(3), 2); });
}

TEST(PadIsolated, PreservesIndexOnAllOrder3Digraphs) {
  for (Code code = 0; code < code_space(3); ++code) {
    const auto d = decode(3, code);
    ASSERT_EQ(stable_index(pad_isolated(d, 5)), stable_index(d)) << code;
  }
}

// --------------------------------------------------------- number theory

TEST(MinCoeff, Examples) {
  EXPECT_EQ(min_coeff(5, 3), 4u);
  EXPECT_EQ(min_coeff(3, 2), 2u);
  EXPECT_EQ(min_coeff(7, 5), 6u);
  expect_error(ErrorKind::NotCoprime, [] { min_coeff(6, 4); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { min_coeff(3, 5); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { min_coeff(3, 1); });
}

TEST(MinCoeff, EqualsPMinusOne) {
  for (std::uint64_t p = 3; p <= 40; ++p)
    for (std::uint64_t q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      // Independent double loop over (u, v).
      std::optional<std::uint64_t> brute;
      for (std::uint64_t u = 0; u <= 2 * p && !brute; ++u)
        for (std::uint64_t v = 0; v <= 2 * q; ++v)
          if (static_cast<std::int64_t>(u * q) - static_cast<std::int64_t>(v * p) ==
              static_cast<std::int64_t>(p - q)) {
            brute = u;
            break;
          }
      ASSERT_EQ(brute, p - 1);
      ASSERT_EQ(min_coeff(p, q), p - 1) << p << "," << q;
    }
}

TEST(ResiduePermutation, Examples) {
  EXPECT_TRUE(residue_permutation_check(5, 3));
  EXPECT_TRUE(residue_permutation_check(2, 1));
  EXPECT_TRUE(residue_permutation_check(7, 3));
  EXPECT_TRUE(residue_permutation_check(1, 4));
  expect_error(ErrorKind::NotCoprime, [] { residue_permutation_check(6, 4); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { residue_permutation_check(0, 4); });
}

TEST(ResiduePermutation, HoldsForAllCoprimePairs) {
  for (std::uint64_t p = 1; p <= 60; ++p)
    for (std::uint64_t q = 1; q <= 60; ++q)
      if (std::gcd(p, q) == 1) ASSERT_TRUE(residue_permutation_check(p, q)) << p << "," << q;
}

// ----------------------------------------------------------- FamilySpec

TEST(FamilySpec, ParseFormatBuild) {
  for (const char* text : {"cycle:9", "complete:4", "lollipop:5", "g:2,3,3", "G:4,3,3,1,8"}) {
    const auto spec = parse_family(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(build(spec).order(), order_of(spec));
  }
  EXPECT_EQ(parse_family("g:2,2,3"), FamilySpec(DumbbellSpec{2, 2, 3}));
  EXPECT_EQ(predicted_theta(parse_family("g:2,3,3")), Theta::finite(7));
  EXPECT_EQ(predicted_theta(parse_family("lollipop:6")), Theta::finite(6));
  EXPECT_TRUE(predicted_theta(parse_family("cycle:4")).is_infinite());
  EXPECT_EQ(stable_index(build(parse_family("g:2,3,3"))), Theta::finite(7));
}

TEST(FamilySpec, RejectsMalformed) {
  for (const char* text : {"cycle", "cycle:", "cycle:x", "g:1,2", "G:1,2,3,4", "blob:3", "g:1,,2"})
    expect_error(ErrorKind::ParseError, [&] { parse_family(text); });
  expect_error(ErrorKind::ParameterOutOfRange, [] { build(parse_family("g:0,2,3")); });
}

}  // namespace
}  // namespace stabidx
