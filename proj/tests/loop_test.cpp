#include <gtest/gtest.h>

#include "bolnet/group_algorithms.hpp"
#include "bolnet/loop.hpp"
#include "bolnet/loop_maps.hpp"
#include "support.hpp"

using namespace bolnet;

namespace {

constexpr Element e = 0, f = 1, f2 = 2, f3 = 3, g = 4, fg = 5, f2g = 6, f3g = 7;

Element code(int i, int j) { return static_cast<Element>(((i % 4 + 4) % 4) + 4 * j); }

template <typename Fn>
void expect_code(ErrorCode want, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), want) << err.what();
  }
}

}  // namespace

TEST(Loop, BuiltinsFollowTheirRules) {
  auto b1 = builtin("B1");
  auto b2 = builtin("B2");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      for (const auto* l : {&b1, &b2}) {
        EXPECT_EQ(l->mul(code(i, 0), code(j, 0)), code(i + j, 0));
        EXPECT_EQ(l->mul(code(i, 0), code(j, 1)), code(i + j, 1));
      }
      EXPECT_EQ(b1.mul(code(i, 1), code(j, 0)), code(i + j, 1));
      EXPECT_EQ(b1.mul(code(i, 1), code(j, 1)), code(2 - i + j, 0));
      EXPECT_EQ(b2.mul(code(i, 1), code(j, 0)), code(i - j + 2 * i * j, 1));
      EXPECT_EQ(b2.mul(code(i, 1), code(j, 1)), code(i - j + 2 * i * j, 0));
    }
}

TEST(Loop, ExampleEntries) {
  auto b1 = builtin("B1");
  EXPECT_EQ(b1.mul(g, g), f2);
  EXPECT_EQ(b1.mul(fg, f), f2g);
  auto b2 = builtin("B2");
  EXPECT_EQ(b2.mul(fg, f), f2g);
  EXPECT_EQ(b2.mul(g, g), e);
  auto printed = builtin("B2-printed");
  EXPECT_EQ(printed.mul(fg, f), g);
  EXPECT_EQ(b1.name(f3g), "f^3g");
  EXPECT_EQ(b1.name(e), "e");
}

TEST(Loop, BuiltinsAreProperLeftBolLoops) {
  for (const auto& name : builtin_names()) {
    auto l = builtin(name);
    EXPECT_EQ(l.order(), 8u);
    EXPECT_TRUE(check_property(l, LoopProperty::LeftBol)) << name;
    EXPECT_TRUE(testsupport::naive_left_bol(l)) << name;
    EXPECT_FALSE(check_property(l, LoopProperty::Associative)) << name;
    EXPECT_TRUE(check_property(l, LoopProperty::Lip)) << name;
    EXPECT_TRUE(check_property(l, LoopProperty::Lcc)) << name;
  }
}

TEST(Loop, Nuclei) {
  auto b1 = builtin("B1");
  EXPECT_EQ(nucleus(b1, NucleusSide::Left), (std::vector<Element>{e, f2}));
  EXPECT_EQ(nucleus(b1, NucleusSide::Middle), (std::vector<Element>{e, f2}));
  EXPECT_EQ(nucleus(b1, NucleusSide::Right), (std::vector<Element>{e, f, f2, f3}));
  auto b2 = builtin("B2");
  EXPECT_EQ(nucleus(b2, NucleusSide::Left), (std::vector<Element>{e, f2}));
  EXPECT_EQ(nucleus(b2, NucleusSide::Right), (std::vector<Element>{e, f2, g, f2g}));
  EXPECT_EQ(abelian_invariants(subgroup_as_permutation_group(b1, nucleus(b1, NucleusSide::Right))),
            (std::vector<std::size_t>{4}));
  EXPECT_EQ(abelian_invariants(subgroup_as_permutation_group(b2, nucleus(b2, NucleusSide::Right))),
            (std::vector<std::size_t>{2, 2}));
}

TEST(Loop, InverseMaps) {
  EXPECT_EQ(*lip_inverse_map(builtin("B1")), Permutation::from_cycles(8, {{1, 3}, {4, 6}, {5, 7}}));
  EXPECT_EQ(*lip_inverse_map(builtin("B2")), Permutation::from_cycles(8, {{1, 3}, {5, 7}}));
  EXPECT_EQ(*lip_inverse_map(builtin("B2-printed")), Permutation::from_cycles(8, {{1, 3}}));
}

TEST(Loop, PrintedTableIsIsotopicButNotIsomorphic) {
  auto b2 = builtin("B2");
  auto printed = builtin("B2-printed");
  EXPECT_FALSE(is_isomorphic(b2, printed).has_value());
  EXPECT_TRUE(is_isotopic(b2, printed));
  EXPECT_EQ(automorphism_group(printed).order(), 4u);
  EXPECT_FALSE(is_isotopic(builtin("B1"), b2));
}

TEST(Loop, GroupsSatisfyEveryIdentity) {
  for (const auto& t : testsupport::small_groups()) {
    for (auto p : {LoopProperty::LeftBol, LoopProperty::Lcc, LoopProperty::Associative, LoopProperty::Lip})
      EXPECT_TRUE(check_property(t.table, p)) << t.name;
    EXPECT_EQ(nucleus(t.table, NucleusSide::Left).size(), t.table.order());
  }
}

TEST(Loop, WitnessIsACounterexample) {
  auto b1 = builtin("B1");
  auto r = check_property(b1, LoopProperty::Associative);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 3u);
  Element x = r.witness[0], y = r.witness[1], z = r.witness[2];
  EXPECT_NE(b1.mul(b1.mul(x, y), z), b1.mul(x, b1.mul(y, z)));
}

TEST(Loop, ValidationErrors) {
  expect_code(ErrorCode::NotLatin, [] { LoopTable::from_rows({{0, 1}, {1, 1}}); });
  expect_code(ErrorCode::BadEntry, [] { LoopTable::from_rows({{0, 1}, {1, 2}}); });
  expect_code(ErrorCode::BadEntry, [] { LoopTable::from_rows({{0, 1}, {1}}); });
  expect_code(ErrorCode::NoUnit, [] { LoopTable::from_rows({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}); });
  expect_code(ErrorCode::NoUnit, [] { LoopTable::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); });
  expect_code(ErrorCode::UnknownName, [] { builtin("B3"); });
}

TEST(Loop, NormalizeMovesTheUnit) {
  // Z3 with unit labelled 2
  auto l = LoopTable::from_rows({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, true);
  EXPECT_EQ(l.mul(0, 1), 1u);
  EXPECT_TRUE(is_isomorphic(l, cyclic_loop(3)).has_value());
}

TEST(Loop, DegenerateOrders) {
  auto one = cyclic_loop(1);
  EXPECT_EQ(one.order(), 1u);
  EXPECT_TRUE(check_property(one, LoopProperty::LeftBol));
  EXPECT_TRUE(automorphism_group(one).is_trivial());
  auto two = cyclic_loop(2);
  EXPECT_TRUE(check_property(two, LoopProperty::Associative));
}

TEST(Loop, RelabelTransportsTheProduct) {
  std::mt19937 rng(17);
  auto b1 = builtin("B1");
  for (int trial = 0; trial < 20; ++trial) {
    auto p = testsupport::random_unit_fixing(8, rng);
    auto m = b1.relabel(p);
    for (Element x = 0; x < 8; ++x)
      for (Element y = 0; y < 8; ++y) EXPECT_EQ(p(b1.mul(x, y)), m.mul(p(x), p(y)));
    auto iso = is_isomorphic(b1, m);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(b1.relabel(*iso), m);
    EXPECT_EQ(m.name(p(g)), "g");
  }
  expect_code(ErrorCode::BadEntry, [&] { b1.relabel(Permutation::from_cycles(8, {{0, 1}})); });
}

TEST(Loop, IsomorphismMatchesBruteForce) {
  // Every pair among a pool of order-6 loops: search result agrees with trying all 5! relabelings.
  auto loops = testsupport::random_order6_loops();
  loops.erase(loops.begin() + 8, loops.end());
  std::mt19937 rng(23);
  loops.push_back(loops[0].relabel(testsupport::random_unit_fixing(6, rng)));
  auto perms = testsupport::unit_fixing_permutations(6);
  for (const auto& a : loops)
    for (const auto& b : loops) {
      bool brute = false;
      for (const auto& p : perms)
        if (a.relabel(p) == b) {
          brute = true;
          break;
        }
      EXPECT_EQ(is_isomorphic(a, b).has_value(), brute);
    }
}

TEST(Loop, PrincipalIsotopeIsALoop) {
  auto b1 = builtin("B1");
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) {
      auto iso = principal_isotope(b1, a, b);
      EXPECT_TRUE(check_property(iso, LoopProperty::LeftBol));
      EXPECT_TRUE(is_isotopic(iso, b1));
    }
  EXPECT_EQ(principal_isotope(b1, 0, 0), b1);
}

TEST(Loop, InducedSubloopNeedsClosure) {
  auto b1 = builtin("B1");
  auto sub = induced_subloop(b1, {e, f, f2, f3});
  EXPECT_TRUE(is_isomorphic(sub, cyclic_loop(4)).has_value());
  expect_code(ErrorCode::NotSubset, [&] { induced_subloop(b1, {e, f, g}); });
}

TEST(Loop, TranslationsAndDivisions) {
  auto l = builtin("B2");
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      EXPECT_EQ(left_translation(l, x)(y), l.mul(x, y));
      EXPECT_EQ(right_translation(l, y)(x), l.mul(x, y));
      EXPECT_EQ(l.mul(x, l.ldiv(x, y)), y);
      EXPECT_EQ(l.mul(l.rdiv(x, y), y), x);
    }
  EXPECT_EQ(section(l).size(), 8u);
}
