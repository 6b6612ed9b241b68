#include <gtest/gtest.h>

#include <set>

#include "bolnet/net.hpp"
#include "bolnet/net_report.hpp"
#include "support.hpp"

using namespace bolnet;

namespace {

struct NetFixture {
  LoopTable loop;
  GammaEnumeration gamma;
};

const NetFixture& fixture(const std::string& name) {
  static std::map<std::string, NetFixture> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto l = builtin(name);
    it = cache.emplace(name, NetFixture{l, enumerate_gamma(l)}).first;
  }
  return it->second;
}

// A loop of order 5 that is not left Bol, picked from the random pool.
LoopTable non_bol_loop() {
  std::mt19937 rng(99);
  for (;;) {
    auto l = testsupport::random_loop(5, rng);
    if (!testsupport::naive_left_bol(l)) return l;
  }
}

Permutation sigma_b2() {
  auto l = builtin("B2");
  return DirCollineation{left_translation(l, 2), Permutation::identity(8)}.point_map();
}

}  // namespace

TEST(Net, PointsAndLines) {
  auto l = builtin("B1");
  std::set<std::vector<Point>> lines;
  for (int cls = 0; cls < 3; ++cls)
    for (Element c = 0; c < 8; ++c) {
      auto pts = line_points(l, {static_cast<LineClass>(cls), c});
      EXPECT_EQ(pts.size(), 8u);
      lines.insert(pts);
      for (Point p : pts) EXPECT_EQ(line_through(l, static_cast<LineClass>(cls), point_at(8, p)).c, c);
    }
  EXPECT_EQ(lines.size(), 24u);
  EXPECT_EQ(point_index(8, {3, 5}), 29u);
  EXPECT_EQ(point_at(8, 29).x, 3u);
}

TEST(Net, GammaOrders) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    EXPECT_EQ(fx.gamma.group.order(), 128u) << name;
    EXPECT_EQ(fx.gamma.pairs.size(), 128u);
    auto g0 = stabilizer(fx.loop, fx.gamma.group, StabilizerTarget::Origin);
    auto gh = stabilizer(fx.loop, fx.gamma.group, StabilizerTarget::HorizontalLine);
    auto gv = stabilizer(fx.loop, fx.gamma.group, StabilizerTarget::VerticalLine);
    EXPECT_EQ(g0.order(), 8u);
    EXPECT_EQ(gh.order(), 16u);
    EXPECT_EQ(gv.order(), 64u);
    auto p = orbit_of_origin(fx.gamma.group);
    EXPECT_EQ(p.size(), 16u);
    EXPECT_EQ(p.size() * g0.order(), fx.gamma.group.order());
  }
}

TEST(Net, EveryCollineationPreservesLineClasses) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    for (const auto& dc : fx.gamma.pairs) {
      auto full = as_full_collineation(fx.loop, dc.point_map());
      ASSERT_TRUE(full.has_value());
      EXPECT_EQ(full->direction_action[0], LineClass::Vertical);
      EXPECT_EQ(full->direction_action[1], LineClass::Horizontal);
      EXPECT_EQ(full->direction_action[2], LineClass::Transversal);
      EXPECT_TRUE(is_dir_collineation(fx.loop, dc.alpha, dc.beta));
    }
  }
}

TEST(Net, GammaIsGeneratedByNAndTheOriginStabilizer) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    auto n = N_group(fx.loop);
    auto g0 = stabilizer(fx.loop, fx.gamma.group, StabilizerTarget::Origin);
    EXPECT_TRUE(n.is_subgroup_of(fx.gamma.group));
    EXPECT_TRUE(is_normal(fx.gamma.group, n));
    auto h = join(n, g0);
    if (std::string(name) == "B1") {
      EXPECT_EQ(h, fx.gamma.group);
    } else {
      EXPECT_EQ(h.order(), 64u);
      EXPECT_EQ(join(h, GeneratedGroup::generate(64, {sigma_b2()})), fx.gamma.group);
    }
    // the origin stabilizer is the diagonal copy of the automorphism group
    EXPECT_EQ(g0, diagonal_automorphisms(fx.loop));
  }
}

TEST(Net, NGroupAndProjection) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    auto n = N_group(fx.loop);
    EXPECT_EQ(n.order(), 16u);
    EXPECT_TRUE(phi_kernel(fx.loop).is_trivial());
    auto image = phi_image(fx.loop, n);
    EXPECT_EQ(image, translation_group(fx.loop));
    EXPECT_EQ(orbit(image, 0).size(), 8u);  // transitive on horizontal lines
  }
}

TEST(Net, NIsRegularOnTheOrbitForB1) {
  const auto& fx = fixture("B1");
  auto n = N_group(fx.loop);
  auto p = orbit_of_origin(fx.gamma.group);
  EXPECT_EQ(orbit(n, 0), p);
  EXPECT_EQ(n.order(), p.size());
  std::set<Element> columns;
  for (Point q : p) columns.insert(point_at(8, q).x);
  EXPECT_EQ(columns.size(), 2u);
  for (Element c : columns)
    for (Point q : line_points(fx.loop, {LineClass::Vertical, c}))
      EXPECT_TRUE(std::binary_search(p.begin(), p.end(), q));
}

TEST(Net, StabilizersOfLinesGivePseudoAutomorphisms) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    for (const auto& dc : fx.gamma.pairs) {
      if (dc.beta(0) == 0) {
        EXPECT_TRUE(is_pseudo_automorphism(fx.loop, dc.beta, PseudoSide::Left, dc.alpha(0)));
      }
      if (dc.alpha(0) == 0) {
        EXPECT_TRUE(is_pseudo_automorphism(fx.loop, dc.alpha, PseudoSide::Right, dc.beta(0)));
      }
    }
  }
}

TEST(Net, NGeneratorsValidateExactlyForLeftBolLoops) {
  std::vector<std::pair<std::string, LoopTable>> cases{
      {"B1", builtin("B1")}, {"B2", builtin("B2")}, {"non-Bol", non_bol_loop()},
      {"group", testsupport::small_groups()[12].table}};
  for (const auto& [name, l] : cases) {
    bool all = true;
    for (Element a = 0; a < l.order(); ++a) {
      Permutation lam = left_translation(l, a);
      all &= is_dir_collineation(l, right_translation(l, a) * lam, lam.inverse());
    }
    EXPECT_EQ(all, bool(check_property(l, LoopProperty::LeftBol))) << name;
    if (all) {
      EXPECT_NO_THROW(N_generators(l));
    } else {
      try {
        N_generators(l);
        ADD_FAILURE() << name;
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::NotBol);
      }
    }
  }
}

TEST(Net, BolReflections) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    auto full = full_group(fx.loop, fx.gamma.group);
    std::map<Permutation, Element> axis_of;
    for (Element m = 0; m < 8; ++m) {
      auto s = bol_reflection(fx.loop, m);
      EXPECT_TRUE((s.point_map * s.point_map).is_identity());
      for (Point q : line_points(fx.loop, {LineClass::Vertical, m})) EXPECT_EQ(s.point_map(q), q);
      EXPECT_EQ(s.direction_action[0], LineClass::Vertical);
      EXPECT_EQ(s.direction_action[1], LineClass::Transversal);
      EXPECT_EQ(s.direction_action[2], LineClass::Horizontal);
      EXPECT_TRUE(full.contains(s.point_map));
      axis_of[s.point_map] = m;
    }
    for (const auto& g : full.elements())
      for (const auto& [s, m] : axis_of) {
        auto c = conjugate(s, g);
        ASSERT_TRUE(axis_of.count(c));
        // the axis of the conjugate is the image of the axis
        Point moved = g(point_index(8, {m, 0}));
        EXPECT_EQ(axis_of[c], point_at(8, moved).x);
      }
  }
}

TEST(Net, BolReflectionNeedsBolLoop) {
  try {
    bol_reflection(non_bol_loop(), 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotBol);
  }
}

TEST(Net, FullGroupHasGammaAsIndexTwoSubgroup) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    auto full = full_group(fx.loop, fx.gamma.group);
    EXPECT_EQ(full.order(), 256u);
    EXPECT_TRUE(is_normal(full, fx.gamma.group));
  }
}

TEST(Net, RecoordinatizationAtOrbitPoints) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    auto p = orbit_of_origin(fx.gamma.group);
    for (Point q = 0; q < 64; ++q) {
      bool iso = is_isomorphic(recoordinatize(fx.loop, point_at(8, q)), fx.loop).has_value();
      EXPECT_EQ(iso, std::binary_search(p.begin(), p.end(), q)) << name << " " << q;
    }
  }
}

TEST(Net, NElementsFixingTheUnitFixCompanionsOfJ) {
  for (const char* name : {"B1", "B2"}) {
    const auto& fx = fixture(name);
    auto j = *lip_inverse_map(fx.loop);
    std::vector<Element> companions;
    for (Element c = 0; c < 8; ++c)
      if (is_pseudo_automorphism(fx.loop, j, PseudoSide::Right, c)) companions.push_back(c);
    ASSERT_FALSE(companions.empty());
    const auto n = N_group(fx.loop);
    for (const auto& x : n.elements()) {
      auto dc = as_dir_collineation(8, x);
      if (dc.beta(0) != 0) continue;
      for (Element c : companions) EXPECT_EQ(dc.alpha(c), c) << name;
    }
  }
}

TEST(Net, GroupNetsAreTransitive) {
  for (const auto& t : testsupport::small_groups()) {
    if (t.table.order() > 6) continue;
    auto gamma = enumerate_gamma(t.table);
    EXPECT_EQ(orbit_of_origin(gamma.group).size(), t.table.order() * t.table.order()) << t.name;
  }
}

TEST(Net, EnumerationIsIndependentOfWorkers) {
  auto l = builtin("B2");
  auto one = enumerate_gamma(l, 1);
  auto three = enumerate_gamma(l, 3);
  EXPECT_EQ(one.pairs, three.pairs);
  EXPECT_EQ(one.group, three.group);
}

TEST(Net, EnumerationRejectsLargeLoops) {
  try {
    enumerate_gamma(cyclic_loop(kMaxEnumerationOrder + 1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::OrderTooLarge);
  }
}

TEST(Net, MakeDirCollineationFromGroupTranslations) {
  // In a group, x -> a x together with y -> y b is always a collineation.
  auto l = testsupport::small_groups()[12].table;
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) {
      auto dc = make_dir_collineation(l, right_translation(l, b), a);
      ASSERT_TRUE(dc.has_value());
      EXPECT_EQ(dc->alpha, left_translation(l, a));
    }
}

TEST(Net, StructureReports) {
  auto r1 = structure_report(builtin("B1"));
  EXPECT_EQ(r1.identified, NamedLoop::B1);
  for (const auto& c : r1.checks) EXPECT_TRUE(c.passed) << c.id << ": " << c.value;
  auto r2 = structure_report(builtin("B2"));
  EXPECT_EQ(r2.identified, NamedLoop::B2);
  for (const auto& c : r2.checks) {
    if (c.id == "structure.lambda-unique") {
      // two abelian normal regular subgroups exist; see README
      EXPECT_FALSE(c.passed);
      EXPECT_NE(c.value.find('2'), std::string::npos);
    } else {
      EXPECT_TRUE(c.passed) << c.id << ": " << c.value;
    }
  }
  auto rg = structure_report(testsupport::small_groups()[12].table);
  EXPECT_EQ(rg.identified, NamedLoop::None);
}
