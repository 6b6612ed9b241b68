#include <gtest/gtest.h>

#include <set>

#include "bolnet/search.hpp"
#include "support.hpp"

using namespace bolnet;

namespace {

std::set<LoopTable> naive_bol(std::size_t n) {
  std::set<LoopTable> out;
  for (const auto& t : testsupport::all_reduced_latin_squares(n))
    if (testsupport::naive_left_bol(t)) out.insert(t);
  return out;
}

}  // namespace

TEST(Search, MatchesNaiveEnumerationUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto found = enumerate_bol(n, false);
    std::set<LoopTable> got(found.begin(), found.end());
    EXPECT_EQ(got.size(), found.size()) << "duplicates at order " << n;
    EXPECT_EQ(got, naive_bol(n)) << "order " << n;
  }
}

TEST(Search, KnownTotals) {
  const std::size_t totals[] = {1, 1, 1, 4, 6, 80, 120};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_bol(n, false).size(), totals[n - 1]) << n;
}

TEST(Search, NoProperBolLoopsBelowEight) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_TRUE(enumerate_bol(n, true).empty()) << n;
}

TEST(Search, OutputIsSortedAndValid) {
  auto found = enumerate_bol(6, false);
  EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
  for (const auto& l : found) EXPECT_TRUE(check_property(l, LoopProperty::LeftBol));
}

TEST(Search, NonassociativeFilterIsConsistent) {
  for (std::size_t n : {4u, 6u}) {
    auto all = enumerate_bol(n, false);
    auto proper = enumerate_bol(n, true);
    std::vector<LoopTable> expect;
    for (const auto& l : all)
      if (!testsupport::naive_associative(l)) expect.push_back(l);
    EXPECT_EQ(proper, expect);
  }
}

TEST(Search, WorkerCountDoesNotChangeOutput) {
  EXPECT_EQ(enumerate_bol(6, false, 1), enumerate_bol(6, false, 4));
  EXPECT_EQ(enumerate_bol(7, false, 1), enumerate_bol(7, false, 3));
}

TEST(Search, OrderLimits) {
  try {
    enumerate_bol(kMaxSearchOrder + 1, false);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::OrderTooLarge);
  }
  try {
    enumerate_bol(0, false);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BadOrder);
  }
}

TEST(Search, CanonicalFormIsARelabelingInvariant) {
  std::mt19937 rng(31);
  for (const auto& l : {builtin("B1"), builtin("B2"), testsupport::random_order6_loops()[3]}) {
    auto c = canonical_form(l);
    EXPECT_EQ(canonical_form(c), c);
    EXPECT_TRUE(is_isomorphic(l, c).has_value());
    EXPECT_LE(c, l);
    for (int trial = 0; trial < 5; ++trial)
      EXPECT_EQ(canonical_form(l.relabel(testsupport::random_unit_fixing(l.order(), rng))), c);
  }
  EXPECT_NE(canonical_form(builtin("B1")), canonical_form(builtin("B2")));
}

TEST(Search, ClassifyIsotopes) {
  auto b1 = builtin("B1");
  std::vector<LoopTable> isotopes;
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) isotopes.push_back(principal_isotope(b1, a, b));
  auto r = classify(isotopes, Relation::Isotopy);
  EXPECT_EQ(r.total_found, 64u);
  EXPECT_EQ(r.nonassociative_count, 64u);
  EXPECT_EQ(r.isotopy_class_count(), 1u);
  std::size_t sum = 0;
  for (auto s : r.isomorphism_class_sizes) sum += s;
  EXPECT_EQ(sum, 64u);

  auto two = classify({b1, builtin("B2")}, Relation::Isotopy);
  EXPECT_EQ(two.isomorphism_class_count(), 2u);
  EXPECT_EQ(two.isotopy_class_count(), 2u);
  auto iso_only = classify({b1, builtin("B2")}, Relation::Isomorphism);
  EXPECT_TRUE(iso_only.isotopy_classes.empty());
  EXPECT_EQ(classify({}, Relation::Isotopy).total_found, 0u);
}

TEST(Search, ClassifyRejectsMixedOrders) {
  try {
    classify({cyclic_loop(3), cyclic_loop(4)}, Relation::Isomorphism);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::MixedOrders);
  }
}

TEST(Search, OrderSixGroupsSplitIntoTwoClasses) {
  auto r = classify(enumerate_bol(6, false), Relation::Isotopy);
  EXPECT_EQ(r.isomorphism_class_count(), 2u);  // C6 and S3
  EXPECT_EQ(r.isotopy_class_count(), 2u);
  EXPECT_EQ(r.nonassociative_count, 0u);
}

TEST(Search, OrderEight) {
  auto proper = enumerate_bol(8, true);
  EXPECT_EQ(proper.size(), 5040u);
  auto r = classify(proper, Relation::Isotopy);
  EXPECT_EQ(r.isomorphism_class_count(), 6u);
  EXPECT_EQ(r.isotopy_class_count(), 2u);
  std::set<LoopTable> reps(r.isomorphism_representatives.begin(), r.isomorphism_representatives.end());
  EXPECT_TRUE(reps.count(canonical_form(builtin("B1"))));
  EXPECT_TRUE(reps.count(canonical_form(builtin("B2"))));
  EXPECT_TRUE(reps.count(canonical_form(builtin("B2-printed"))));
  // B1 and B2 sit in different isotopy classes
  auto index_of = [&](const LoopTable& l) {
    return static_cast<std::size_t>(std::find(r.isomorphism_representatives.begin(),
                                              r.isomorphism_representatives.end(), canonical_form(l)) -
                                    r.isomorphism_representatives.begin());
  };
  auto class_of = [&](std::size_t iso) {
    for (std::size_t k = 0; k < r.isotopy_classes.size(); ++k)
      for (auto i : r.isotopy_classes[k])
        if (i == iso) return k;
    return r.isotopy_classes.size();
  };
  EXPECT_NE(class_of(index_of(builtin("B1"))), class_of(index_of(builtin("B2"))));
  EXPECT_EQ(class_of(index_of(builtin("B2"))), class_of(index_of(builtin("B2-printed"))));
}
