#include <gtest/gtest.h>

#include <set>

#include "oracles/tuple_model.hpp"
#include "orientals/simplicial.hpp"
#include "support.hpp"

using namespace orientals;
using namespace testing_support;

TEST(Face, OfIdentityTriangle) {
  EXPECT_EQ(face(1, fixture("iota2")), fixture("face1_iota2"));
  EXPECT_EQ(face(2, fixture("iota2")).profile().vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(face(0, face(1, identity(2))), face(0, face(0, identity(2))));
  EXPECT_EQ(iterated_face(1, 2, identity(2)), morphism(0, 2, {{"[0]", "[0]"}}));
}

TEST(Face, IndexAndDegreeErrors) {
  EXPECT_THROW(face(3, identity(2)), IndexError);
  EXPECT_THROW(face(-1, identity(2)), IndexError);
  EXPECT_THROW(face(0, identity(0)), DegreeError);
  EXPECT_THROW(degeneracy(3, identity(2)), IndexError);
}

TEST(Degeneracy, ClausesOnSmallInputs) {
  EXPECT_EQ(degeneracy(0, fixture("vertex1")), fixture("degenerate_edge1"));
  EXPECT_EQ(degeneracy(1, fixture("edge01")), fixture("eps1_edge01"));
  EXPECT_EQ(iterated_degeneracy(1, 0, fixture("z")), fixture("z"));
  EXPECT_EQ(iterated_degeneracy(0, 2, fixture("vertex1")), degeneracy(0, degeneracy(0, fixture("vertex1"))));
}

TEST(Degeneracy, ImageCharacterization) {
  EXPECT_TRUE(is_degenerate_at(0, fixture("degenerate_edge1")));
  EXPECT_FALSE(is_degenerate_at(0, identity(2)));
  EXPECT_FALSE(is_degenerate_at(1, identity(2)));
  EXPECT_TRUE(is_degenerate_at(1, fixture("eps1_edge01")));
  EXPECT_FALSE(is_degenerate_at(0, fixture("eps1_edge01")));
  EXPECT_THROW(is_degenerate_at(2, identity(2)), IndexError);

  for (int n = 0; n <= 2; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int i = 0; i < m; ++i) {
        std::set<std::string> image;
        for (const OrMorphism& y : all_or(m - 1, n)) image.insert(degeneracy(i, y).key());
        for (const OrMorphism& x : all_or(m, n)) {
          const bool degenerate = is_degenerate_at(i, x);
          EXPECT_EQ(degenerate, image.contains(x.key())) << describe(x);
          if (degenerate) EXPECT_EQ(degeneracy(i, face(i, x)), x);
        }
      }
}

TEST(Operations, AgreeWithTupleModel) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const OrMorphism& x : all_or(m, n)) {
        const auto X = oracle::from(x);
        for (int i = 0; i <= m; ++i) {
          EXPECT_EQ(oracle::from(face(i, x)), oracle::face(i, X, m));
          EXPECT_EQ(oracle::from(degeneracy(i, x)), oracle::degeneracy(i, X, m));
        }
      }
}

TEST(Operations, SimplicialIdentities) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const OrMorphism& x : all_or(m, n)) {
        for (int i = 0; i <= m; ++i) {
          EXPECT_EQ(face(i, degeneracy(i, x)), x);
          EXPECT_EQ(face(i + 1, degeneracy(i, x)), x);
          for (int j = i; j <= m; ++j)
            EXPECT_EQ(degeneracy(i, degeneracy(j, x)), degeneracy(j + 1, degeneracy(i, x)));
          for (int j = 0; j <= m + 1; ++j) {
            if (j < i) EXPECT_EQ(face(j, degeneracy(i, x)), degeneracy(i - 1, face(j, x)));
            if (j > i + 1) EXPECT_EQ(face(j, degeneracy(i, x)), degeneracy(i, face(j - 1, x)));
          }
        }
        if (m < 2) continue;
        for (int j = 1; j <= m; ++j)
          for (int i = 0; i < j; ++i) EXPECT_EQ(face(i, face(j, x)), face(j - 1, face(i, x)));
      }
}

TEST(Operations, PreserveMembershipOnSignedMaps) {
  // The group-level operations agree with the certified ones.
  for (const OrMorphism& x : all_or(2, 2))
    for (int i = 0; i <= 2; ++i) {
      EXPECT_EQ(face(i, x.map()), face(i, x).map());
      EXPECT_EQ(degeneracy(i, x.map()), degeneracy(i, x).map());
    }
}
