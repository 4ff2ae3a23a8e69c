#include <gtest/gtest.h>

#include "laws.hpp"
#include "orientals/canonical.hpp"
#include "orientals/simplicial.hpp"
#include "support.hpp"

using namespace orientals;
using namespace testing_support;

TEST(Cone, OnTheDegenerateEdge) {
  const OrMorphism c = cone(2, fixture("degenerate_edge1"));
  EXPECT_EQ(c, fixture("gamma_z"));
  EXPECT_EQ(c.terminus(), 2);
  // The rank follows the vertex count: every source vertex but the apex
  // misses the terminus.
  EXPECT_EQ(c.rank(), 2);
  EXPECT_EQ(c.corank(), 0);
  EXPECT_TRUE(is_cone(c));
  EXPECT_FALSE(is_cone(fixture("z")));
}

TEST(Cone, RejectsBadApex) {
  EXPECT_THROW(cone(1, fixture("degenerate_edge1")), ConeError);
  EXPECT_THROW(cone(3, fixture("degenerate_edge1")), ConeError);
  EXPECT_NO_THROW(cone(2, fixture("edge01")));
}

TEST(Gamma, SelectsTermsAtTheTerminus) {
  EXPECT_EQ(gamma(fixture("z")), fixture("gamma_z"));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(gamma(identity(n)), identity(n));
  EXPECT_EQ(gamma(fixture("degenerate_edge1")), fixture("vertex1"));
}

TEST(Alpha, OfTheCompositeTriangle) {
  const OrMorphism z = fixture("z");
  EXPECT_EQ(alpha(1, z), fixture("eps1_edge01"));
  EXPECT_EQ(alpha(0, z), fixture("edge01"));
  EXPECT_EQ(beta(z), fixture("gamma_z"));
  EXPECT_THROW(alpha(2, z), IndexError);
  EXPECT_THROW(alpha(-1, z), IndexError);
}

TEST(Decompose, TheCompositeTriangle) {
  const CanonicalDecomposition d = decompose(fixture("z"));
  EXPECT_EQ(d.t, 2);
  EXPECT_EQ(d.r, 2);
  EXPECT_EQ(d.s, 0);
  EXPECT_EQ(d.gamma, fixture("gamma_z"));
  ASSERT_EQ(d.alphas.size(), 2u);
  EXPECT_EQ(d.alphas[0], fixture("eps1_edge01"));
  EXPECT_EQ(d.alphas[1], fixture("edge01"));
  EXPECT_EQ(recompose(d), fixture("z"));
}

TEST(Decompose, IdentityRecomposes) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(recompose(decompose(identity(n))), identity(n));
}

TEST(Decompose, ChangedComponentChangesResult) {
  CanonicalDecomposition d = decompose(fixture("z"));
  d.alphas[0] = degeneracy(0, fixture("edge01"));
  bool differs = true;
  try {
    differs = recompose(d) != fixture("z");
  } catch (const Error&) {
  }
  EXPECT_TRUE(differs);
}

namespace {

void expect_clean(const laws::Tally& t, const char* what) {
  EXPECT_TRUE(t.ok()) << what << ": " << t.summary();
}

}  // namespace

TEST(CanonicalLaws, HoldOnSmallTargets) {
  for (int n = 0; n <= 2; ++n) {
    laws::CanonicalTallies c;
    laws::canonical(n, 4, c);
    expect_clean(c.recompose, "recomposition");
    expect_clean(c.gamma_contract, "gamma contract");
    if (n >= 1) {
      expect_clean(c.alpha_contract, "alpha contract");
      expect_clean(c.cones, "cone laws");
      expect_clean(c.faces, "faces below the rank");
      expect_clean(c.lambda_stages, "lambda stages");
    }
    if (n >= 2) expect_clean(c.wedge_images, "wedge images");
  }
}
