#include <gtest/gtest.h>

#include "orientals/axioms.hpp"
#include "orientals/mutants.hpp"
#include "support.hpp"

using namespace orientals;
using namespace testing_support;

namespace {

std::size_t violations_of(const LawReport& r, const std::string& prefix) {
  std::size_t k = 0;
  for (const auto& t : r.tallies)
    if (t.law.rfind(prefix, 0) == 0) k += t.violations;
  return k;
}

}  // namespace

TEST(Axioms, HoldOnOrientals) {
  for (int n = 0; n <= 2; ++n) {
    const LawReport r = check_axioms(OrCarrier{}, graded_or(n, 4));
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_GT(r.total_instances(), 0u);
  }
}

TEST(Axioms, EveryFamilyIsExercised) {
  const LawReport r = check_axioms(OrCarrier{}, graded_or(2, 4));
  for (const char* law : {"axiom 0", "axiom 1", "axiom 2", "axiom 3", "axiom 4", "axiom 5", "axiom 6", "axiom 7"}) {
    std::size_t k = 0;
    for (const auto& t : r.tallies)
      if (t.law.rfind(law, 0) == 0) k += t.instances;
    EXPECT_GT(k, 0u) << law;
  }
}

TEST(Axioms, EmptySampleIsVacuous) {
  const LawReport r = check_axioms(OrCarrier{}, {});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.total_instances(), 0u);
}

TEST(Axioms, SampleMustBeFaceClosed) {
  std::vector<std::vector<OrMorphism>> sample{{}, {fixture("edge01")}};
  EXPECT_THROW(check_axioms(OrCarrier{}, sample), SampleError);
}

TEST(DerivedLaws, HoldOnOrientals) {
  for (int n = 1; n <= 2; ++n) {
    const auto sample = graded_or(n, 4);
    const LawReport r = check_derived_laws(OrCarrier{}, sample, canonical_lambda_instances(sample));
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_GT(r.total_instances(), 0u);
  }
}

TEST(Mutants, WrongWedgeBreaksTheFaceAxiom) {
  const LawReport r = check_axioms(WrongWedgeCarrier{}, graded_or(1, 4));
  EXPECT_GT(violations_of(r, "axiom 1: face i gives y"), 0u) << r.summary();
}

TEST(Mutants, ShiftedDegeneracyBreaksSimplicialIdentities) {
  const LawReport r = check_axioms(ShiftedDegeneracyCarrier{}, graded_or(1, 4));
  EXPECT_GT(violations_of(r, "axiom 0"), 0u) << r.summary();
}

TEST(Mutants, ExchangeBreakingIsCaught) {
  const LawReport r = check_axioms(ExchangeBreakingCarrier{}, graded_or(2, 4));
  EXPECT_GT(violations_of(r, "axiom 7"), 0u) << r.summary();
}

TEST(Report, MergesTallies) {
  LawReport a, b;
  a.tally("x").instances = 2;
  b.tally("x").instances = 3;
  b.tally("x").violations = 1;
  b.witnesses.push_back({"x", "w"});
  a.merge(b);
  EXPECT_EQ(a.total_instances(), 5u);
  EXPECT_EQ(a.total_violations(), 1u);
  EXPECT_FALSE(a.ok());
  EXPECT_NE(a.summary().find("violation of x: w"), std::string::npos);
}
