#include <gtest/gtest.h>

#include "rankalg/verify.hpp"

using namespace rankalg;
using namespace rankalg::verify;

TEST(Tiers, Contents) {
  EXPECT_EQ(tier_criteria("fast"), (std::vector<int>{1, 2, 3, 4, 5, 9, 10, 11, 12, 13}));
  EXPECT_EQ(tier_criteria("full").size(), 13u);
  EXPECT_EQ(tier_criteria("stretch").back(), 14);
  EXPECT_THROW(tier_criteria("bogus"), FormatError);
}

TEST(RunCriterion, UnknownId) { EXPECT_THROW(run_criterion(15), FormatError); }

TEST(RunCriterion, FirstPassesWithProvenance) {
  const auto r = run_criterion(1);
  EXPECT_EQ(r.status(), Status::Pass);
  for (const auto& c : r.checks) EXPECT_FALSE(c.provenance.empty()) << c.name;
  const auto j = to_json(r);
  EXPECT_EQ(j["criterion"], 1);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_FALSE(j.contains("seconds"));
}

TEST(RunCriterion, JsonIsDeterministic) { EXPECT_EQ(to_json(run_criterion(2)).dump(), to_json(run_criterion(2)).dump()); }

TEST(CriterionResult, StatusAggregation) {
  CriterionResult r;
  EXPECT_EQ(r.status(), Status::Skipped);
  r.checks.push_back({"a", Status::Pass, "", "", "", ""});
  r.checks.push_back({"i", Status::Skipped, "", "", "", "", false});
  EXPECT_EQ(r.status(), Status::Pass);
  r.checks.push_back({"b", Status::Skipped, "", "", "", ""});
  EXPECT_EQ(r.status(), Status::Partial);
  r.checks.push_back({"c", Status::Fail, "", "", "", ""});
  EXPECT_EQ(r.status(), Status::Fail);
}

TEST(QuadricCount, MatchesEngineForInversionN4) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(4));
  EXPECT_EQ(verify::detail::quadric_count(m.spec), 81u);
}
