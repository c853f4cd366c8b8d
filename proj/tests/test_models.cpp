#include <gtest/gtest.h>

#include <random>

#include "rankalg/random_posets.hpp"
#include "rankalg/rankalg.hpp"
#include "rankalg/reference_data.hpp"
#include "rankalg/verify.hpp"

using namespace rankalg;
using verify::detail::ratio;

namespace {

long row(const ModelMatrix& m, const std::string& r, const std::string& c) {
  return m.spec.a(static_cast<std::size_t>(m.row_index(r)), static_cast<std::size_t>(m.column_index(c)));
}

std::map<std::string, Rational> all_ones(const ModelMatrix& m) {
  std::map<std::string, Rational> p;
  for (const auto& r : m.spec.row_labels) p[r] = 1;
  return p;
}

}  // namespace

TEST(ModelMatrix, AscendingN3) {
  const auto m = model_matrix(ModelKind::Ascending, boolean_lattice(3));
  EXPECT_EQ(m.columns(), 6u);
  EXPECT_EQ(m.spec.column_sum(), 4);
  EXPECT_EQ(rational_rank(m.spec.a), 5u);
}

TEST(ModelMatrix, InversionColumnOfIdentity) {
  const auto m = model_matrix(ModelKind::Inversion, antichain(3));
  for (const auto& p : {"12", "13", "23"}) {
    EXPECT_EQ(row(m, std::string("u_{") + p + "}", "123"), 1);
    EXPECT_EQ(row(m, std::string("v_{") + p + "}", "123"), 0);
  }
}

TEST(ModelMatrix, BirkhoffChainIsOneColumn) {
  EXPECT_EQ(model_matrix(ModelKind::Birkhoff, chain_poset(4)).columns(), 1u);
}

TEST(ModelMatrix, WordsNeedIdealLattice) {
  std::mt19937_64 rng(5);
  const GradedPoset q = random_graded_poset(3, 3, rng);
  EXPECT_THROW(model_matrix(ModelKind::Inversion, q), Error);
  EXPECT_NO_THROW(model_matrix(ModelKind::Csiszar, q));
}

TEST(ModelKind, Parse) {
  EXPECT_EQ(parse_model_kind("csiszar"), ModelKind::Csiszar);
  EXPECT_EQ(parse_model_kind("alt-inversion"), ModelKind::AltInversion);
  EXPECT_THROW(parse_model_kind("bogus"), FormatError);
}

TEST(SufficientStats, Examples) {
  const auto asc = model_matrix(ModelKind::Ascending, boolean_lattice(3));
  const auto s = sufficient_stats(asc, {{"123", 1}});
  EXPECT_EQ(s.N, 1);
  Integer total = 0;
  for (const auto& v : s.values) total += v;
  EXPECT_EQ(total, 4);
  const auto z = sufficient_stats(asc, {});
  EXPECT_EQ(z.N, 0);
  for (const auto& v : z.values) EXPECT_EQ(v, 0);

  const auto csi = model_matrix(ModelKind::Csiszar, boolean_lattice(3));
  const auto c = sufficient_stats(csi, {{"123", 2}, {"321", 1}});
  std::map<std::string, Integer> by;
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    if (c.values[k] != 0) by[c.labels[k]] = c.values[k];
  EXPECT_EQ(by.size(), 6u);
  Integer sum = 0;
  for (const auto& [l, v] : by) sum += v;
  EXPECT_EQ(sum, 9);
}

TEST(PolytopeDimension, Examples) {
  EXPECT_EQ(polytope_dimension(model_matrix(ModelKind::Ascending, boolean_lattice(4))), 11);
  EXPECT_EQ(polytope_dimension(model_matrix(ModelKind::Csiszar, boolean_lattice(4))), 17);
  EXPECT_EQ(polytope_dimension(model_matrix(ModelKind::Birkhoff, antichain(3))), 4);
}

TEST(BirkhoffDimension, AntichainAndChain) {
  for (int n = 1; n <= 5; ++n) {
    const auto a = birkhoff_dimension(antichain(n));
    EXPECT_TRUE(a.Z.empty());
    EXPECT_EQ(a.C.size(), static_cast<std::size_t>(2 * n - 1));
    EXPECT_EQ(a.dim, (n - 1) * (n - 1));
    const auto c = birkhoff_dimension(chain_poset(n));
    EXPECT_EQ(c.Z.size(), static_cast<std::size_t>(n * n - n));
    EXPECT_EQ(c.C.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(c.dim, 0);
  }
}

TEST(BirkhoffDimension, ChainPlusPoint) {
  const auto d = birkhoff_dimension(constraint_poset(3, {{1, 2}}));
  EXPECT_EQ(d.Z, (std::set<std::pair<int, int>>{{1, 2}, {3, 1}}));
  EXPECT_EQ(d.C, (std::set<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 3}, {2, 1}, {3, 2}}));
  EXPECT_EQ(d.dim, 2);
  EXPECT_EQ(d.rank_dim, 2);
}

TEST(BirkhoffDimension, TwoChainsDisagreeWithRank) {
  // Z-avoiding permutations such as 1432 are not linear extensions of 1<2, 3<4
  try {
    birkhoff_dimension(constraint_poset(4, {{1, 2}, {3, 4}}));
    FAIL() << "expected a formula mismatch";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("formula mismatch"), std::string::npos);
  }
  EXPECT_EQ(polytope_dimension(model_matrix(ModelKind::Birkhoff, constraint_poset(4, {{1, 2}, {3, 4}}))), 4);
}

TEST(ModelInclusion, Examples) {
  const GradedPoset q = boolean_lattice(4);
  const auto birk = model_matrix(ModelKind::Birkhoff, q), asc = model_matrix(ModelKind::Ascending, q);
  const auto inv = model_matrix(ModelKind::Inversion, q), csi = model_matrix(ModelKind::Csiszar, q);
  EXPECT_TRUE(model_inclusion(birk, asc));
  EXPECT_TRUE(model_inclusion(inv, csi));
  EXPECT_FALSE(model_inclusion(birk, inv));
  EXPECT_THROW(model_inclusion(birk, model_matrix(ModelKind::Birkhoff, boolean_lattice(3))), Error);
}

TEST(EvaluateDistribution, Derangements) {
  const auto birk = model_matrix(ModelKind::Birkhoff, boolean_lattice(4));
  std::map<std::string, Rational> p;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) p["a_{" + std::to_string(i) + std::to_string(j) + "}"] = i == j ? 0 : 1;
  const auto d = evaluate_distribution(birk, p);
  std::size_t support = 0;
  for (const auto& [w, v] : d) {
    if (v == 0) continue;
    ++support;
    EXPECT_EQ(v, Rational(1, 9)) << w;
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_NE(w[k], static_cast<char>('1' + k));
  }
  EXPECT_EQ(support, 9u);
}

TEST(EvaluateDistribution, AllOnesUniform) {
  const auto asc = model_matrix(ModelKind::Ascending, boolean_lattice(3));
  for (const auto& [w, v] : evaluate_distribution(asc, all_ones(asc))) EXPECT_EQ(v, Rational(1, 6));
}

TEST(EvaluateDistribution, InversionWitness) {
  const auto inv = model_matrix(ModelKind::Inversion, boolean_lattice(4));
  const auto d = evaluate_distribution(inv, inversion_witness_parameters());
  std::set<std::string> support;
  for (const auto& [w, v] : d)
    if (v != 0) support.insert(w);
  EXPECT_EQ(support, (std::set<std::string>{"1234", "1342", "1423", "1243", "1324", "1432"}));
  std::vector<Rational> x;
  for (const auto& l : inv.spec.column_labels) x.push_back(distribution_value(d, l));
  const auto cubic = verify::detail::parse_in(reference::ascending_n4_cubic(), inv.spec.variable_names());
  EXPECT_NE(cubic.evaluate(x), 0);
}

TEST(Mallows, Examples) {
  for (const auto& [w, v] : mallows_specialize(4, Rational(1))) EXPECT_EQ(v, Rational(1, 24)) << w;
  EXPECT_EQ(distribution_value(mallows_specialize(3, Rational(1, 2)), "123"), Rational(8, 21));
}

TEST(Mallows, AgreesWithInversionModel) {
  const Rational q(2, 3);
  const auto inv = model_matrix(ModelKind::Inversion, boolean_lattice(4));
  std::map<std::string, Rational> p;
  for (const auto& r : inv.spec.row_labels) p[r] = r[0] == 'v' ? q : Rational(1);
  const auto a = evaluate_distribution(inv, p);
  const auto b = mallows_specialize(4, q);
  for (const auto& [w, v] : b) EXPECT_EQ(distribution_value(a, w), v) << w;
}

TEST(CsiszarMle, SaturatedN3IsEmpirical) {
  const std::map<std::string, Integer> counts{{"123", 3}, {"132", 1}, {"231", 2}};
  const auto mle = csiszar_mle(boolean_lattice(3), counts);
  EXPECT_EQ(distribution_value(mle, "123"), Rational(1, 2));
  EXPECT_EQ(distribution_value(mle, "132"), Rational(1, 6));
  EXPECT_EQ(distribution_value(mle, "321"), 0);
}

TEST(CsiszarMle, UniformAndSufficientStatistics) {
  const GradedPoset q = boolean_lattice(4);
  const auto m = model_matrix(ModelKind::Csiszar, q);
  std::map<std::string, Integer> uniform;
  for (const auto& l : m.spec.column_labels) uniform[l] = 5;
  for (const auto& [w, v] : csiszar_mle(q, uniform)) EXPECT_EQ(v, Rational(1, 24));

  const std::map<std::string, Integer> counts{{"1234", 2}, {"2134", 1}};
  const auto mle = csiszar_mle(q, counts);
  std::vector<Rational> p;
  for (const auto& l : m.spec.column_labels) p.push_back(distribution_value(mle, l));
  const auto s = sufficient_stats(m, counts);
  const auto ap = rankalg::apply(m, p);
  for (std::size_t r = 0; r < ap.size(); ++r) EXPECT_EQ(ap[r], ratio(s.values[r], s.N));
}

TEST(CsiszarMle, EmptyCountsRejected) { EXPECT_THROW(csiszar_mle(boolean_lattice(3), {}), Error); }
