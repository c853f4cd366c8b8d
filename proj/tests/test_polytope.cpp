#include <gtest/gtest.h>

#include "rankalg/rankalg.hpp"

using namespace rankalg;

namespace {

GradedPoset bipartite(std::size_t below, std::size_t above) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < below; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < above; ++j) labels.push_back("x" + std::to_string(j));
  for (std::size_t i = 0; i < below; ++i)
    for (std::size_t j = 0; j < above; ++j) rel.emplace_back("a" + std::to_string(i), "x" + std::to_string(j));
  return grade(Poset::from_relations(labels, rel));
}

}  // namespace

TEST(HDescription, CsiszarN3Counts) {
  const auto h = h_description(ModelKind::Csiszar, boolean_lattice(3));
  EXPECT_EQ(h.inequalities.size(), 12u);
  EXPECT_EQ(h.equalities.size(), 7u);
}

TEST(HDescription, AscendingN3Counts) {
  const auto h = h_description(ModelKind::Ascending, boolean_lattice(3));
  EXPECT_EQ(h.raw_subset_rows, 18u);
  std::size_t nonneg = 0;
  for (const auto& r : h.inequalities) {
    std::size_t nz = 0;
    for (const auto& c : r.coeffs) nz += c != 0;
    nonneg += nz == 1 && r.rhs == 0;
  }
  EXPECT_EQ(nonneg, 8u);
  EXPECT_EQ(h.equalities.size(), 4u);
}

TEST(HDescription, RankOneBipartiteHasOneEquation) {
  const auto h = h_description(ModelKind::Csiszar, bipartite(2, 3));
  EXPECT_EQ(h.equalities.size(), 1u);
}

TEST(HDescription, BirkhoffRejected) { EXPECT_THROW(h_description(ModelKind::Birkhoff, boolean_lattice(3)), Error); }

TEST(VerifyHDescription, CsiszarN3) {
  const GradedPoset q = boolean_lattice(3);
  const auto r = verify_h_description(model_matrix(ModelKind::Csiszar, q), h_description(ModelKind::Csiszar, q));
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.partial);
  EXPECT_EQ(r.polytope_dimension, 5);
  EXPECT_EQ(r.vertex_count, 6u);
}

TEST(VerifyHDescription, AscendingN3ZeroOnePoints) {
  const GradedPoset q = boolean_lattice(3);
  const auto r = verify_h_description(model_matrix(ModelKind::Ascending, q), h_description(ModelKind::Ascending, q));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.zero_one_solutions, 6u);
  EXPECT_EQ(r.zero_one_exact, std::optional<bool>(true));
}

TEST(VerifyHDescription, CsiszarN4IsPartial) {
  const GradedPoset q = boolean_lattice(4);
  const auto r = verify_h_description(model_matrix(ModelKind::Csiszar, q), h_description(ModelKind::Csiszar, q));
  EXPECT_TRUE(r.columns_satisfy);
  EXPECT_TRUE(r.dimension_match);
  EXPECT_EQ(r.polytope_dimension, 17);
  EXPECT_TRUE(r.partial);
  EXPECT_FALSE(r.vertices_exact.has_value());
}

TEST(VerifyHDescription, AscendingN4) {
  const GradedPoset q = boolean_lattice(4);
  const auto r = verify_h_description(model_matrix(ModelKind::Ascending, q), h_description(ModelKind::Ascending, q));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.polytope_dimension, 11);
}

TEST(EnumerateVertices, Square) {
  HDescription h;
  h.coordinates = {"x", "y"};
  auto row = [](long a, long b, long rhs) { return LinearRow{{Rational(a), Rational(b)}, Rational(rhs), ""}; };
  h.inequalities = {row(1, 0, 0), row(0, 1, 0), row(-1, 0, -1), row(0, -1, -1)};
  EXPECT_EQ(enumerate_vertices(h).size(), 4u);
  EXPECT_TRUE(detail::satisfies(h, {Rational(1, 2), Rational(1)}));
  EXPECT_FALSE(detail::satisfies(h, {Rational(3, 2), Rational(0)}));
}
