#include <gtest/gtest.h>

#include "rankalg/rankalg.hpp"

using namespace rankalg;

namespace {

IntegerMatrix identity(std::size_t n) {
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return IntegerMatrix::from_rows(rows);
}

// u in the rational span of the basis vectors?
bool in_span(const LatticeBasis& b, const std::vector<Integer>& u) {
  std::vector<std::vector<Integer>> rows = b.vectors;
  const std::size_t r0 = rational_rank(IntegerMatrix::from_rows(rows));
  rows.push_back(u);
  return rational_rank(IntegerMatrix::from_rows(rows)) == r0;
}

std::vector<Integer> difference(const ModelMatrix& m, const std::vector<std::string>& plus, const std::vector<std::string>& minus) {
  std::vector<Integer> u(m.columns(), 0);
  for (const auto& l : plus) u[static_cast<std::size_t>(m.column_index(l))] += 1;
  for (const auto& l : minus) u[static_cast<std::size_t>(m.column_index(l))] -= 1;
  return u;
}

}  // namespace

TEST(RationalRank, Examples) {
  EXPECT_EQ(rational_rank(model_matrix(ModelKind::Ascending, boolean_lattice(3)).spec.a), 5u);
  EXPECT_EQ(rational_rank(identity(5)), 5u);
  EXPECT_EQ(rational_rank(model_matrix(ModelKind::Inversion, boolean_lattice(4)).spec.a), 7u);
}

TEST(RationalRank, RationalEntries) {
  const RationalMatrix m = RationalMatrix::from_rows(std::vector<std::vector<Rational>>{
      {Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), Rational(1)}});
  EXPECT_EQ(rational_rank(m), 1u);
}

TEST(KernelLattice, InversionN3) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(3));
  const auto b = kernel_lattice_basis(m.spec.a);
  EXPECT_EQ(b.dimension(), 2u);
  EXPECT_TRUE(in_span(b, difference(m, {"132", "231"}, {"123", "321"})));
  EXPECT_TRUE(in_span(b, difference(m, {"213", "312"}, {"123", "321"})));
  for (const auto& v : b.vectors) {
    std::vector<Rational> x(v.begin(), v.end());
    for (const auto& y : rankalg::apply(m, x)) EXPECT_EQ(y, 0);
  }
}

TEST(KernelLattice, InjectiveAndZero) {
  EXPECT_EQ(kernel_lattice_basis(identity(4)).dimension(), 0u);
  const auto z = kernel_lattice_basis(IntegerMatrix::from_rows(std::vector<std::vector<long>>{{0, 0, 0}}));
  EXPECT_EQ(z.dimension(), 3u);
  EXPECT_EQ(rational_rank(IntegerMatrix::from_rows(z.vectors)), 3u);
}

TEST(KernelLattice, SaturatedLattice) {
  // kernel of (2 4) is spanned by (2,-1) over Z, not by a multiple of it
  const auto b = kernel_lattice_basis(IntegerMatrix::from_rows(std::vector<std::vector<long>>{{2, 4}}));
  ASSERT_EQ(b.dimension(), 1u);
  const auto& v = b.vectors.front();
  EXPECT_EQ(abs(v[0]), 2);
  EXPECT_EQ(abs(v[1]), 1);
}

TEST(RowspaceContains, Examples) {
  const GradedPoset q = boolean_lattice(4);
  const auto birk = model_matrix(ModelKind::Birkhoff, q).spec.a;
  const auto asc = model_matrix(ModelKind::Ascending, q).spec.a;
  const auto inv = model_matrix(ModelKind::Inversion, q).spec.a;
  EXPECT_TRUE(rowspace_contains(birk, asc));
  EXPECT_TRUE(rowspace_contains(asc, asc));
  EXPECT_FALSE(rowspace_contains(asc, inv));
  EXPECT_THROW(rowspace_contains(asc, model_matrix(ModelKind::Ascending, boolean_lattice(3)).spec.a), Error);
}
