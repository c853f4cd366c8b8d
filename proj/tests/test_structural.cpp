#include <gtest/gtest.h>

#include "rankalg/rankalg.hpp"
#include "rankalg/reference_data.hpp"
#include "rankalg/verify.hpp"

using namespace rankalg;
using verify::detail::as_set;
using verify::detail::parse_binomial;
using verify::detail::parse_binomials;

namespace {

GradedPoset from_covers(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> rel) {
  return grade(Poset::from_relations(std::move(labels), std::move(rel)));
}

}  // namespace

TEST(CsiszarMinors, Examples) {
  EXPECT_TRUE(csiszar_minor_basis(boolean_lattice(3)).binomials.empty());
  const auto b4 = csiszar_minor_basis(boolean_lattice(4));
  EXPECT_EQ(b4.raw, 6u);
  EXPECT_EQ(as_set(b4.binomials), as_set(parse_binomials(reference::csiszar_n4_minors(), b4.variables)));
  const auto b5 = csiszar_minor_basis(boolean_lattice(5));
  EXPECT_EQ(b5.raw, 300u);
  EXPECT_EQ(b5.binomials.size(), 270u);
}

TEST(CsiszarMinors, ParallelMatchesSerial) {
  const auto a = csiszar_minor_basis(boolean_lattice(5), 1), b = csiszar_minor_basis(boolean_lattice(5), 4);
  EXPECT_EQ(as_set(a.binomials), as_set(b.binomials));
}

TEST(CsiszarMinors, AreGroebnerBasisAndMatchEngine) {
  const GradedPoset q = boolean_lattice(4);
  const auto b = csiszar_minor_basis(q);
  EXPECT_TRUE(is_groebner_basis(b.binomials, TermOrder::grevlex()));
  const auto m = model_matrix(ModelKind::Csiszar, q);
  EXPECT_TRUE(same_ideal(b.binomials, toric_markov_basis(m.spec), TermOrder::grevlex()));
}

TEST(AscendingLift, N3Hexagon) {
  const auto b = ascending_lift_basis(boolean_lattice(3), 3);
  EXPECT_EQ(as_set(b.binomials), as_set({parse_binomial(reference::ascending_n3_cubic(), b.variables)}));
}

TEST(AscendingLift, BipartiteFourCycle) {
  const GradedPoset q = from_covers({"a", "b", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
  const auto b = ascending_lift_basis(q, 2);
  ASSERT_EQ(b.binomials.size(), 1u);
  EXPECT_EQ(b.binomials.front().degree(), 2);
}

TEST(AscendingLift, N4MatchesEngine) {
  const GradedPoset q = boolean_lattice(4);
  const auto b = ascending_lift_basis(q, 4);
  EXPECT_TRUE(same_ideal(b.binomials, toric_default_groebner(model_matrix(ModelKind::Ascending, q).spec), TermOrder::grevlex()));
}

TEST(AscendingLift, N4HasAGroebnerOrder) {
  const auto b = ascending_lift_basis(boolean_lattice(4), 4);
  const auto gb = toric_default_groebner(model_matrix(ModelKind::Ascending, boolean_lattice(4)).spec);
  EXPECT_TRUE(squarefree_initial(gb));
}

TEST(BipartiteCycles, Examples) {
  EXPECT_EQ(bipartite_cycle_binomials(from_covers({"a", "b", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}}))
                .binomials.size(),
            1u);
  const GradedPoset k23 =
      from_covers({"a", "b", "x", "y", "z"}, {{"a", "x"}, {"a", "y"}, {"a", "z"}, {"b", "x"}, {"b", "y"}, {"b", "z"}});
  const auto c = bipartite_cycle_binomials(k23);
  EXPECT_EQ(c.binomials.size(), 3u);
  EXPECT_TRUE(same_ideal(c.binomials, toric_markov_basis(model_matrix(ModelKind::Ascending, k23).spec), TermOrder::grevlex()));
  const GradedPoset tree = from_covers({"a", "b", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "y"}});
  EXPECT_TRUE(bipartite_cycle_binomials(tree).binomials.empty());
}

TEST(BTCircuits, Examples) {
  const auto a3 = bt_circuit_binomials(antichain(3), 3);
  ASSERT_EQ(a3.binomials.size(), 1u);
  EXPECT_EQ(as_set(a3.binomials), as_set({parse_binomial(reference::bt3_circuit(), a3.variables)}));
  const auto a4 = bt_circuit_binomials(antichain(4), 4);
  std::map<long, std::size_t> by;
  for (const auto& b : a4.binomials) ++by[b.degree()];
  EXPECT_EQ(by, (std::map<long, std::size_t>{{3, 4}, {4, 3}}));
  EXPECT_TRUE(bt_circuit_binomials(chain_poset(4), 4).binomials.empty());
}

TEST(IsGroebnerBasis, NotABasis) {
  // x^2 - yz and xy - z^2: the S-pair leaves y^2 z - x z^2
  const Binomial a{{2, 0, 0}, {0, 1, 1}}, b{{1, 1, 0}, {0, 0, 2}};
  EXPECT_FALSE(is_groebner_basis({a, b}, TermOrder::grevlex()));
  // coprime leading terms
  EXPECT_TRUE(is_groebner_basis({a, Binomial{{0, 2, 0}, {1, 0, 1}}}, TermOrder::grevlex()));
  EXPECT_TRUE(is_groebner_basis({a}, TermOrder::grevlex()));
}

TEST(FindGroebnerOrder, CsiszarMinors) {
  const auto b = csiszar_minor_basis(boolean_lattice(4));
  const auto ord = find_groebner_order(b.binomials, b.variables.size());
  ASSERT_TRUE(ord.has_value());
  EXPECT_TRUE(is_groebner_basis(b.binomials, *ord));
}
