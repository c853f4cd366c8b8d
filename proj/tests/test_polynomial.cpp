#include <gtest/gtest.h>

#include "rankalg/rankalg.hpp"
#include "rankalg/reference_data.hpp"
#include "rankalg/verify.hpp"

using namespace rankalg;
using verify::detail::parse_in;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = xyz) { return parse_in(s, names); }

}  // namespace

TEST(Parser, Arithmetic) {
  EXPECT_EQ(P("(x+y)^2"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P("x - x"), P("0"));
  EXPECT_EQ(P("3/6 x"), P("1/2*x"));
  EXPECT_EQ(P("-(x - y)"), P("y - x"));
}

TEST(Parser, Juxtaposition) {
  const std::vector<std::string> names{"p_{123}", "p_{231}"};
  EXPECT_EQ(parse_in("p_{123}p_{231}", names), parse_in("p_{123} * p_{231}", names));
  EXPECT_EQ(parse_in("p123 p_231", names), parse_in("p_{123} * p_{231}", names));
}

TEST(Parser, Errors) {
  EXPECT_THROW(P("x +"), FormatError);
  EXPECT_THROW(P("w"), FormatError);
  EXPECT_THROW(P("x)"), FormatError);
}

TEST(Polynomial, EvaluateAndDegree) {
  const Polynomial f = P("x^2*y - 1/3*z");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_EQ(f.evaluate({Rational(2), Rational(3), Rational(3)}), Rational(11));
  EXPECT_TRUE(P("x*y - z^2").is_homogeneous());
}

TEST(TermOrder, GrevlexAndLex) {
  const TermOrder g = TermOrder::grevlex(), l = TermOrder::lex();
  // x y z: grevlex prefers x*z^... no: compare x*z vs y^2
  EXPECT_GT(g.compare({0, 2, 0}, {1, 0, 1}), 0);
  EXPECT_LT(l.compare({0, 2, 0}, {1, 0, 1}), 0);
  EXPECT_GT(g.compare({0, 0, 3}, {1, 1, 0}), 0);  // degree first
  EXPECT_EQ(g.compare({1, 1, 0}, {1, 1, 0}), 0);
}

TEST(NormalForm, MembershipGivesZero) {
  const TermOrder ord = TermOrder::grevlex();
  const auto gb = buchberger({P("x^2 - y"), P("x*y - z")}, ord);
  EXPECT_TRUE(normal_form(P("(x^2 - y)*(z + x) + y*(x*y - z)"), gb, ord).is_zero());
  EXPECT_FALSE(normal_form(P("x"), gb, ord).is_zero());
}

TEST(NormalForm, AscendingCubicInEngineBasis) {
  const auto m = model_matrix(ModelKind::Ascending, boolean_lattice(4));
  const auto gb = toric_default_groebner(m.spec);
  std::vector<Polynomial> g;
  for (const auto& b : gb) g.push_back(b.polynomial());
  const auto names = m.spec.variable_names();
  EXPECT_TRUE(normal_form(parse_in(reference::ascending_n4_cubic(), names), g, TermOrder::grevlex()).is_zero());
}

TEST(Buchberger, SingleElementAndPrincipal) {
  const TermOrder ord = TermOrder::grevlex();
  const auto gb = buchberger({P("2*x*y - z^2")}, ord);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.front(), P("x*y - 1/2*z^2"));
}

TEST(Buchberger, ReducedBasisIsOrderIndependentOfInput) {
  const TermOrder ord = TermOrder::lex();
  const auto a = buchberger({P("x^2 - y"), P("x*y - z")}, ord);
  const auto b = buchberger({P("x*y - z"), P("x^2 - y"), P("x^3 - x*y")}, ord);
  EXPECT_EQ(a, b);
}

TEST(Buchberger, Pl3Generators) {
  const PLMap pl = pl_homogeneous_map(antichain(3));
  std::vector<Polynomial> gens;
  for (const auto& g : reference::pl3_generators()) gens.push_back(pl.parse(g));
  std::vector<int> prio;
  for (const auto& v : verify::detail::sorted_variables(pl)) prio.push_back(static_cast<int>(*pl.variable_index(v)));
  const TermOrder lex = TermOrder::lex(prio);
  const auto gb = buchberger(gens, lex);
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, lex).is_zero());
  EXPECT_TRUE(polynomial_initial_ideal(gb, lex, 6).squarefree());
}

TEST(Buchberger, CapExceeded) {
  GroebnerLimits lim;
  lim.max_reductions = 1;
  EXPECT_THROW(buchberger({P("x^2 - y"), P("x*y - z"), P("y^2 - x*z")}, TermOrder::grevlex(), lim), CapExceeded);
}

TEST(BinomialGroebner, AgreesWithPolynomialBuchberger) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(3));
  const auto gb = toric_default_groebner(m.spec);
  std::vector<Polynomial> polys;
  for (const auto& b : gb) polys.push_back(b.polynomial());
  const auto ref = buchberger(polys, TermOrder::grevlex());
  EXPECT_EQ(ref.size(), gb.size());
  for (const auto& b : gb) EXPECT_TRUE(normal_form(b.polynomial(), ref, TermOrder::grevlex()).is_zero());
}
