#include <gtest/gtest.h>

#include <algorithm>

#include "rankalg/rankalg.hpp"
#include "rankalg/reference_data.hpp"
#include "rankalg/verify.hpp"

using namespace rankalg;
using verify::detail::as_set;
using verify::detail::parse_binomials;

namespace {

std::vector<std::string> monomial_words(const ToricSpec& spec, const std::vector<Exponents>& f) {
  std::vector<std::string> out;
  for (const auto& e : f) out.push_back(monomial_string(e, spec.variable_names()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> target_of(const ModelMatrix& m, const std::vector<std::string>& labels) {
  Exponents e(m.columns(), 0);
  for (const auto& l : labels) ++e[static_cast<std::size_t>(m.column_index(l))];
  return image(m.spec, e);
}

}  // namespace

TEST(MarkovBasis, NEquals3) {
  const GradedPoset q = boolean_lattice(3);
  const auto inv = model_matrix(ModelKind::Inversion, q);
  const auto names = inv.spec.variable_names();
  EXPECT_EQ(as_set(toric_markov_basis(inv.spec)), as_set(parse_binomials(reference::inversion_n3_quadrics(), names)));
  EXPECT_TRUE(toric_markov_basis(model_matrix(ModelKind::Csiszar, q).spec).empty());
  const auto cubic = parse_binomials({reference::ascending_n3_cubic()}, names);
  for (const auto k : {ModelKind::Ascending, ModelKind::Birkhoff})
    EXPECT_EQ(as_set(toric_markov_basis(model_matrix(k, q).spec)), as_set(cubic)) << model_kind_name(k);
}

TEST(MarkovBasis, GeneratorsLieInKernel) {
  const auto m = model_matrix(ModelKind::Ascending, boolean_lattice(4));
  const auto mb = toric_markov_basis(m.spec);
  EXPECT_EQ(verify::detail::degree_profile(minimal_generator_degrees(mb, TermOrder::grevlex())), "{2:6, 3:64, 4:93}");
  for (const auto& b : mb) EXPECT_TRUE(in_kernel(m.spec, b));
}

TEST(MinimalGeneratorDegrees, SingleBinomial) {
  const Binomial b{{1, 1, 0, 0}, {0, 0, 1, 1}};
  EXPECT_EQ(verify::detail::degree_profile(minimal_generator_degrees({b}, TermOrder::grevlex())), "{2:1}");
}

TEST(ToricGroebner, CsiszarN4) {
  const auto m = model_matrix(ModelKind::Csiszar, boolean_lattice(4));
  const auto gb = toric_groebner(m.spec, TermOrder::grevlex());
  EXPECT_EQ(gb.size(), 6u);
  EXPECT_TRUE(squarefree_initial(gb));
  const auto printed = parse_binomials(reference::csiszar_n4_minors(), m.spec.variable_names());
  EXPECT_TRUE(same_ideal(gb, printed, TermOrder::grevlex()));
  EXPECT_TRUE(same_ideal(gb, gb, TermOrder::grevlex()));
}

TEST(ToricGroebner, InversionN4Hilbert) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(4));
  const auto gb = toric_default_groebner(m.spec);
  const auto hs = hilbert_series(initial_ideal(gb, m.spec.nvars()), m.spec.nvars());
  std::vector<Integer> num;
  for (long x : reference::inversion_n4_numerator()) num.emplace_back(x);
  EXPECT_EQ(hs, (HilbertSeries{num, 7}));
  EXPECT_TRUE(squarefree_initial(gb));
}

TEST(ToricGroebner, OtherOrderSameIdeal) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(3));
  const TermOrder lex = TermOrder::lex();
  const auto a = toric_groebner(m.spec, lex);
  const auto b = toric_default_groebner(m.spec);
  EXPECT_TRUE(same_ideal(a, b, TermOrder::grevlex()));
  for (const auto& g : a) EXPECT_GT(lex.compare(g.lead, g.trail), 0);
}

TEST(SameIdeal, ProperSubsetIsNotEqual) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(3));
  const auto both = parse_binomials(reference::inversion_n3_quadrics(), m.spec.variable_names());
  EXPECT_FALSE(same_ideal({both.front()}, both, TermOrder::grevlex()));
}

TEST(SquarefreeInitial, NonSquarefree) {
  const Binomial b{{2, 0, 0}, {0, 1, 1}};
  EXPECT_FALSE(squarefree_initial({b}));
}

TEST(Fiber, InversionN3Degree2) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(3));
  const auto f = fiber(m.spec, target_of(m, {"123", "321"}), 2);
  EXPECT_EQ(monomial_words(m.spec, f).size(), 3u);
  std::vector<std::string> want;
  for (const auto& pair : std::vector<std::vector<std::string>>{{"123", "321"}, {"132", "231"}, {"213", "312"}}) {
    Exponents e(m.columns(), 0);
    for (const auto& l : pair) ++e[static_cast<std::size_t>(m.column_index(l))];
    want.push_back(monomial_string(e, m.spec.variable_names()));
  }
  std::sort(want.begin(), want.end());
  EXPECT_EQ(monomial_words(m.spec, f), want);
}

TEST(Fiber, DegreeOneIsTheColumn) {
  const auto m = model_matrix(ModelKind::Ascending, boolean_lattice(3));
  for (const auto& l : m.spec.column_labels) {
    const auto f = fiber(m.spec, target_of(m, {l}), 1);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.front()[static_cast<std::size_t>(m.column_index(l))], 1);
  }
}

TEST(Fiber, BruteForceAgreement) {
  // every degree-2 fiber of inversion n=3 agrees with enumeration of all 21 monomials
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(3));
  std::map<std::vector<int>, std::size_t> sizes;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) {
      Exponents e(6, 0);
      ++e[i];
      ++e[j];
      ++sizes[image(m.spec, e)];
    }
  for (const auto& [t, n] : sizes) EXPECT_EQ(fiber(m.spec, t, 2).size(), n);
}

TEST(ToricSpec, Validation) {
  ToricSpec s;
  s.a = Matrix<int>::from_rows(std::vector<std::vector<int>>{{1, 2}, {1, 1}});
  EXPECT_THROW(s.validate(), Error);
  s.a = Matrix<int>::from_rows(std::vector<std::vector<int>>{{1, -1}, {1, 3}});
  EXPECT_THROW(s.validate(), Error);
}
