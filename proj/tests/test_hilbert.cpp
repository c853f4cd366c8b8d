#include <gtest/gtest.h>

#include "rankalg/rankalg.hpp"

using namespace rankalg;

namespace {

HilbertSeries series(std::vector<long> num, long K) {
  std::vector<Integer> n;
  for (long x : num) n.emplace_back(x);
  return {n, K};
}

}  // namespace

TEST(HilbertSeries, Examples) {
  EXPECT_EQ(hilbert_series(MonomialIdeal(2, {{1, 1}}), 2).to_string(), series({1, 1}, 1).to_string());
  EXPECT_EQ(hilbert_series(MonomialIdeal(4, {}), 4).to_string(), series({1}, 4).to_string());
  // <x^2> in one variable: 1 + t
  EXPECT_EQ(hilbert_series(MonomialIdeal(1, {{2}}), 1).to_string(), series({1, 1}, 0).to_string());
}

TEST(HilbertSeries, HilbertFunctionMatchesMonomialCount) {
  // <x*y, y*z^2> in 3 variables: count standard monomials directly
  const MonomialIdeal I(3, {{1, 1, 0}, {0, 1, 2}});
  const auto hs = hilbert_series(I, 3);
  for (long d = 0; d <= 6; ++d) {
    Integer count = 0;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b)
        if (!I.contains({a, b, static_cast<int>(d - a - b)})) ++count;
    EXPECT_EQ(hs.hilbert_function(d), count) << "degree " << d;
  }
}

TEST(SeriesInvariants, Examples) {
  const auto a = series_invariants(series({1, 17, 72, 72, 17, 1}, 7));
  EXPECT_EQ(a.krull_dim, 7);
  EXPECT_EQ(a.degree, 180);
  EXPECT_TRUE(a.symmetric);
  const auto b = series_invariants(series({1}, 5));
  EXPECT_EQ(b.krull_dim, 5);
  EXPECT_EQ(b.degree, 1);
  EXPECT_TRUE(b.symmetric);
  const auto c = series_invariants(series({1, 12, 38, 28, 3}, 8));
  EXPECT_EQ(c.krull_dim, 8);
  EXPECT_EQ(c.degree, 82);
  EXPECT_FALSE(c.symmetric);
}

TEST(MonomialIdeal, Minimalizes) {
  const MonomialIdeal I(2, {{2, 1}, {1, 0}, {1, 0}, {0, 3}});
  EXPECT_EQ(I.generators(), (std::vector<Exponents>{{0, 3}, {1, 0}}));
  EXPECT_TRUE(I.contains({3, 3}));
  EXPECT_FALSE(I.contains({0, 2}));
}

TEST(AlexanderDual, Examples) {
  const MonomialIdeal xy(2, {{1, 1}});
  EXPECT_EQ(alexander_dual(xy).generators(), (std::vector<Exponents>{{0, 1}, {1, 0}}));
  const MonomialIdeal zero(3, {});
  EXPECT_EQ(alexander_dual(zero).generators(), (std::vector<Exponents>{{0, 0, 0}}));
}

TEST(AlexanderDual, Involution) {
  const MonomialIdeal I(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  EXPECT_EQ(alexander_dual(alexander_dual(I)), I);
}

TEST(FacetVolume, AgreesWithSeriesDegree) {
  const MonomialIdeal I(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  const auto hs = hilbert_series(I, 4);
  const auto inv = series_invariants(hs);
  const auto vol = facet_volume(I);
  EXPECT_EQ(vol.first, inv.krull_dim);
  EXPECT_EQ(vol.second, inv.degree);
}
