#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rankalg/random_posets.hpp"
#include "rankalg/rankalg.hpp"

using namespace rankalg;

namespace {

int find_label(const GradedPoset& q, const std::string& label) { return q.poset().index_of(label); }

std::vector<std::string> sorted_words(const std::vector<std::vector<int>>& ws, int n) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(word_label(w, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ParsePoset, AntichainShorthand) {
  const Poset p = parse_poset(R"({"n":3,"relations":[]})");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(p.covers().empty());
}

TEST(ParsePoset, TwoCovers) {
  const Poset p = parse_poset(R"({"n":4,"relations":[[1,2],[3,4]]})");
  std::vector<std::pair<std::string, std::string>> got;
  for (const auto& [a, b] : p.covers()) got.emplace_back(p.label(a), p.label(b));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"3", "4"}}));
}

TEST(ParsePoset, CycleRejected) {
  try {
    parse_poset(R"({"n":3,"relations":[[1,2],[2,1]]})");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not a partial order"), std::string::npos);
  }
}

TEST(ParsePoset, BadInput) {
  EXPECT_THROW(parse_poset("not json"), FormatError);
  EXPECT_THROW(parse_poset(R"({"n":0})"), FormatError);
  EXPECT_THROW(parse_poset(R"({"elements":["a","a"],"relations":[]})"), Error);
}

TEST(Poset, TransitiveClosureAndCovers) {
  const Poset p = constraint_poset(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_TRUE(p.less(p.index_of("1"), p.index_of("3")));
  EXPECT_EQ(p.covers().size(), 2u);
  EXPECT_FALSE(p.comparable(p.index_of("1"), p.index_of("1")) == false);
}

TEST(Grade, BooleanLevels) {
  const GradedPoset q = boolean_lattice(3);
  EXPECT_EQ(q.rk(), 3);
  std::vector<std::size_t> sizes;
  for (const auto& l : q.levels()) sizes.push_back(l.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(Grade, ChainOfFive) {
  const GradedPoset q = grade(chain_poset(5));
  EXPECT_EQ(q.rk(), 4);
  for (const auto& l : q.levels()) EXPECT_EQ(l.size(), 1u);
}

TEST(Grade, NotGraded) {
  // a<b is implied by a<c<b, so the covers form a chain
  const Poset p = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"c", "b"}});
  EXPECT_NO_THROW(grade(p));
  // a<x<b next to a<c<d<b
  const Poset bad =
      Poset::from_relations({"a", "b", "c", "d", "x"}, {{"a", "x"}, {"x", "b"}, {"a", "c"}, {"c", "d"}, {"d", "b"}});
  try {
    grade(bad);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not graded"), std::string::npos);
  }
}

TEST(BooleanLattice, Sizes) {
  for (const auto& [n, elems, covers, chains] :
       std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t>>{{1, 2, 1, 1}, {3, 8, 12, 6}, {4, 16, 32, 24}}) {
    const GradedPoset q = boolean_lattice(n);
    EXPECT_EQ(q.size(), elems);
    EXPECT_EQ(q.poset().covers().size(), covers);
    EXPECT_EQ(maximal_chains(q).size(), chains);
  }
}

TEST(OrderIdealLattice, TwoChains) {
  const GradedPoset q = order_ideal_lattice(constraint_poset(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(q.size(), 9u);
  EXPECT_EQ(maximal_chains(q).size(), 6u);
}

TEST(OrderIdealLattice, ChainAndAntichain) {
  const GradedPoset c = order_ideal_lattice(chain_poset(4));
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(maximal_chains(c).size(), 1u);
  const GradedPoset a = order_ideal_lattice(antichain(3));
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a.poset().covers().size(), 12u);
}

TEST(MaximalChains, ChainPlusPoint) {
  const GradedPoset q = order_ideal_lattice(constraint_poset(4, {{1, 2}, {2, 3}}));
  std::vector<std::string> labels;
  for (const auto& c : maximal_chains(q)) labels.push_back(chain_label(q, c));
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::string>{"1234", "1243", "1423", "4123"}));
}

TEST(MaximalChains, Singleton) {
  const GradedPoset q = grade(antichain(1));
  const auto chains = maximal_chains(q);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains.front().path.size(), 1u);
}

TEST(LinearExtensions, Examples) {
  EXPECT_EQ(linear_extensions(antichain(3)).size(), 6u);
  EXPECT_EQ(sorted_words(linear_extensions(constraint_poset(4, {{1, 2}, {2, 3}})), 4),
            (std::vector<std::string>{"1234", "1243", "1423", "4123"}));
  EXPECT_EQ(sorted_words(linear_extensions(chain_poset(5)), 5), (std::vector<std::string>{"12345"}));
}

TEST(LinearExtensions, CountMatchesChainsOfIdealLattice) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Poset p = random_constraint_poset(n, rng, 0.3);
    EXPECT_EQ(linear_extensions(p).size(), maximal_chains(order_ideal_lattice(p)).size());
  }
}

TEST(Shadows, Examples) {
  const GradedPoset q = boolean_lattice(3);
  const int one = find_label(q, "1"), two = find_label(q, "2");
  auto [up, down] = shadows(q, {one});
  std::vector<std::string> ul;
  for (int e : up) ul.push_back(q.label(e));
  std::sort(ul.begin(), ul.end());
  EXPECT_EQ(ul, (std::vector<std::string>{"12", "13"}));
  ASSERT_EQ(down.size(), 1u);
  EXPECT_EQ(q.label(down.front()), "∅");

  EXPECT_EQ(shadows(q, {one, two}).first.size(), 3u);
  const auto empty = shadows(q, {});
  EXPECT_TRUE(empty.first.empty() && empty.second.empty());
}

TEST(IntervalSubposets, Boolean5) {
  const GradedPoset q = boolean_lattice(5);
  const auto [lower, upper] = interval_subposets(q, find_label(q, "24"));
  EXPECT_EQ(maximal_chains(lower.sub).size(), 2u);
  EXPECT_EQ(maximal_chains(upper.sub).size(), 6u);

  const auto bottom = interval_subposets(q, find_label(q, "∅"));
  EXPECT_EQ(bottom.first.sub.size(), 1u);
  const auto top = interval_subposets(q, find_label(q, "12345"));
  EXPECT_EQ(top.second.sub.size(), 1u);
}

TEST(RandomGradedPoset, IsGradedAndCovered) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const GradedPoset q = random_graded_poset(3 + static_cast<int>(rng() % 2), 3, rng);
    for (const auto& [a, b] : q.poset().covers()) EXPECT_EQ(q.rank(b), q.rank(a) + 1);
    EXPECT_FALSE(maximal_chains(q).empty());
  }
}

TEST(NaturalLess, Numeric) {
  EXPECT_TRUE(natural_less("2", "10"));
  EXPECT_TRUE(natural_less("a2", "a10"));
  EXPECT_FALSE(natural_less("10", "2"));
}
