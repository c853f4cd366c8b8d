#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankalg/poset.hpp"

namespace rankalg {

/// Constraint poset on [n]: each pair of a random linear order becomes a
/// relation with probability `density`.
inline Poset random_constraint_poset(int n, std::mt19937_64& rng, double density = 0.3) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (coin(rng)) rel.emplace_back(order[a], order[b]);
  return constraint_poset(n, rel);
}

/// Layered graded poset with `levels` ranks of 1..max_width elements. Every
/// element above the bottom covers at least one element of the level below
/// and every element below the top is covered at least once.
inline GradedPoset random_graded_poset(int levels, int max_width, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> width(1, max_width);
  std::vector<std::vector<std::string>> layer(static_cast<std::size_t>(levels));
  std::vector<std::string> labels;
  for (int r = 0; r < levels; ++r) {
    const int w = width(rng);
    for (int k = 0; k < w; ++k) {
      std::string l(1, static_cast<char>('a' + r));
      l += std::to_string(k + 1);
      layer[static_cast<std::size_t>(r)].push_back(l);
      labels.push_back(l);
    }
  }
  std::vector<std::pair<std::string, std::string>> rel;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t r = 0; r + 1 < layer.size(); ++r) {
    const auto& lo = layer[r];
    const auto& hi = layer[r + 1];
    std::vector<char> covered(lo.size(), 0);
    for (const auto& h : hi) {
      bool any = false;
      for (std::size_t k = 0; k < lo.size(); ++k)
        if (coin(rng)) {
          rel.emplace_back(lo[k], h);
          covered[k] = any = true;
        }
      if (!any) {
        const std::size_t k = rng() % lo.size();
        rel.emplace_back(lo[k], h);
        covered[k] = 1;
      }
    }
    for (std::size_t k = 0; k < lo.size(); ++k)
      if (!covered[k]) rel.emplace_back(lo[k], hi[rng() % hi.size()]);
  }
  return grade(Poset::from_relations(std::move(labels), rel));
}

}  // namespace rankalg
