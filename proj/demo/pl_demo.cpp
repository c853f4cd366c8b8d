// Plackett-Luce on three items: images, probabilities, pairwise marginals.

#include <iostream>

#include "rankalg/rankalg.hpp"

using namespace rankalg;

int main() {
  const Poset p = antichain(3);
  const PLMap m = pl_homogeneous_map(p);
  for (std::size_t k = 0; k < m.variables.size(); ++k)
    std::cout << m.variables[k] << " -> " << m.images[k].to_string(m.theta_names(), TermOrder::grevlex()) << "\n";

  const std::vector<Rational> theta{Rational(3), Rational(2), Rational(1)};
  const auto probs = pl_probability(p, theta);
  for (std::size_t k = 0; k < probs.words.size(); ++k) std::cout << "P(" << probs.words[k] << ") = " << probs.values[k] << "\n";

  for (const auto& marg : marginalize(probs.distribution(), 2)) {
    std::cout << "{" << marg.subset[0] << "," << marg.subset[1] << "}:";
    for (const auto& [w, v] : marg.values) std::cout << " " << w << "=" << marg.normalized(w);
    std::cout << "\n";
  }
}
