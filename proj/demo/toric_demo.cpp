// Markov bases and Hilbert series of the four ranking models on 2^[3].

#include <iostream>

#include "rankalg/rankalg.hpp"

using namespace rankalg;

int main() {
  const GradedPoset q = boolean_lattice(3);
  for (const auto kind : {ModelKind::Inversion, ModelKind::Birkhoff, ModelKind::Ascending, ModelKind::Csiszar}) {
    const ModelMatrix m = model_matrix(kind, q);
    const auto gb = toric_default_groebner(m.spec);
    const auto markov = toric_markov_basis(m.spec);
    const auto h = hilbert_series(initial_ideal(gb, m.spec.nvars()), m.spec.nvars());
    std::cout << model_kind_name(kind) << ": dim " << polytope_dimension(m) << ", Hilbert series " << h.to_string() << "\n";
    for (const auto& b : markov) std::cout << "  " << binomial_string(b, m.spec.variable_names()) << "\n";
  }
}
