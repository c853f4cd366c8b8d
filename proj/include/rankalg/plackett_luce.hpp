#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankalg/core.hpp"
#include "rankalg/hilbert.hpp"
#include "rankalg/models.hpp"
#include "rankalg/polynomial.hpp"
#include "rankalg/poset.hpp"
#include "rankalg/structural.hpp"

namespace rankalg {

/// Word of a label such as "3142" or "10,2,1,...".
inline std::vector<int> parse_word_label(const std::string& label) {
  std::vector<int> w;
  if (label.find(',') != std::string::npos) {
    for (const auto& part : split(label, ',')) w.push_back(std::stoi(part));
  } else {
    for (const char c : label) {
      if (c < '0' || c > '9') throw FormatError("bad word label '" + label + "'");
      w.push_back(c - '0');
    }
  }
  return w;
}

/// p_pi -> prod over order ideals A off the chain of pi of (sum_{i in A} theta_i).
struct PLMap {
  std::vector<std::vector<int>> words;
  std::vector<std::string> variables;  // p_{word}
  std::vector<Polynomial> images;      // in theta_1..theta_n
  std::vector<std::vector<int>> factors;  // lattice elements whose linear forms make up each image
  long degree = 0;
  int n = 0;

  std::vector<std::string> theta_names() const {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("θ" + std::to_string(i));
    return out;
  }
  std::optional<std::size_t> variable_index(const std::string& name) const {
    std::string s = name;
    if (s.rfind("p_{", 0) == 0 && s.back() == '}') s = s.substr(3, s.size() - 4);
    else if (s.rfind("p_", 0) == 0) s = s.substr(2);
    else if (s.rfind("p", 0) == 0) s = s.substr(1);
    else return std::nullopt;
    for (std::size_t k = 0; k < words.size(); ++k)
      if (word_label(words[k], n) == s) return k;
    return std::nullopt;
  }
  Polynomial parse(const std::string& text) const {
    return parse_polynomial(text, words.size(), [&](const std::string& id) { return variable_index(id); });
  }
};

namespace detail {

inline Polynomial linear_form(std::size_t n, const std::vector<int>& items) {
  Polynomial p(n);
  for (const int i : items) p += Polynomial::variable(n, static_cast<std::size_t>(i - 1));
  return p;
}

}  // namespace detail

inline PLMap pl_homogeneous_map(const Poset& constraint) {
  const GradedPoset q = order_ideal_lattice(constraint);
  const auto chains = maximal_chains(q);
  const std::size_t n = constraint.size();
  PLMap m;
  m.n = static_cast<int>(n);
  m.degree = static_cast<long>(q.size()) - (q.rk() + 1);
  for (const auto& c : chains) {
    std::vector<char> on(q.size(), 0);
    for (const int e : c.path) on[static_cast<std::size_t>(e)] = 1;
    Polynomial img = Polynomial::constant(n, 1);
    std::vector<int> fac;
    for (std::size_t a = 0; a < q.size(); ++a)
      if (!on[a]) {
        img = img * detail::linear_form(n, q.items(static_cast<int>(a)));
        fac.push_back(static_cast<int>(a));
      }
    m.factors.push_back(std::move(fac));
    if (!img.is_homogeneous() || img.degree() != m.degree) throw Error("internal: PL image has the wrong degree");
    m.words.push_back(chain_word(q, c));
    m.variables.push_back("p_{" + word_label(m.words.back(), static_cast<int>(n)) + "}");
    m.images.push_back(std::move(img));
  }
  return m;
}

/// Exact Plackett-Luce values prod_i theta_{pi(i)} / (theta_{pi(1)} + ... + theta_{pi(i)})
/// on the linear extensions. `total` is their sum; it is 1 for antichains.
struct PLProbabilities {
  std::vector<std::string> words;
  std::vector<Rational> values;
  Rational total = 0;
  bool normalized = false;  // constraint poset is an antichain

  Distribution distribution() const {
    Distribution d;
    for (std::size_t k = 0; k < words.size(); ++k) d.emplace_back(words[k], values[k]);
    return d;
  }
};

inline void check_theta(const Poset& constraint, const std::vector<Rational>& theta) {
  if (theta.size() != constraint.size()) throw Error("theta has " + std::to_string(theta.size()) + " entries, expected " +
                                                     std::to_string(constraint.size()));
  for (const auto& t : theta)
    if (t <= 0) throw Error("theta entries must be positive");
}

inline PLProbabilities pl_probability(const Poset& constraint, const std::vector<Rational>& theta) {
  check_theta(constraint, theta);
  const int n = static_cast<int>(constraint.size());
  PLProbabilities out;
  out.normalized = constraint.strict_relations().empty();
  for (const auto& w : linear_extensions(constraint)) {
    Rational v = 1, s = 0;
    for (const int item : w) {
      s += theta[static_cast<std::size_t>(item - 1)];
      v *= theta[static_cast<std::size_t>(item - 1)] / s;
    }
    out.words.push_back(word_label(w, n));
    out.total += v;
    out.values.push_back(std::move(v));
  }
  return out;
}

/// prod over the nonempty ideals A on the chain of pi of 1/(sum_{i in A} theta_i);
/// for the antichain these sum to 1/(theta_1 ... theta_n).
inline std::vector<Rational> pl_chain_weights(const Poset& constraint, const std::vector<Rational>& theta) {
  check_theta(constraint, theta);
  std::vector<Rational> out;
  for (const auto& w : linear_extensions(constraint)) {
    Rational v = 1, s = 0;
    for (const int item : w) {
      s += theta[static_cast<std::size_t>(item - 1)];
      v /= s;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Substitutes the PL images into f and expands exactly.
inline Polynomial pl_substitute(const Polynomial& f, const PLMap& m) {
  if (f.nvars() != m.images.size()) throw Error("pl_substitute: polynomial has the wrong number of variables");
  Polynomial out(static_cast<std::size_t>(m.n));
  std::map<std::pair<std::size_t, int>, Polynomial> powers;
  for (const auto& [e, c] : f.terms()) {
    Polynomial t = Polynomial::constant(static_cast<std::size_t>(m.n), c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      auto it = powers.find({k, e[k]});
      if (it == powers.end()) it = powers.emplace(std::make_pair(k, e[k]), m.images[k].pow(static_cast<unsigned>(e[k]))).first;
      t = t * it->second;
    }
    out += t;
  }
  return out;
}

inline bool pl_vanishes(const Polynomial& f, const PLMap& m) {
  if (!f.is_homogeneous()) throw Error("pl_vanishes: polynomial is not homogeneous in p");
  if (f.terms().size() == 2 && m.factors.size() == m.images.size()) {
    // c(x^a - x^b): the images are products of pairwise non-associate
    // linear forms, so by unique factorization they agree iff the factor
    // multisets agree.
    auto it = f.terms().begin();
    const auto& [ea, ca] = *it++;
    const auto& [eb, cb] = *it;
    if (ca + cb == 0) {
      auto multiset = [&](const Exponents& e) {
        std::vector<int> all;
        for (std::size_t k = 0; k < e.size(); ++k)
          for (int r = 0; r < e[k]; ++r) all.insert(all.end(), m.factors[k].begin(), m.factors[k].end());
        std::sort(all.begin(), all.end());
        return all;
      };
      return multiset(ea) == multiset(eb);
    }
  }
  return pl_substitute(f, m).is_zero();
}

inline bool pl_vanishes(const Polynomial& f, const Poset& constraint) { return pl_vanishes(f, pl_homogeneous_map(constraint)); }

/// Monomial ideal in variables t_A (A an order ideal) with a name list.
struct LabeledMonomialIdeal {
  std::vector<std::string> variables;
  MonomialIdeal ideal;

  std::string generator_string(const Exponents& e) const { return monomial_string(e, variables, false); }
};

/// Stanley-Reisner ideal of the lattice of order ideals: t_A t_B for every
/// incomparable pair of ideals.
inline LabeledMonomialIdeal incomparability_ideal(const Poset& constraint) {
  const GradedPoset q = order_ideal_lattice(constraint);
  const Poset& p = q.poset();
  const std::size_t m = q.size();
  LabeledMonomialIdeal out;
  for (std::size_t a = 0; a < m; ++a) out.variables.push_back("t_{" + q.label(static_cast<int>(a)) + "}");
  std::vector<Exponents> gens;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!p.comparable(static_cast<int>(a), static_cast<int>(b))) {
        Exponents e(m, 0);
        e[a] = e[b] = 1;
        gens.push_back(std::move(e));
      }
  out.ideal = MonomialIdeal(m, std::move(gens));
  return out;
}

inline LabeledMonomialIdeal alexander_dual(const LabeledMonomialIdeal& m) { return {m.variables, alexander_dual(m.ideal)}; }

/// Induced-order distribution on one k-subset.
struct Marginal {
  std::vector<int> subset;
  std::vector<std::pair<std::string, Rational>> values;  // unnormalized, by sub-word
  Rational total = 0;

  Rational normalized(const std::string& subword) const {
    for (const auto& [w, v] : values)
      if (w == subword) return total == 0 ? Rational(0) : Rational(v / total);
    return 0;
  }
};

/// Complete marginalization of order k. Subsets on which every word of the
/// distribution induces the same order are skipped.
inline std::vector<Marginal> marginalize(const Distribution& dist, int k) {
  if (dist.empty()) return {};
  std::vector<std::pair<std::vector<int>, Rational>> words;
  int n = 0;
  for (const auto& [label, v] : dist) {
    words.emplace_back(parse_word_label(label), v);
    n = std::max(n, static_cast<int>(words.back().first.size()));
  }
  if (k < 2 || k > n) throw Error("marginalize needs 2 <= k <= n");
  std::vector<Marginal> out;
  std::vector<int> subset;
  auto emit = [&]() {
    std::map<std::vector<int>, Rational> acc;
    for (const auto& [w, v] : words) {
      std::vector<int> sub;
      for (const int x : w)
        if (std::binary_search(subset.begin(), subset.end(), x)) sub.push_back(x);
      acc[sub] += v;
    }
    if (acc.size() < 2) return;
    Marginal m{subset, {}, 0};
    for (const auto& [sub, v] : acc) {
      m.values.emplace_back(word_label(sub, n), v);
      m.total += v;
    }
    out.push_back(std::move(m));
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == k) {
      emit();
      return;
    }
    for (int x = next; x <= n; ++x) {
      subset.push_back(x);
      self(self, x + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Bradley-Terry checks: circuit binomials vanish under q_ij -> rho_{ij} theta_j
/// and under q_ij -> theta_j/(theta_i + theta_j) at random points;
/// q_ij + q_ji = 1; and, for antichains, the pairwise marginals of PL equal
/// the BT values.
struct BTReport {
  std::size_t circuits = 0;
  std::size_t pairs = 0;
  bool lawrence_vanish = true;
  bool bt_vanish = true;
  bool complementary = true;
  std::optional<bool> marginals_match;  // antichains only
  std::vector<std::string> failures;

  bool ok() const { return lawrence_vanish && bt_vanish && complementary && marginals_match.value_or(true); }
};

inline std::vector<Rational> random_theta(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rational> t;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(Integer(static_cast<long>(1 + rng() % 19)), Integer(static_cast<long>(1 + rng() % 7)));
    r.canonicalize();
    t.push_back(r);
  }
  return t;
}

inline BTReport bt_parametrization_check(const Poset& constraint, int trials, std::uint64_t seed = 1) {
  if (trials < 1) throw Error("bt_parametrization_check needs trials >= 1");
  const std::size_t n = constraint.size();
  const BTCircuits bt = bt_circuit_binomials(constraint, std::max<int>(3, static_cast<int>(n)));
  BTReport rep;
  rep.circuits = bt.binomials.size();
  rep.pairs = bt.pairs.size();

  // Lawrence form: exponent of rho_{min,max} and theta_j per variable.
  std::map<std::pair<int, int>, std::size_t> rho;
  for (const auto& [i, j] : bt.pairs) rho.try_emplace({std::min(i, j), std::max(i, j)}, rho.size());
  auto image = [&](const Exponents& e) {
    std::vector<long> img(rho.size() + n, 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const auto [i, j] = bt.pairs[k];
      img[rho.at({std::min(i, j), std::max(i, j)})] += e[k];
      img[rho.size() + static_cast<std::size_t>(j - 1)] += e[k];
    }
    return img;
  };
  for (std::size_t b = 0; b < bt.binomials.size(); ++b)
    if (image(bt.binomials[b].lead) != image(bt.binomials[b].trail)) {
      rep.lawrence_vanish = false;
      rep.failures.push_back("circuit " + binomial_string(bt.binomials[b], bt.variables) + " not in the Lawrence kernel");
    }

  std::mt19937_64 rng(seed);
  const bool antichain_case = constraint.strict_relations().empty();
  if (antichain_case) rep.marginals_match = true;
  for (int t = 0; t < trials; ++t) {
    const auto theta = random_theta(n, rng);
    std::vector<Rational> qv;
    for (const auto& [i, j] : bt.pairs) {
      const Rational& ti = theta[static_cast<std::size_t>(i - 1)];
      const Rational& tj = theta[static_cast<std::size_t>(j - 1)];
      qv.push_back(tj / (ti + tj));
    }
    for (std::size_t k = 0; k < bt.pairs.size(); ++k)
      for (std::size_t l = 0; l < bt.pairs.size(); ++l)
        if (bt.pairs[l].first == bt.pairs[k].second && bt.pairs[l].second == bt.pairs[k].first && qv[k] + qv[l] != 1)
          rep.complementary = false;
    auto mono = [&](const Exponents& e) {
      Rational v = 1;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (int r = 0; r < e[k]; ++r) v *= qv[k];
      return v;
    };
    for (const auto& b : bt.binomials)
      if (mono(b.lead) != mono(b.trail)) rep.bt_vanish = false;
    if (antichain_case && n >= 2) {
      const auto probs = pl_probability(constraint, theta);
      for (const auto& m : marginalize(probs.distribution(), 2)) {
        const int i = m.subset[0], j = m.subset[1];
        const Rational ti = theta[static_cast<std::size_t>(i - 1)], tj = theta[static_cast<std::size_t>(j - 1)];
        const std::string ij = word_label({i, j}, static_cast<int>(n)), ji = word_label({j, i}, static_cast<int>(n));
        if (m.normalized(ij) != tj / (ti + tj) || m.normalized(ji) != ti / (ti + tj)) {
          rep.marginals_match = false;
          rep.failures.push_back("pairwise marginal of {" + std::to_string(i) + "," + std::to_string(j) + "} differs");
        }
      }
    }
  }
  if (!rep.bt_vanish) rep.failures.push_back("a circuit does not vanish at a random BT point");
  if (!rep.complementary) rep.failures.push_back("q_ij + q_ji != 1 at a random point");
  return rep;
}

/// Leading monomials of a polynomial Gröbner basis.
inline MonomialIdeal polynomial_initial_ideal(const std::vector<Polynomial>& gb, const TermOrder& ord, std::size_t nvars) {
  std::vector<Exponents> leads;
  for (const auto& g : gb)
    if (!g.is_zero()) leads.push_back(*g.leading(ord).first);
  return MonomialIdeal(nvars, std::move(leads));
}

/// Intersection of monomial primes <x_i : i in S> for the given sets S.
inline MonomialIdeal intersect_primes(const std::vector<std::vector<std::size_t>>& primes, std::size_t nvars) {
  std::vector<VarSet> edges;
  for (const auto& s : primes) {
    VarSet v(nvars);
    for (const auto k : s) v.set(k);
    edges.push_back(std::move(v));
  }
  std::vector<Exponents> gens;
  for (const auto& t : minimal_transversals(edges, nvars)) gens.push_back(t.exponents());
  return MonomialIdeal(nvars, std::move(gens));
}

}  // namespace rankalg
