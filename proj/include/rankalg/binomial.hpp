#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rankalg/core.hpp"
#include "rankalg/monomial.hpp"
#include "rankalg/parallel.hpp"
#include "rankalg/polynomial.hpp"

namespace rankalg {

/// x^lead - x^trail with lead > trail in the order that produced it.
/// The zero binomial has lead == trail.
struct Binomial {
  Exponents lead, trail;

  bool is_zero() const { return lead == trail; }
  long degree() const { return std::max(total_degree(lead), total_degree(trail)); }
  bool homogeneous() const { return total_degree(lead) == total_degree(trail); }
  bool disjoint() const { return coprime(lead, trail); }

  /// Exponent difference lead - trail.
  std::vector<long> difference() const {
    std::vector<long> d(lead.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<long>(lead[k]) - trail[k];
    return d;
  }

  Polynomial polynomial() const {
    return Polynomial::term(lead, 1) - Polynomial::term(trail, 1);
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// Orders the two monomials so the ord-larger one leads.
inline Binomial oriented(Exponents a, Exponents b, const TermOrder& ord) {
  if (ord.compare(a, b) < 0) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

/// Divides both monomials by their gcd.
inline void cancel_common(Exponents& a, Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int g = std::min(a[k], b[k]);
    a[k] -= g;
    b[k] -= g;
  }
}

/// Binomial from an integer vector u: x^{u+} - x^{u-}, oriented by ord.
inline Binomial binomial_from_vector(const std::vector<Integer>& u, const TermOrder& ord) {
  Exponents plus(u.size(), 0), minus(u.size(), 0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u[k].fits_sint_p()) throw CapExceeded("exponent does not fit a machine integer");
    const long v = u[k].get_si();
    if (v > INT_MAX / 2 || v < -INT_MAX / 2) throw CapExceeded("exponent too large");
    if (v > 0) plus[k] = static_cast<int>(v);
    if (v < 0) minus[k] = static_cast<int>(-v);
  }
  return oriented(std::move(plus), std::move(minus), ord);
}

/// "p_{a}·p_{b} − p_{c}·p_{d}" with factors sorted by name.
inline std::string binomial_string(const Binomial& b, const std::vector<std::string>& names) {
  if (b.is_zero()) return "0";
  return monomial_string(b.lead, names) + " − " + monomial_string(b.trail, names);
}

/// Incremental Buchberger for ideals generated by pure binomials
/// x^a - x^b. Normal forms of monomials are monomials, so all arithmetic is
/// on exponent vectors. Pairs are pruned with the Gebauer-Moeller criteria
/// and processed in batches of equal sugar degree; a batch is reduced
/// against a snapshot of the basis (optionally on several threads) and
/// merged in pair order, which makes the result independent of the thread
/// count.
///
/// With `cancel_common` every new element is divided by the gcd of its two
/// monomials. That is only sound inside a toric ideal, where
/// x^m (x^a - x^b) in I implies x^a - x^b in I.
class BinomialGroebner {
 public:
  struct Options {
    TermOrder order = TermOrder::grevlex();
    bool cancel_common = false;
    GroebnerLimits limits = {};
  };

  BinomialGroebner(std::size_t nvars, Options opts) : nvars_(nvars), opts_(std::move(opts)) {}

  std::size_t nvars() const { return nvars_; }
  const TermOrder& order() const { return opts_.order; }
  std::size_t reductions() const { return reductions_; }
  std::size_t pending_pairs() const { return pairs_.size(); }
  std::size_t size() const { return active_.size(); }
  /// Largest sugar degree of a processed pair batch.
  long max_processed_degree() const { return max_processed_degree_; }
  long max_generator_degree() const { return max_generator_degree_; }

  /// Monomial normal form modulo the current basis.
  Exponents normal_form(Exponents m) const {
    std::uint64_t mask = support_mask(m);
    long deg = total_degree(m);
    while (true) {
      const Element* hit = nullptr;
      for (const int idx : active_) {
        const Element& e = elements_[static_cast<std::size_t>(idx)];
        if (e.lead_degree > deg || (e.lead_mask & ~mask) != 0) continue;
        if (divides(e.lead, m)) {
          hit = &e;
          break;
        }
      }
      if (!hit) return m;
      for (std::size_t k = 0; k < nvars_; ++k) m[k] += hit->trail[k] - hit->lead[k];
      mask = support_mask(m);
      deg = total_degree(m);
    }
  }

  /// Reduced form of x^a - x^b, oriented; zero binomial when it lies in the
  /// ideal spanned so far.
  Binomial reduce(const Exponents& a, const Exponents& b) const {
    Exponents ra = normal_form(a), rb = normal_form(b);
    if (ra == rb) return {ra, rb};
    if (opts_.cancel_common) cancel_common(ra, rb);
    return oriented(std::move(ra), std::move(rb), opts_.order);
  }
  Binomial reduce(const Binomial& g) const { return reduce(g.lead, g.trail); }

  /// Adds a generator. Returns false when it already reduces to zero.
  bool add_generator(const Binomial& g) {
    max_generator_degree_ = std::max(max_generator_degree_, g.degree());
    Binomial r = reduce(g);
    if (r.is_zero()) return false;
    const long sugar = std::max(g.degree(), r.degree());
    insert(std::move(r), sugar);
    return true;
  }

  /// Processes every pending pair of sugar degree <= max_degree. Pairs above
  /// the configured degree cap raise CapExceeded instead of being dropped.
  void complete(long max_degree = LONG_MAX) {
    const long cap = opts_.limits.effective_degree_cap(max_generator_degree_);
    while (!pairs_.empty()) {
      long s_min = LONG_MAX;
      for (const auto& p : pairs_) s_min = std::min(s_min, p.sugar);
      if (s_min > max_degree) return;
      if (s_min > cap)
        throw CapExceeded("binomial Buchberger degree cap " + std::to_string(cap) + " exceeded (" +
                          std::to_string(active_.size()) + " basis elements, " + std::to_string(pairs_.size()) +
                          " pending pairs)");
      std::vector<Pair> batch, rest;
      for (auto& p : pairs_) (p.sugar == s_min ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [](const Pair& x, const Pair& y) { return std::tie(x.j, x.i) < std::tie(y.j, y.i); });
      max_processed_degree_ = std::max(max_processed_degree_, s_min);

      constexpr std::size_t kChunk = 512;
      for (std::size_t lo = 0; lo < batch.size(); lo += kChunk) {
        const std::size_t hi = std::min(batch.size(), lo + kChunk);
        reductions_ += hi - lo;
        if (reductions_ > opts_.limits.max_reductions)
          throw CapExceeded("binomial Buchberger S-pair reduction cap " + std::to_string(opts_.limits.max_reductions) +
                            " exceeded");
        std::vector<Binomial> reduced(hi - lo);
        parallel_for(hi - lo, opts_.limits.jobs, [&](std::size_t k) {
          const Pair& p = batch[lo + k];
          const Element& a = elements_[p.i];
          const Element& b = elements_[p.j];
          Exponents sa(p.lcm), sb(p.lcm);
          for (std::size_t v = 0; v < nvars_; ++v) {
            sa[v] += a.trail[v] - a.lead[v];
            sb[v] += b.trail[v] - b.lead[v];
          }
          reduced[k] = reduce(sa, sb);
        });
        for (std::size_t k = 0; k < reduced.size(); ++k) {
          if (reduced[k].is_zero()) continue;
          Binomial r = reduce(reduced[k]);
          if (!r.is_zero()) insert(std::move(r), batch[lo + k].sugar);
        }
      }
    }
  }

  /// Active elements: a (not necessarily reduced) Gröbner basis once
  /// complete() has run without a degree bound.
  std::vector<Binomial> basis() const {
    std::vector<Binomial> out;
    for (const int idx : active_) {
      const Element& e = elements_[static_cast<std::size_t>(idx)];
      out.push_back({e.lead, e.trail});
    }
    return out;
  }

  /// Reduced Gröbner basis: trails fully reduced, sorted by degree and then
  /// by descending leading monomial.
  std::vector<Binomial> reduced_basis() const {
    std::vector<Binomial> out;
    for (const int idx : active_) {
      const Element& e = elements_[static_cast<std::size_t>(idx)];
      Exponents lead = e.lead, trail = normal_form(e.trail);
      if (opts_.cancel_common) cancel_common(lead, trail);
      out.push_back({std::move(lead), std::move(trail)});
    }
    sort_binomials(out, opts_.order);
    return out;
  }

  static void sort_binomials(std::vector<Binomial>& v, const TermOrder& ord) {
    std::sort(v.begin(), v.end(), [&](const Binomial& a, const Binomial& b) {
      const long da = a.degree(), db = b.degree();
      if (da != db) return da < db;
      const int c = ord.compare(a.lead, b.lead);
      if (c != 0) return c > 0;
      return ord.compare(a.trail, b.trail) > 0;
    });
  }

 private:
  struct Element {
    Exponents lead, trail;
    std::uint64_t lead_mask;
    long lead_degree;
    long sugar;
  };
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
    long sugar;
  };

  long pair_sugar(std::size_t i, std::size_t j, const Exponents& l) const {
    const long dl = total_degree(l);
    const Element& a = elements_[i];
    const Element& b = elements_[j];
    return std::max(a.sugar + dl - a.lead_degree, b.sugar + dl - b.lead_degree);
  }

  // Gebauer-Moeller update for a new element h (already reduced).
  void insert(Binomial r, long sugar) {
    const std::size_t h = elements_.size();
    Element e{std::move(r.lead), std::move(r.trail), 0, 0, 0};
    e.lead_mask = support_mask(e.lead);
    e.lead_degree = total_degree(e.lead);
    e.sugar = std::max(sugar, e.lead_degree);
    elements_.push_back(std::move(e));
    const Exponents& lh = elements_[h].lead;

    // Drop old pairs (i, j) whose lcm is a proper multiple handled via h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (divides(lh, p.lcm)) {
        const Exponents li = lcm(elements_[p.i].lead, lh);
        const Exponents lj = lcm(elements_[p.j].lead, lh);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);

    // New pairs with the active elements.
    struct Candidate {
      std::size_t i;
      Exponents lcm;
      bool coprime;
      std::uint64_t mask = 0;
      long degree = 0;
      bool alive = true;
    };
    std::vector<Candidate> cand;
    for (const int idx : active_) {
      const std::size_t i = static_cast<std::size_t>(idx);
      Exponents l = lcm(elements_[i].lead, lh);
      const std::uint64_t m = support_mask(l);
      const long d = total_degree(l);
      cand.push_back({i, std::move(l), coprime(elements_[i].lead, lh), m, d});
    }
    // Criterion M: another candidate lcm properly divides this one.
    for (auto& c : cand)
      for (const auto& d : cand)
        if (d.degree < c.degree && (d.mask & ~c.mask) == 0 && divides(d.lcm, c.lcm)) {
          c.alive = false;
          break;
        }
    // Criterion F and product criterion on groups of equal lcm.
    std::map<Exponents, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (cand[k].alive) groups[cand[k].lcm].push_back(k);
    std::vector<std::size_t> chosen;
    for (auto& [l, members] : groups) {
      bool any_coprime = false;
      for (const std::size_t k : members) any_coprime = any_coprime || cand[k].coprime;
      if (!any_coprime) chosen.push_back(*std::min_element(members.begin(), members.end()));
    }
    std::sort(chosen.begin(), chosen.end());
    for (const std::size_t k : chosen) {
      const std::size_t i = cand[k].i;
      pairs_.push_back({i, h, cand[k].lcm, pair_sugar(i, h, cand[k].lcm)});
    }

    // Elements whose lead is a multiple of lh leave the active set.
    std::vector<int> act;
    for (const int idx : active_)
      if (!divides(lh, elements_[static_cast<std::size_t>(idx)].lead)) act.push_back(idx);
    act.push_back(static_cast<int>(h));
    active_ = std::move(act);
  }

  std::size_t nvars_;
  Options opts_;
  std::vector<Element> elements_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  long max_generator_degree_ = 0;
  long max_processed_degree_ = 0;
  std::size_t reductions_ = 0;
};

/// Result of minimalizing a homogeneous binomial generating set.
struct MinimalGenerators {
  std::vector<Binomial> kept;
  std::map<long, std::size_t> degrees;
};

/// Keeps a generator iff it does not reduce to zero modulo a Gröbner basis
/// (truncated at its degree) of the generators kept before it. Generators
/// are taken by increasing degree, ties by increasing leading monomial.
inline MinimalGenerators minimal_generators(std::vector<Binomial> gens, const TermOrder& ord, const GroebnerLimits& limits = {}) {
  for (auto& g : gens) {
    if (!g.homogeneous()) throw Error("minimal_generator_degrees: generator is not homogeneous");
    g = oriented(g.lead, g.trail, ord);
  }
  std::stable_sort(gens.begin(), gens.end(), [&](const Binomial& a, const Binomial& b) {
    const long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return ord.compare(a.lead, b.lead) < 0;
  });
  MinimalGenerators out;
  if (gens.empty()) return out;
  GroebnerLimits lim = limits;
  if (lim.max_degree <= 0) lim.max_degree = std::max<long>(1, gens.back().degree());
  BinomialGroebner gb(gens.front().lead.size(), {ord, false, lim});
  long current = -1;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.degree() != current) {
      current = g.degree();
      gb.complete(current);
    }
    if (gb.add_generator(g)) {
      out.kept.push_back(g);
      ++out.degrees[current];
    }
  }
  return out;
}

inline std::map<long, std::size_t> minimal_generator_degrees(const std::vector<Binomial>& gens, const TermOrder& ord,
                                                             const GroebnerLimits& limits = {}) {
  return minimal_generators(gens, ord, limits).degrees;
}

}  // namespace rankalg
