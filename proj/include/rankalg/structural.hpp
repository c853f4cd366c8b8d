#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankalg/binomial.hpp"
#include "rankalg/core.hpp"
#include "rankalg/parallel.hpp"
#include "rankalg/poset.hpp"

namespace rankalg {

/// Binomials in the chain variables of a graded poset (columns of its model
/// matrices, same order and labels).
struct StructuralBasis {
  std::vector<std::string> variables;
  std::vector<Binomial> binomials;
  std::size_t raw = 0;  // candidates before dedup and zero removal
};

inline constexpr std::size_t kStructuralCandidateCap = 1'000'000;

namespace detail {

struct ChainIndex {
  std::vector<MaximalChain> chains;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> labels;

  explicit ChainIndex(const GradedPoset& q) : chains(maximal_chains(q)) {
    for (std::size_t k = 0; k < chains.size(); ++k) {
      index[chains[k].path] = k;
      labels.push_back("p_{" + chain_label(q, chains[k]) + "}");
    }
  }
  std::size_t at(const std::vector<int>& path) const {
    auto it = index.find(path);
    if (it == index.end()) throw Error("internal: path is not a maximal chain");
    return it->second;
  }
};

/// Saturated chains from a minimal element up to e (each ending at e).
inline std::vector<std::vector<int>> chains_down_to(const Poset& p, int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int a) -> void {
    path.push_back(a);
    if (p.down(a).empty()) {
      out.emplace_back(path.rbegin(), path.rend());
    } else {
      for (int b : p.down(a)) self(self, b);
    }
    path.pop_back();
  };
  dfs(dfs, e);
  std::sort(out.begin(), out.end());
  return out;
}

/// Saturated chains from e up to a maximal element (each starting at e).
inline std::vector<std::vector<int>> chains_up_from(const Poset& p, int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int a) -> void {
    path.push_back(a);
    if (p.up(a).empty()) {
      out.push_back(path);
    } else {
      for (int b : p.up(a)) self(self, b);
    }
    path.pop_back();
  };
  dfs(dfs, e);
  return out;
}

inline Binomial quadric(std::size_t nvars, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  Exponents x(nvars, 0), y(nvars, 0);
  ++x[a];
  ++x[b];
  ++y[c];
  ++y[d];
  return {std::move(x), std::move(y)};
}

inline void finish(StructuralBasis& out, std::vector<Binomial> cands) {
  const TermOrder ord = TermOrder::grevlex();
  std::set<std::pair<Exponents, Exponents>> seen;
  for (auto& b : cands) {
    if (b.is_zero()) continue;
    Binomial o = oriented(std::move(b.lead), std::move(b.trail), ord);
    if (seen.insert({o.lead, o.trail}).second) out.binomials.push_back(std::move(o));
  }
  BinomialGroebner::sort_binomials(out.binomials, ord);
}

/// Simple cycles of an undirected graph with at most `max_len` vertices,
/// one per rotation/reflection class: the cycle starts at its least vertex
/// and its second vertex is less than its last.
inline std::vector<std::vector<int>> simple_cycles(const std::vector<std::vector<int>>& adj, std::size_t min_len,
                                                   std::size_t max_len) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(adj.size());
  std::vector<int> path;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    auto dfs = [&](auto&& self, int v) -> void {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == s && path.size() >= min_len && path[1] < path.back()) out.push_back(path);
        if (w <= s || on[static_cast<std::size_t>(w)] || path.size() >= max_len) continue;
        on[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on[static_cast<std::size_t>(w)] = 0;
      }
    };
    path = {s};
    on[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s);
    on[static_cast<std::size_t>(s)] = 0;
    if (out.size() > kStructuralCandidateCap) throw CapExceeded("cycle enumeration exceeded 10^6 cycles");
  }
  return out;
}

}  // namespace detail

/// 2x2 minors of the matrices M_q (rows: chains of Q_{<=q}, columns: chains
/// of Q_{>=q}, entries: the concatenated chain).
inline StructuralBasis csiszar_minor_basis(const GradedPoset& q, unsigned jobs = 1) {
  if (q.rk() < 1) throw Error("csiszar_minor_basis needs rank at least 1");
  const Poset& p = q.poset();
  const detail::ChainIndex ci(q);
  const std::size_t nv = ci.chains.size();
  StructuralBasis out;
  out.variables = ci.labels;
  std::vector<std::vector<Binomial>> per(p.size());
  parallel_for(p.size(), jobs, [&](std::size_t e) {
    const auto below = detail::chains_down_to(p, static_cast<int>(e));
    const auto above = detail::chains_up_from(p, static_cast<int>(e));
    std::vector<std::vector<std::size_t>> m(below.size(), std::vector<std::size_t>(above.size()));
    for (std::size_t r = 0; r < below.size(); ++r)
      for (std::size_t c = 0; c < above.size(); ++c) {
        std::vector<int> path = below[r];
        path.insert(path.end(), above[c].begin() + 1, above[c].end());
        m[r][c] = ci.at(path);
      }
    for (std::size_t r1 = 0; r1 < below.size(); ++r1)
      for (std::size_t r2 = r1 + 1; r2 < below.size(); ++r2)
        for (std::size_t c1 = 0; c1 < above.size(); ++c1)
          for (std::size_t c2 = c1 + 1; c2 < above.size(); ++c2)
            per[e].push_back(detail::quadric(nv, m[r1][c1], m[r2][c2], m[r1][c2], m[r2][c1]));
  });
  std::vector<Binomial> all;
  for (auto& v : per) {
    out.raw += v.size();
    for (auto& b : v) all.push_back(std::move(b));
  }
  detail::finish(out, std::move(all));
  return out;
}

/// Ascending-model binomials. Class 1: quadrics p_a p_b - p_c p_d where the
/// chains a, b meet and c, d use the same multiset of elements. Class 2:
/// every simple cycle of length <= 2*degree_cap in a rank slab Q_{i,i+1},
/// lifted to maximal chains by fixing one lower chain per bottom vertex
/// and one upper chain per top vertex.
inline StructuralBasis ascending_lift_basis(const GradedPoset& q, int degree_cap) {
  if (q.rk() < 1) throw Error("ascending_lift_basis needs rank at least 1");
  if (degree_cap < 2) throw Error("ascending_lift_basis needs degree_cap >= 2");
  const Poset& p = q.poset();
  const detail::ChainIndex ci(q);
  const std::size_t nv = ci.chains.size();
  const std::size_t len = static_cast<std::size_t>(q.rk()) + 1;
  StructuralBasis out;
  out.variables = ci.labels;
  std::vector<Binomial> cands;
  auto bump = [&](std::size_t k) {
    out.raw += k;
    if (out.raw > kStructuralCandidateCap)
      throw CapExceeded("ascending_lift_basis: more than 10^6 candidate binomials; lower the degree cap");
  };

  // Class 1: walk both chains rank by rank; at every rank the pair (c, d)
  // takes the two elements in either order, subject to covers.
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) {
      const auto& a = ci.chains[i].path;
      const auto& b = ci.chains[j].path;
      bool meet = false;
      for (std::size_t r = 0; r < len; ++r) meet = meet || a[r] == b[r];
      if (!meet) continue;
      std::vector<int> c, d;
      auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == len) {
          const std::size_t ic = ci.at(c), id = ci.at(d);
          if (std::min(ic, id) == i && std::max(ic, id) == j) return;
          bump(1);
          cands.push_back(detail::quadric(nv, i, j, ic, id));
          return;
        }
        for (int swap = 0; swap < 2; ++swap) {
          const int x = swap ? b[r] : a[r], y = swap ? a[r] : b[r];
          if (swap && a[r] == b[r]) continue;
          if (r > 0 && (!p.less(c.back(), x) || !p.less(d.back(), y))) continue;
          // Fix the first differing rank to avoid producing (d, c) as well.
          if (swap && std::equal(a.begin(), a.begin() + static_cast<long>(r), b.begin())) continue;
          c.push_back(x);
          d.push_back(y);
          self(self, r + 1);
          c.pop_back();
          d.pop_back();
        }
      };
      rec(rec, 0);
    }

  // Class 2.
  for (int i = 0; i < q.rk(); ++i) {
    const auto& lo = q.level(i);
    const auto& hi = q.level(i + 1);
    std::vector<int> verts(lo.begin(), lo.end());
    verts.insert(verts.end(), hi.begin(), hi.end());
    std::map<int, int> local;
    for (std::size_t k = 0; k < verts.size(); ++k) local[verts[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> adj(verts.size());
    for (const int a : lo)
      for (const int b : p.up(a)) {
        adj[static_cast<std::size_t>(local[a])].push_back(local[b]);
        adj[static_cast<std::size_t>(local[b])].push_back(local[a]);
      }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    const auto cycles = detail::simple_cycles(adj, 4, 2 * static_cast<std::size_t>(degree_cap));
    std::map<int, std::vector<std::vector<int>>> down, up;
    for (const int a : lo) down[a] = detail::chains_down_to(p, a);
    for (const int b : hi) up[b] = detail::chains_up_from(p, b);
    for (const auto& cyc : cycles) {
      // Rotate so the cycle reads a_1 b_1 a_2 b_2 ... with a_j in the lower rank.
      std::vector<int> c;
      for (const int v : cyc) c.push_back(verts[static_cast<std::size_t>(v)]);
      if (q.rank(c[0]) != i) std::rotate(c.begin(), c.begin() + 1, c.end());
      const std::size_t s = c.size() / 2;
      std::size_t lifts = 1;
      for (std::size_t j = 0; j < s; ++j) lifts *= down[c[2 * j]].size() * up[c[2 * j + 1]].size();
      bump(lifts);
      std::vector<std::size_t> pick(2 * s, 0);
      while (true) {
        Exponents x(nv, 0), y(nv, 0);
        for (std::size_t j = 0; j < s; ++j) {
          const int a = c[2 * j], b = c[2 * j + 1], a_next = c[(2 * j + 2) % (2 * s)];
          const auto& ub = up[b][pick[2 * j + 1]];
          auto glue = [&](const std::vector<int>& dn) {
            std::vector<int> path = dn;
            path.insert(path.end(), ub.begin(), ub.end());
            return ci.at(path);
          };
          ++x[glue(down[a][pick[2 * j]])];
          ++y[glue(down[a_next][pick[(2 * j + 2) % (2 * s)]])];
        }
        cands.push_back({std::move(x), std::move(y)});
        std::size_t k = 0;
        for (; k < 2 * s; ++k) {
          const std::size_t lim = k % 2 == 0 ? down[c[k]].size() : up[c[k]].size();
          if (++pick[k] < lim) break;
          pick[k] = 0;
        }
        if (k == 2 * s) break;
      }
    }
  }
  detail::finish(out, std::move(cands));
  return out;
}

/// Cycle binomials of the cover graph of a rank-1 poset.
inline StructuralBasis bipartite_cycle_binomials(const GradedPoset& q) {
  if (q.rk() != 1) throw Error("bipartite_cycle_binomials needs a poset of rank 1");
  return ascending_lift_basis(q, std::max<int>(2, static_cast<int>(q.size()) / 2));
}

/// Bradley-Terry variables q_ij (i before j) over the ordered incomparable
/// pairs, and one circuit binomial per cycle of the incomparability graph.
struct BTCircuits {
  std::vector<std::pair<int, int>> pairs;  // 1-based items, lexicographic
  std::vector<std::string> variables;
  std::vector<Binomial> binomials;  // lead: forward product around the cycle
};

inline BTCircuits bt_circuit_binomials(const Poset& constraint, int length_cap) {
  if (length_cap < 3) throw Error("bt_circuit_binomials needs length_cap >= 3");
  const int n = static_cast<int>(constraint.size());
  BTCircuits out;
  std::map<std::pair<int, int>, std::size_t> var;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || constraint.comparable(i, j)) continue;
      var[{i, j}] = out.pairs.size();
      out.pairs.emplace_back(i + 1, j + 1);
      out.variables.push_back("q_{" + (n >= 10 ? std::to_string(i + 1) + "," + std::to_string(j + 1)
                                                : std::to_string(i + 1) + std::to_string(j + 1)) + "}");
    }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !constraint.comparable(i, j)) adj[static_cast<std::size_t>(i)].push_back(j);
  const auto cycles = detail::simple_cycles(adj, 3, static_cast<std::size_t>(length_cap));
  for (const auto& c : cycles) {
    Exponents x(out.pairs.size(), 0), y(out.pairs.size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int a = c[k], b = c[(k + 1) % c.size()];
      ++x[var.at({a, b})];
      ++y[var.at({b, a})];
    }
    out.binomials.push_back({std::move(x), std::move(y)});
  }
  return out;
}

/// Buchberger criterion for a binomial set: every S-pair with non-coprime
/// leads reduces to zero. Binomials are re-oriented under `ord`.
inline bool is_groebner_basis(const std::vector<Binomial>& gens, const TermOrder& ord) {
  std::vector<Binomial> g;
  for (const auto& b : gens)
    if (!b.is_zero()) g.push_back(oriented(b.lead, b.trail, ord));
  if (g.empty()) return true;
  std::vector<std::uint64_t> masks;
  for (const auto& b : g) masks.push_back(support_mask(b.lead));
  auto nf = [&](Exponents m) {
    while (true) {
      const std::uint64_t mm = support_mask(m);
      bool hit = false;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if ((masks[k] & ~mm) != 0 || !divides(g[k].lead, m)) continue;
        for (std::size_t v = 0; v < m.size(); ++v) m[v] += g[k].trail[v] - g[k].lead[v];
        hit = true;
        break;
      }
      if (!hit) return m;
    }
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].lead, g[j].lead)) continue;
      const Exponents l = lcm(g[i].lead, g[j].lead);
      Exponents a = l, b = l;
      for (std::size_t v = 0; v < l.size(); ++v) {
        a[v] += g[i].trail[v] - g[i].lead[v];
        b[v] += g[j].trail[v] - g[j].lead[v];
      }
      if (nf(a) != nf(b)) return false;
    }
  return true;
}

/// Searches grevlex orders for one under which `gens` is a Gröbner basis:
/// the natural variable order, its reverse, then `random_tries` seeded
/// random priority lists.
inline std::optional<TermOrder> find_groebner_order(const std::vector<Binomial>& gens, std::size_t nvars,
                                                    int random_tries = 20, std::uint64_t seed = 1) {
  std::vector<int> prio(nvars);
  for (std::size_t k = 0; k < nvars; ++k) prio[k] = static_cast<int>(k);
  std::vector<TermOrder> cands{TermOrder::grevlex()};
  std::reverse(prio.begin(), prio.end());
  cands.push_back(TermOrder::grevlex(prio));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_tries; ++t) {
    std::shuffle(prio.begin(), prio.end(), rng);
    cands.push_back(TermOrder::grevlex(prio));
  }
  for (const auto& ord : cands)
    if (is_groebner_basis(gens, ord)) return ord;
  return std::nullopt;
}

}  // namespace rankalg
