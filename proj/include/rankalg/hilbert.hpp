#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rankalg/core.hpp"
#include "rankalg/monomial.hpp"

namespace rankalg {

/// Monomial ideal stored by its minimal generators (sorted, an antichain
/// under divisibility).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Exponents> gens) : nvars_(nvars), gens_(minimalize(std::move(gens))) {
    for (const auto& g : gens_)
      if (g.size() != nvars_) throw Error("monomial has wrong number of variables");
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Exponents& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return divides(g, m); });
  }

  bool squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Exponents& g) { return rankalg::squarefree(g); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  static std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
      const long da = total_degree(a), db = total_degree(b);
      return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& h : out)
        if (divides(h, g)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Exponents> gens_;
};

/// numerator(t) / (1 - t)^K with numerator(1) != 0 (canonical form).
struct HilbertSeries {
  std::vector<Integer> numerator;
  long K = 0;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

  std::string to_string() const {
    std::string num;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      if (numerator[i] == 0) continue;
      const bool neg = numerator[i] < 0;
      const Integer a = neg ? Integer(-numerator[i]) : numerator[i];
      if (num.empty())
        num += neg ? "-" : "";
      else
        num += neg ? " - " : " + ";
      if (i == 0 || a != 1) num += a.get_str();
      if (i >= 1) num += "t";
      if (i >= 2) num += "^" + std::to_string(i);
    }
    if (num.empty()) num = "0";
    return "(" + num + ")/(1-t)^" + std::to_string(K);
  }

  /// Dimension of the degree-d graded piece.
  Integer hilbert_function(long d) const {
    Integer s = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      const long m = d - static_cast<long>(i);
      if (m < 0) break;
      if (K == 0) {
        if (m == 0) s += numerator[i];
        continue;
      }
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + K - 1), static_cast<unsigned long>(K - 1));
      s += numerator[i] * c;
    }
    return s;
  }
};

struct SeriesInvariants {
  long krull_dim = 0;
  Integer degree = 0;
  bool symmetric = false;
};

namespace detail {

using TPoly = std::vector<Integer>;

inline void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline TPoly add(TPoly a, const TPoly& b, long shift = 0) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += b[i];
  trim(a);
  return a;
}

inline TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

/// 1 - t^d
inline TPoly one_minus_power(long d) {
  TPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] += 1;
  p[static_cast<std::size_t>(d)] -= 1;
  trim(p);
  return p;
}

inline std::vector<Exponents> minimal_only(std::vector<Exponents> gens) { return MonomialIdeal::minimalize(std::move(gens)); }

struct ExponentListHash {
  std::size_t operator()(const std::vector<Exponents>& v) const {
    std::size_t h = v.size();
    for (const auto& e : v)
      for (const int x : e) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

struct NumeratorCache {
  std::unordered_map<std::vector<Exponents>, TPoly, ExponentListHash> map;
  static constexpr std::size_t kMaxEntries = 200'000;
};

inline TPoly power(const TPoly& p, std::size_t e) {
  TPoly out{1};
  for (std::size_t k = 0; k < e; ++k) out = mul(out, p);
  return out;
}

/// Numerator for minimal generators `gens` over their own support; the
/// result is independent of unused variables.
inline TPoly numerator_rec(std::vector<Exponents> gens, NumeratorCache& cache) {
  if (gens.empty()) return {1};
  if (gens.size() == 1) return one_minus_power(total_degree(gens[0]));
  const std::size_t n = gens[0].size();

  // Linear generators x: factor (1 - t), drop x.
  std::vector<char> linear(n, 0);
  std::size_t nlinear = 0;
  for (const auto& g : gens)
    if (total_degree(g) == 1)
      for (std::size_t k = 0; k < n; ++k)
        if (g[k]) {
          linear[k] = 1;
          ++nlinear;
        }
  if (nlinear > 0 && nlinear < gens.size()) {
    std::vector<Exponents> rest;
    for (auto& g : gens) {
      bool keep = total_degree(g) > 1;
      for (std::size_t k = 0; k < n && keep; ++k)
        if (g[k] && linear[k]) keep = false;  // cannot happen for minimal gens, kept for safety
      if (keep) rest.push_back(std::move(g));
    }
    return mul(power(one_minus_power(1), nlinear), numerator_rec(std::move(rest), cache));
  }

  // Components of the variable-sharing graph.
  std::vector<int> parent(n);
  for (std::size_t k = 0; k < n; ++k) parent[k] = static_cast<int>(k);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  std::vector<int> freq(n, 0);
  for (const auto& g : gens) {
    int first = -1;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k]) {
        ++freq[k];
        if (first < 0)
          first = static_cast<int>(k);
        else
          parent[static_cast<std::size_t>(find(static_cast<int>(k)))] = find(first);
      }
  }
  std::map<int, std::vector<Exponents>> comps;
  for (auto& g : gens) {
    std::size_t k = 0;
    while (!g[k]) ++k;
    comps[find(static_cast<int>(k))].push_back(g);
  }
  if (comps.size() > 1) {
    TPoly out{1};
    for (auto& [root, part] : comps) out = mul(out, numerator_rec(std::move(part), cache));
    return out;
  }

  auto it = cache.map.find(gens);
  if (it != cache.map.end()) return it->second;

  const std::size_t x = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  // I + <x>
  std::vector<Exponents> plus;
  Exponents ex(n, 0);
  ex[x] = 1;
  plus.push_back(ex);
  for (const auto& g : gens)
    if (!g[x]) plus.push_back(g);
  // I : x
  std::vector<Exponents> colon;
  for (auto g : gens) {
    if (g[x]) --g[x];
    colon.push_back(std::move(g));
  }
  const TPoly a = numerator_rec(minimal_only(std::move(plus)), cache);
  const TPoly b = numerator_rec(minimal_only(std::move(colon)), cache);
  TPoly out = add(a, b, 1);
  if (cache.map.size() < NumeratorCache::kMaxEntries) cache.map.emplace(std::move(gens), out);
  return out;
}

/// Numerator N with HS(S/I) = N(t) / (1-t)^n, by pivot splitting
/// N(I) = N(I + <x>) + t N(I : x) on the most frequent variable x, with
/// linear generators and independent variable blocks factored out.
inline TPoly hilbert_numerator(const std::vector<Exponents>& gens, std::size_t /*n*/) {
  NumeratorCache cache;
  return numerator_rec(minimal_only(gens), cache);
}

}  // namespace detail

/// Hilbert series of S/I for S = K[x_1..x_numvars], in canonical form.
inline HilbertSeries hilbert_series(const MonomialIdeal& ideal, std::size_t numvars) {
  if (ideal.nvars() != numvars && !ideal.is_zero()) throw Error("hilbert_series: variable count mismatch");
  detail::TPoly num = detail::hilbert_numerator(ideal.generators(), numvars);
  long k = static_cast<long>(numvars);
  // Divide by (1 - t) while N(1) == 0.
  while (!num.empty()) {
    Integer at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0 || k == 0) break;
    detail::TPoly q(num.size() - 1, 0);
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      carry += num[i];
      q[i] = carry;
    }
    num = std::move(q);
    detail::trim(num);
    --k;
  }
  return {num, k};
}

inline SeriesInvariants series_invariants(const HilbertSeries& h) {
  SeriesInvariants out;
  out.krull_dim = h.K;
  for (const auto& c : h.numerator) out.degree += c;
  out.symmetric = std::equal(h.numerator.begin(), h.numerator.end(), h.numerator.rbegin());
  return out;
}

// ---------------------------------------------------------------------------
// Squarefree ideals as set systems

/// Subset of {0..n-1} as a bit vector.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static VarSet support(const Exponents& e) {
    VarSet s(e.size());
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) s.set(k);
    return s;
  }

  std::size_t universe() const { return n_; }
  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (const auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool intersects(const VarSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VarSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  Exponents exponents() const {
    Exponents e(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) e[k] = test(k) ? 1 : 0;
    return e;
  }
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_; ++k)
      if (test(k)) out.push_back(k);
    return out;
  }

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend auto operator<=>(const VarSet&, const VarSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Minimal transversals (minimal hitting sets) of a set family, by Berge's
/// incremental method. Throws CapExceeded when the intermediate family
/// grows beyond `cap`.
inline std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& edges, std::size_t n, std::size_t cap = 5'000'000) {
  std::vector<VarSet> tr{VarSet(n)};
  for (const auto& e : edges) {
    const auto members = e.elements();
    std::vector<VarSet> hit, next;
    std::vector<VarSet> extended;
    for (const auto& t : tr) {
      if (t.intersects(e))
        hit.push_back(t);
      else
        for (const auto v : members) {
          VarSet u = t;
          u.set(v);
          extended.push_back(std::move(u));
        }
    }
    // Extended sets that contain a set already hitting e are redundant.
    std::sort(extended.begin(), extended.end(), [](const VarSet& a, const VarSet& b) {
      return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
    next = hit;
    for (auto& u : extended) {
      bool redundant = false;
      for (const auto& h : next)
        if (h.subset_of(u) && !(h == u)) {
          redundant = true;
          break;
        }
      if (!redundant) next.push_back(std::move(u));
      if (next.size() > cap) throw CapExceeded("minimal transversal family exceeds " + std::to_string(cap));
    }
    tr = std::move(next);
  }
  std::sort(tr.begin(), tr.end());
  return tr;
}

/// Alexander dual of a squarefree monomial ideal: generators are the minimal
/// transversals of the generator supports. The dual of the zero ideal is
/// the unit ideal (an empty intersection of primes).
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.squarefree()) throw Error("alexander_dual: ideal is not squarefree");
  std::vector<VarSet> edges;
  for (const auto& g : ideal.generators()) edges.push_back(VarSet::support(g));
  std::vector<Exponents> gens;
  for (const auto& t : minimal_transversals(edges, ideal.nvars())) gens.push_back(t.exponents());
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

/// Facets of the Stanley-Reisner complex of a squarefree monomial ideal
/// (complements of minimal transversals), as sorted vertex lists.
inline std::vector<std::vector<std::size_t>> stanley_reisner_facets(const MonomialIdeal& ideal) {
  if (!ideal.squarefree()) throw Error("stanley_reisner_facets: ideal is not squarefree");
  const std::size_t n = ideal.nvars();
  std::vector<VarSet> edges;
  for (const auto& g : ideal.generators()) edges.push_back(VarSet::support(g));
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : minimal_transversals(edges, n)) {
    std::vector<std::size_t> f;
    for (std::size_t k = 0; k < n; ++k)
      if (!t.test(k)) f.push_back(k);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Degree of S/I for squarefree I as the number of facets of maximal size
/// (the normalized volume when I is a squarefree initial ideal of a toric
/// ideal). Returns (dimension of the complex + 1, count).
inline std::pair<long, Integer> facet_volume(const MonomialIdeal& ideal) {
  const auto facets = stanley_reisner_facets(ideal);
  long top = 0;
  for (const auto& f : facets) top = std::max<long>(top, static_cast<long>(f.size()));
  Integer count = 0;
  for (const auto& f : facets)
    if (static_cast<long>(f.size()) == top) ++count;
  return {top, count};
}

}  // namespace rankalg
