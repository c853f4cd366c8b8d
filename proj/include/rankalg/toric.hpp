#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rankalg/binomial.hpp"
#include "rankalg/core.hpp"
#include "rankalg/hilbert.hpp"
#include "rankalg/linalg.hpp"
#include "rankalg/monomial.hpp"
#include "rankalg/parallel.hpp"

namespace rankalg {

/// Nonnegative integer matrix with constant column sum and labels.
struct ToricSpec {
  Matrix<int> a;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;

  std::size_t nvars() const { return a.cols(); }

  /// The common column sum S; throws if columns disagree.
  long column_sum() const {
    long s = -1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      long t = 0;
      for (std::size_t r = 0; r < a.rows(); ++r) t += a(r, c);
      if (s >= 0 && t != s) throw Error("toric spec: column sums differ");
      s = t;
    }
    return s;
  }

  void validate() const {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(r, c) < 0) throw Error("toric spec: negative entry");
    column_sum();
    if (!column_labels.empty() && column_labels.size() != a.cols()) throw Error("toric spec: wrong number of column labels");
    auto sorted = column_labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("toric spec: duplicate column labels");
  }

  /// Variable names p_{label}.
  std::vector<std::string> variable_names() const {
    std::vector<std::string> out;
    for (const auto& l : column_labels) out.push_back("p_{" + l + "}");
    return out;
  }
};

/// A·(lead - trail) == 0.
inline bool in_kernel(const ToricSpec& spec, const Binomial& b) {
  for (std::size_t r = 0; r < spec.a.rows(); ++r) {
    long s = 0;
    for (std::size_t c = 0; c < spec.a.cols(); ++c) s += static_cast<long>(spec.a(r, c)) * (b.lead[c] - b.trail[c]);
    if (s != 0) return false;
  }
  return true;
}

/// Degree cap used by the saturation when none is configured. Twice the
/// generator degree is far too small here: lattice-basis binomials of low
/// degree routinely need S-pairs of degree 8-14 on 24 variables.
inline constexpr long kToricDefaultDegreeCap = 64;

/// Counters from a toric computation.
struct ToricStats {
  long max_pair_degree = 0;
  std::size_t reductions = 0;
  std::size_t lattice_rank = 0;
};

/// Reduced Gröbner basis of I_A under grevlex in column order, obtained by
/// saturating the lattice-basis ideal one variable at a time. The step for
/// variable x runs Buchberger under grevlex with x cheapest, so x never
/// divides a leading term; cancelling common factors keeps every element
/// inside I_A and leaves the result x-saturated. The final step (last
/// variable cheapest) is the default order.
inline std::vector<Binomial> toric_default_groebner(const ToricSpec& spec, const GroebnerLimits& limits = {},
                                                    ToricStats* stats = nullptr) {
  spec.validate();
  const std::size_t n = spec.nvars();
  const LatticeBasis lattice = kernel_lattice_basis(spec.a);
  std::vector<Binomial> current;
  for (const auto& v : lattice.vectors) current.push_back(binomial_from_vector(v, TermOrder::grevlex()));
  if (stats) stats->lattice_rank = lattice.dimension();
  if (current.empty()) return {};
  GroebnerLimits lim = limits;
  if (lim.max_degree <= 0) lim.max_degree = kToricDefaultDegreeCap;
  for (std::size_t x = 0; x < n; ++x) {
    const TermOrder ord = TermOrder::grevlex_last(n, static_cast<int>(x));
    BinomialGroebner gb(n, {ord, true, lim});
    for (const auto& g : current) gb.add_generator(oriented(g.lead, g.trail, ord));
    gb.complete();
    current = gb.reduced_basis();
    if (stats) {
      stats->max_pair_degree = std::max(stats->max_pair_degree, gb.max_processed_degree());
      stats->reductions += gb.reductions();
    }
  }
  return current;
}

/// Reduced Gröbner basis of I_A under ord.
inline std::vector<Binomial> toric_groebner(const ToricSpec& spec, const TermOrder& ord, const GroebnerLimits& limits = {}) {
  std::vector<Binomial> base = toric_default_groebner(spec, limits);
  const bool is_default = ord.kind == TermOrder::Kind::Grevlex &&
                          (ord.priority.empty() || std::is_sorted(ord.priority.begin(), ord.priority.end()));
  if (is_default || base.empty()) return base;
  GroebnerLimits lim = limits;
  if (lim.max_degree <= 0) lim.max_degree = kToricDefaultDegreeCap;
  BinomialGroebner gb(spec.nvars(), {ord, true, lim});
  for (const auto& g : base) gb.add_generator(oriented(g.lead, g.trail, ord));
  gb.complete();
  return gb.reduced_basis();
}

/// Minimal binomial generating set of I_A, sorted by degree and then by
/// descending leading monomial under the default grevlex order.
inline std::vector<Binomial> toric_markov_basis(const ToricSpec& spec, const GroebnerLimits& limits = {}) {
  const TermOrder ord = TermOrder::grevlex();
  auto kept = minimal_generators(toric_default_groebner(spec, limits), ord, limits).kept;
  BinomialGroebner::sort_binomials(kept, ord);
  return kept;
}

/// Every element of g1 lies in <g2> and vice versa.
inline bool same_ideal(const std::vector<Binomial>& g1, const std::vector<Binomial>& g2, const TermOrder& ord,
                       const GroebnerLimits& limits = {}) {
  auto contained = [&](const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
    std::vector<Binomial> nz;
    for (const auto& x : a)
      if (!x.is_zero()) nz.push_back(x);
    if (nz.empty()) return true;
    std::size_t n = nz.front().lead.size();
    bool homogeneous = true;
    long top = 0, gen_top = 1;
    for (const auto& x : nz) {
      homogeneous = homogeneous && x.homogeneous();
      top = std::max(top, x.degree());
    }
    for (const auto& x : b) {
      homogeneous = homogeneous && x.homogeneous();
      gen_top = std::max(gen_top, x.degree());
    }
    GroebnerLimits lim = limits;
    if (homogeneous && lim.max_degree <= 0) lim.max_degree = std::max(top, gen_top);
    BinomialGroebner gb(n, {ord, false, lim});
    for (const auto& x : b)
      if (!x.is_zero()) gb.add_generator(oriented(x.lead, x.trail, ord));
    if (homogeneous)
      gb.complete(top);
    else
      gb.complete();
    return std::all_of(nz.begin(), nz.end(), [&](const Binomial& x) { return gb.reduce(x).is_zero(); });
  };
  return contained(g1, g2) && contained(g2, g1);
}

/// All leading monomials squarefree. For a toric Gröbner basis this
/// certifies normality of the toric ring.
inline bool squarefree_initial(const std::vector<Binomial>& gb) {
  return std::all_of(gb.begin(), gb.end(), [](const Binomial& b) { return squarefree(b.lead); });
}

inline MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, std::size_t nvars) {
  std::vector<Exponents> leads;
  for (const auto& b : gb) leads.push_back(b.lead);
  return MonomialIdeal(nvars, std::move(leads));
}

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (const int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

/// All degree-d monomials x^m (as exponent vectors over the columns) with
/// A·m = target. Degree 3 joins a table of column-pair sums against single
/// columns.
inline std::vector<Exponents> fiber(const ToricSpec& spec, const std::vector<int>& target, int degree, unsigned jobs = 1) {
  const std::size_t n = spec.nvars(), rows = spec.a.rows();
  if (degree < 1) throw Error("fiber: degree must be at least 1");
  if (target.size() != rows) throw Error("fiber: target has wrong length");
  if (degree > 3 && n > 200) throw CapExceeded("fiber: degree > 3 rejected for more than 200 columns");
  const long s = spec.column_sum();
  long tsum = 0;
  for (const int t : target) tsum += t;
  if (tsum != s * degree) return {};

  std::vector<std::vector<int>> col(n, std::vector<int>(rows));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < rows; ++r) col[c][r] = spec.a(r, c);
  auto minus = [&](const std::vector<int>& t, std::size_t c) {
    std::vector<int> out(t);
    for (std::size_t r = 0; r < rows; ++r) out[r] -= col[c][r];
    return out;
  };
  auto nonneg = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }); };

  std::vector<std::vector<std::size_t>> found;  // sorted column multisets
  if (degree <= 3) {
    std::unordered_map<std::vector<int>, std::vector<std::size_t>, detail::VectorHash> singles;
    for (std::size_t c = 0; c < n; ++c) singles[col[c]].push_back(c);
    if (degree == 1) {
      auto it = singles.find(target);
      if (it != singles.end())
        for (const auto c : it->second) found.push_back({c});
    } else if (degree == 2) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto rest = minus(target, i);
        if (!nonneg(rest)) continue;
        auto it = singles.find(rest);
        if (it == singles.end()) continue;
        for (const auto j : it->second)
          if (j >= i) found.push_back({i, j});
      }
    } else {
      std::unordered_map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>, detail::VectorHash> pairs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          std::vector<int> sum(col[i]);
          bool ok = true;
          for (std::size_t r = 0; r < rows; ++r) {
            sum[r] += col[j][r];
            if (sum[r] > target[r]) ok = false;
          }
          if (ok) pairs[std::move(sum)].emplace_back(i, j);
        }
      std::vector<std::vector<std::vector<std::size_t>>> per(n);
      parallel_for(n, jobs, [&](std::size_t k) {
        const auto rest = minus(target, k);
        if (!nonneg(rest)) return;
        auto it = pairs.find(rest);
        if (it == pairs.end()) return;
        for (const auto& [i, j] : it->second)
          if (j <= k) per[k].push_back({i, j, k});
      });
      for (auto& v : per)
        for (auto& m : v) found.push_back(std::move(m));
    }
  } else {
    std::vector<std::size_t> stack;
    std::function<void(const std::vector<int>&, std::size_t, int)> rec = [&](const std::vector<int>& rest, std::size_t from, int left) {
      if (left == 0) {
        if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) found.push_back(stack);
        return;
      }
      for (std::size_t c = from; c < n; ++c) {
        auto r = minus(rest, c);
        if (!nonneg(r)) continue;
        stack.push_back(c);
        rec(r, c, left - 1);
        stack.pop_back();
      }
    };
    rec(target, 0, degree);
  }
  std::vector<Exponents> out;
  for (const auto& m : found) {
    Exponents e(n, 0);
    for (const auto c : m) ++e[c];
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return a > b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// A·m for a monomial m over the columns.
inline std::vector<int> image(const ToricSpec& spec, const Exponents& m) {
  std::vector<int> out(spec.a.rows(), 0);
  for (std::size_t c = 0; c < spec.a.cols(); ++c)
    if (m[c])
      for (std::size_t r = 0; r < spec.a.rows(); ++r) out[r] += spec.a(r, c) * m[c];
  return out;
}

}  // namespace rankalg
