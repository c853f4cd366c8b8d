#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rankalg/core.hpp"

namespace rankalg {

/// Exponent vector of a monomial over an indexed variable set.
using Exponents = std::vector<int>;

inline long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

inline Exponents gcd(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::min(a[k], b[k]);
  return out;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

inline bool squarefree(const Exponents& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x <= 1; });
}

/// Bit k%64 set for every variable k in the support; a cheap divisibility
/// filter (support(a) ⊆ support(b) is necessary for a | b).
inline std::uint64_t support_mask(const Exponents& a) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k]) m |= std::uint64_t{1} << (k % 64);
  return m;
}

/// Term order on exponent vectors. `priority` lists variables from highest
/// to lowest; empty means the natural order 0 > 1 > 2 > ... .
struct TermOrder {
  enum class Kind { Lex, Grevlex, WeightedGrevlex };

  Kind kind = Kind::Grevlex;
  std::vector<int> priority;
  std::vector<long> weights;  // indexed by variable; WeightedGrevlex only

  static TermOrder grevlex(std::vector<int> priority = {}) { return {Kind::Grevlex, std::move(priority), {}}; }
  static TermOrder lex(std::vector<int> priority = {}) { return {Kind::Lex, std::move(priority), {}}; }
  static TermOrder weighted_grevlex(std::vector<long> weights, std::vector<int> priority = {}) {
    return {Kind::WeightedGrevlex, std::move(priority), std::move(weights)};
  }

  /// Grevlex with variable `last` moved to the lowest position.
  static TermOrder grevlex_last(std::size_t nvars, int last) {
    std::vector<int> pr;
    for (int k = 0; k < static_cast<int>(nvars); ++k)
      if (k != last) pr.push_back(k);
    pr.push_back(last);
    return grevlex(std::move(pr));
  }

  int var_at(std::size_t position) const { return priority.empty() ? static_cast<int>(position) : priority[position]; }

  std::string name() const {
    switch (kind) {
      case Kind::Lex: return "lex";
      case Kind::Grevlex: return "grevlex";
      case Kind::WeightedGrevlex: return "weighted-grevlex";
    }
    return "?";
  }

  /// Sign of a - b in this order.
  int compare(const Exponents& a, const Exponents& b) const {
    const std::size_t n = a.size();
    if (kind == Kind::Lex) {
      for (std::size_t p = 0; p < n; ++p) {
        const int v = var_at(p);
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      }
      return 0;
    }
    long da = 0, db = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const long w = kind == Kind::WeightedGrevlex ? weights.at(v) : 1;
      da += w * a[v];
      db += w * b[v];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t p = n; p-- > 0;) {
      const int v = var_at(p);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }
};

/// Renders x^e as "name·name^2" using the given variable names.
inline std::string monomial_string(const Exponents& e, const std::vector<std::string>& names, bool sort_names = true) {
  std::vector<std::pair<std::string, int>> factors;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k]) factors.emplace_back(k < names.size() ? names[k] : "x" + std::to_string(k), e[k]);
  if (sort_names)
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return natural_less(x.first, y.first); });
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += "·";
    out += factors[k].first;
    if (factors[k].second > 1) out += "^" + std::to_string(factors[k].second);
  }
  return out;
}

}  // namespace rankalg
