#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankalg/core.hpp"
#include "rankalg/linalg.hpp"
#include "rankalg/poset.hpp"
#include "rankalg/toric.hpp"

namespace rankalg {

enum class ModelKind { Ascending, Csiszar, Birkhoff, Inversion, AltInversion };

inline std::string model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Ascending: return "ascending";
    case ModelKind::Csiszar: return "csiszar";
    case ModelKind::Birkhoff: return "birkhoff";
    case ModelKind::Inversion: return "inversion";
    case ModelKind::AltInversion: return "alt_inversion";
  }
  return "?";
}

inline ModelKind parse_model_kind(const std::string& s) {
  if (s == "ascending") return ModelKind::Ascending;
  if (s == "csiszar") return ModelKind::Csiszar;
  if (s == "birkhoff") return ModelKind::Birkhoff;
  if (s == "inversion") return ModelKind::Inversion;
  if (s == "alt_inversion" || s == "alt-inversion") return ModelKind::AltInversion;
  throw FormatError("unknown model kind '" + s + "'");
}

/// Model matrix of a toric ranking model together with its source poset.
struct ModelMatrix {
  ModelKind kind;
  GradedPoset q;
  std::vector<MaximalChain> chains;
  std::vector<std::vector<int>> words;  // empty unless q is an order-ideal lattice
  ToricSpec spec;
  long S = 0;
  std::vector<std::string> notes;

  std::size_t columns() const { return chains.size(); }
  int column_index(const std::string& label) const {
    auto it = std::find(spec.column_labels.begin(), spec.column_labels.end(), label);
    if (it == spec.column_labels.end()) throw Error("unknown chain label '" + label + "'");
    return static_cast<int>(it - spec.column_labels.begin());
  }
  int row_index(const std::string& label) const {
    auto it = std::find(spec.row_labels.begin(), spec.row_labels.end(), label);
    if (it == spec.row_labels.end()) throw Error("unknown parameter '" + label + "'");
    return static_cast<int>(it - spec.row_labels.begin());
  }
};

namespace detail {

inline std::string pair_index(int i, int j, int n) { return n >= 10 ? std::to_string(i) + "," + std::to_string(j) : std::to_string(i) + std::to_string(j); }

inline bool words_available(const GradedPoset& q) {
  return q.is_ideal_lattice() && q.poset().minimal_elements().size() == 1 && q.items(q.poset().minimal_elements().front()).empty() &&
         q.rk() == q.ground_size();
}

}  // namespace detail

/// Builds the 0/1 matrix of the monomial map of `kind` over the maximal
/// chains of q (columns in lexicographic chain order).
inline ModelMatrix model_matrix(ModelKind kind, const GradedPoset& q) {
  ModelMatrix m{kind, q, maximal_chains(q), {}, {}, 0, {}};
  const bool lattice = detail::words_available(q);
  if (lattice)
    for (const auto& c : m.chains) m.words.push_back(chain_word(q, c));
  if ((kind == ModelKind::Birkhoff || kind == ModelKind::Inversion || kind == ModelKind::AltInversion) && !lattice)
    throw Error(model_kind_name(kind) + " model needs the order-ideal lattice of a constraint poset");
  const Poset& p = q.poset();
  const std::size_t cols = m.chains.size();
  for (const auto& c : m.chains) m.spec.column_labels.push_back(chain_label(q, c));

  std::vector<std::vector<int>> rows;
  auto add_row = [&](std::string label) {
    m.spec.row_labels.push_back(std::move(label));
    rows.emplace_back(cols, 0);
    return rows.size() - 1;
  };

  switch (kind) {
    case ModelKind::Ascending: {
      for (int a = 0; a < static_cast<int>(p.size()); ++a) add_row("c_{" + p.label(a) + "}");
      for (std::size_t c = 0; c < cols; ++c)
        for (const int a : m.chains[c].path) rows[static_cast<std::size_t>(a)][c] = 1;
      m.S = q.rk() + 1;
      if (lattice) m.notes.push_back("row c_{∅} is included; it is identically one on every column");
      break;
    }
    case ModelKind::Csiszar: {
      auto covers = p.covers();
      std::sort(covers.begin(), covers.end());
      std::map<std::pair<int, int>, std::size_t> row_of;
      for (const auto& [a, b] : covers) row_of[{a, b}] = add_row("d_{" + p.label(a) + "<" + p.label(b) + "}");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& path = m.chains[c].path;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) rows[row_of.at({path[k], path[k + 1]})][c] = 1;
      }
      m.S = q.rk();
      break;
    }
    case ModelKind::Birkhoff: {
      const int n = q.ground_size();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add_row("a_{" + detail::pair_index(i, j, n) + "}");
      for (std::size_t c = 0; c < cols; ++c)
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i * n + m.words[c][static_cast<std::size_t>(i)] - 1)][c] = 1;
      m.S = n;
      break;
    }
    case ModelKind::Inversion:
    case ModelKind::AltInversion: {
      const int n = q.ground_size();
      std::map<std::pair<int, int>, std::size_t> u_row, v_row;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) u_row[{i, j}] = add_row("u_{" + detail::pair_index(i, j, n) + "}");
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v_row[{i, j}] = add_row("v_{" + detail::pair_index(i, j, n) + "}");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& w = m.words[c];
        std::vector<int> pos(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(k)])] = k;
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            bool inverted;
            if (kind == ModelKind::Inversion)
              inverted = pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)];
            else
              inverted = w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(j - 1)];
            rows[(inverted ? v_row : u_row).at({i, j})][c] = 1;
          }
      }
      m.S = static_cast<long>(n) * (n - 1) / 2;
      break;
    }
  }
  m.spec.a = Matrix<int>::from_rows(rows);
  if (rows.empty()) m.spec.a = Matrix<int>(0, cols);
  m.spec.validate();
  if (cols && m.spec.column_sum() != m.S) throw Error("internal: column sum differs from declared S");
  return m;
}

/// Convenience overload: the lattice of order ideals of a constraint poset.
inline ModelMatrix model_matrix(ModelKind kind, const Poset& constraint) { return model_matrix(kind, order_ideal_lattice(constraint)); }

struct SufficientStats {
  std::vector<std::string> labels;
  std::vector<Integer> values;
  Integer N = 0;
};

inline SufficientStats sufficient_stats(const ModelMatrix& m, const std::map<std::string, Integer>& counts) {
  SufficientStats out{m.spec.row_labels, std::vector<Integer>(m.spec.a.rows(), 0), 0};
  for (const auto& [label, u] : counts) {
    if (u < 0) throw Error("negative count for '" + label + "'");
    const auto c = static_cast<std::size_t>(m.column_index(label));
    out.N += u;
    for (std::size_t r = 0; r < m.spec.a.rows(); ++r)
      if (m.spec.a(r, c)) out.values[r] += u * m.spec.a(r, c);
  }
  return out;
}

/// A·x for a rational column vector.
inline std::vector<Rational> apply(const ModelMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> out(m.spec.a.rows(), 0);
  for (std::size_t r = 0; r < m.spec.a.rows(); ++r)
    for (std::size_t c = 0; c < m.spec.a.cols(); ++c)
      if (m.spec.a(r, c)) out[r] += x.at(c) * m.spec.a(r, c);
  return out;
}

inline long polytope_dimension(const ModelMatrix& m) { return static_cast<long>(rational_rank(m.spec.a)) - 1; }

struct BirkhoffDimension {
  std::set<std::pair<int, int>> Z, C;
  long dim = 0;
  long rank_dim = 0;
};

/// n^2 - |Z| - |C| where C holds the leading variables of the row and
/// column sum relations once the Z variables are zero, reduced to echelon
/// form with variables ordered by descending index tuple. Checked against
/// the rank.
inline BirkhoffDimension birkhoff_dimension(const Poset& constraint) {
  const ModelMatrix m = model_matrix(ModelKind::Birkhoff, constraint);
  const int n = m.q.ground_size();
  BirkhoffDimension out;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (const auto& w : m.words)
    for (int i = 1; i <= n; ++i) seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(w[static_cast<std::size_t>(i - 1)])] = true;
  std::vector<std::pair<int, int>> vars;  // descending (i, j)
  for (int i = n; i >= 1; --i)
    for (int j = n; j >= 1; --j) {
      if (!seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        out.Z.insert({i, j});
      else
        vars.emplace_back(i, j);
    }
  // 2n relations over the surviving variables; constants do not affect pivots.
  std::vector<std::vector<Rational>> rel;
  for (int k = 1; k <= n; ++k) {
    std::vector<Rational> row(vars.size(), 0), col(vars.size(), 0);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].first == k) row[v] = 1;
      if (vars[v].second == k) col[v] = 1;
    }
    rel.push_back(std::move(row));
    rel.push_back(std::move(col));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < vars.size() && r < rel.size(); ++c) {
    std::size_t p = r;
    while (p < rel.size() && rel[p][c] == 0) ++p;
    if (p == rel.size()) continue;
    std::swap(rel[p], rel[r]);
    for (std::size_t o = 0; o < rel.size(); ++o) {
      if (o == r || rel[o][c] == 0) continue;
      const Rational f = rel[o][c] / rel[r][c];
      for (std::size_t k = c; k < vars.size(); ++k) rel[o][k] -= f * rel[r][k];
    }
    out.C.insert(vars[c]);
    ++r;
  }
  out.dim = static_cast<long>(n) * n - static_cast<long>(out.Z.size()) - static_cast<long>(out.C.size());
  out.rank_dim = polytope_dimension(m);
  if (out.dim != out.rank_dim)
    throw Error("formula mismatch: n^2-|Z|-|C| = " + std::to_string(out.dim) + " but rank gives " + std::to_string(out.rank_dim));
  return out;
}

/// rowspace(inner) ⊆ rowspace(outer) after aligning columns by label.
inline bool model_inclusion(const ModelMatrix& inner, const ModelMatrix& outer) {
  auto a = inner.spec.column_labels, b = outer.spec.column_labels;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error("model_inclusion: column label sets differ");
  Matrix<int> permuted(outer.spec.a.rows(), outer.spec.a.cols());
  for (std::size_t c = 0; c < inner.spec.column_labels.size(); ++c) {
    const auto oc = static_cast<std::size_t>(outer.column_index(inner.spec.column_labels[c]));
    for (std::size_t r = 0; r < outer.spec.a.rows(); ++r) permuted(r, c) = outer.spec.a(r, oc);
  }
  return rowspace_contains(inner.spec.a, permuted);
}

using Distribution = std::vector<std::pair<std::string, Rational>>;

/// Evaluates every column monomial at the parameters and normalizes.
/// Parameters not listed default to 1.
inline Distribution evaluate_distribution(const ModelMatrix& m, const std::map<std::string, Rational>& params) {
  std::vector<Rational> value(m.spec.a.rows(), 1);
  for (const auto& [label, v] : params) {
    if (v < 0) throw Error("parameter '" + label + "' is negative");
    value[static_cast<std::size_t>(m.row_index(label))] = v;
  }
  Distribution out;
  Rational total = 0;
  for (std::size_t c = 0; c < m.spec.a.cols(); ++c) {
    Rational x = 1;
    for (std::size_t r = 0; r < m.spec.a.rows(); ++r)
      for (int e = 0; e < m.spec.a(r, c); ++e) x *= value[r];
    total += x;
    out.emplace_back(m.spec.column_labels[c], x);
  }
  if (total == 0) throw Error("all-zero distribution");
  for (auto& [l, x] : out) x /= total;
  return out;
}

inline Rational distribution_value(const Distribution& d, const std::string& label) {
  for (const auto& [l, x] : d)
    if (l == label) return x;
  throw Error("label '" + label + "' not in distribution");
}

/// Number of pairs i<j with j placed before i.
inline int inversion_count(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++c;
  return c;
}

/// P(π) = q^{inv(π)} / Z over S_n in lexicographic order.
inline Distribution mallows_specialize(int n, const Rational& qval) {
  if (qval <= 0) throw Error("mallows: q must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
  Distribution out;
  Rational z = 0;
  do {
    Rational x = 1;
    for (int k = inversion_count(w); k > 0; --k) x *= qval;
    z += x;
    out.emplace_back(word_label(w, n), x);
  } while (std::next_permutation(w.begin(), w.end()));
  for (auto& [l, x] : out) x /= z;
  return out;
}

/// Closed-form MLE of the Csiszár model on q.
inline Distribution csiszar_mle(const GradedPoset& q, const std::map<std::string, Integer>& counts) {
  const ModelMatrix m = model_matrix(ModelKind::Csiszar, q);
  const SufficientStats b = sufficient_stats(m, counts);
  if (b.N == 0) throw Error("csiszar_mle: sample size is zero");
  const Poset& p = q.poset();
  std::map<std::pair<int, int>, Integer> cover_count;
  std::vector<Integer> through(p.size(), 0);
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end());
  for (std::size_t r = 0; r < covers.size(); ++r) {
    cover_count[covers[r]] = b.values[r];
    through[static_cast<std::size_t>(covers[r].first)] += b.values[r];
  }
  Distribution out;
  for (std::size_t c = 0; c < m.chains.size(); ++c) {
    const auto& path = m.chains[c].path;
    Rational x(through[static_cast<std::size_t>(path.front())], b.N);
    x.canonicalize();
    for (std::size_t k = 0; k + 1 < path.size() && x != 0; ++k) {
      const Integer& r = through[static_cast<std::size_t>(path[k])];
      const Integer& e = cover_count.at({path[k], path[k + 1]});
      if (e == 0) {
        x = 0;
        break;
      }
      Rational step(e, r);
      step.canonicalize();
      x *= step;
    }
    if (path.size() == 1) {
      // Rank-0 poset: chains are single elements.
      x = 0;
      auto it = counts.find(m.spec.column_labels[c]);
      if (it != counts.end()) x = Rational(it->second, b.N);
    }
    x.canonicalize();
    out.emplace_back(m.spec.column_labels[c], x);
  }
  return out;
}

/// Parameters of the inversion-model witness for n = 4 that lies outside
/// the ascending model, written for this library's convention (u on pairs
/// kept in order, v on inverted pairs).
inline std::map<std::string, Rational> inversion_witness_parameters() {
  return {{"v_{12}", 0}, {"v_{13}", 0}, {"v_{14}", 0}, {"u_{23}", 1}, {"u_{24}", 1}, {"v_{34}", 1},
          {"u_{12}", 1}, {"u_{13}", 1}, {"v_{23}", 1}, {"v_{24}", 1}, {"u_{34}", 2}, {"u_{14}", Rational(1, 9)}};
}

}  // namespace rankalg
