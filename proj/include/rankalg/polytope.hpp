#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankalg/core.hpp"
#include "rankalg/linalg.hpp"
#include "rankalg/models.hpp"
#include "rankalg/poset.hpp"

namespace rankalg {

/// sum coeffs[k] x_k (= or >=) rhs.
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;
  std::string name;
};

struct HDescription {
  ModelKind kind = ModelKind::Csiszar;
  std::vector<std::string> coordinates;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;  // sense >=
  std::size_t raw_subset_rows = 0;      // ascending: subset rows before pruning
};

/// Linear description of the Csiszár or ascending model polytope of q.
inline HDescription h_description(ModelKind kind, const GradedPoset& q) {
  if (q.rk() < 1) throw Error("h_description needs a poset of rank at least 1");
  const Poset& p = q.poset();
  HDescription h;
  h.kind = kind;
  if (kind == ModelKind::Csiszar) {
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());
    const std::size_t d = covers.size();
    std::map<std::pair<int, int>, std::size_t> idx;
    for (std::size_t k = 0; k < d; ++k) {
      idx[covers[k]] = k;
      h.coordinates.push_back("x_{" + p.label(covers[k].first) + "<" + p.label(covers[k].second) + "}");
    }
    for (std::size_t k = 0; k < d; ++k) {
      LinearRow r{std::vector<Rational>(d, 0), 0, h.coordinates[k] + " >= 0"};
      r.coeffs[k] = 1;
      h.inequalities.push_back(std::move(r));
    }
    LinearRow mincov{std::vector<Rational>(d, 0), 1, "MinCov sum = 1"};
    for (const auto& [ab, k] : idx)
      if (q.rank(ab.first) == 0) mincov.coeffs[k] = 1;
    h.equalities.push_back(std::move(mincov));
    for (int a = 0; a < static_cast<int>(p.size()); ++a) {
      if (q.rank(a) == 0 || q.rank(a) == q.rk()) continue;
      LinearRow r{std::vector<Rational>(d, 0), 0, "flow at " + p.label(a)};
      for (const int b : p.up(a)) r.coeffs[idx.at({a, b})] += 1;
      for (const int b : p.down(a)) r.coeffs[idx.at({b, a})] -= 1;
      h.equalities.push_back(std::move(r));
    }
    return h;
  }
  if (kind != ModelKind::Ascending) throw Error("h_description is defined for csiszar and ascending only");
  for (const auto& level : q.levels())
    if (level.size() > 20) throw CapExceeded("h_description: a level has more than 20 elements (2^20 subset inequalities)");
  const std::size_t d = p.size();
  for (std::size_t a = 0; a < d; ++a) h.coordinates.push_back("x_{" + p.label(static_cast<int>(a)) + "}");
  for (int i = 0; i <= q.rk(); ++i) {
    LinearRow r{std::vector<Rational>(d, 0), 1, "rank " + std::to_string(i) + " sum = 1"};
    for (const int a : q.level(i)) r.coeffs[static_cast<std::size_t>(a)] = 1;
    h.equalities.push_back(std::move(r));
  }
  for (std::size_t a = 0; a < d; ++a) {
    LinearRow r{std::vector<Rational>(d, 0), 0, h.coordinates[a] + " >= 0"};
    r.coeffs[a] = 1;
    h.inequalities.push_back(std::move(r));
  }
  std::set<std::vector<Rational>> seen;
  for (int i = 0; i < q.rk(); ++i) {
    const auto& level = q.level(i);
    const std::size_t m = level.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      ++h.raw_subset_rows;
      std::vector<int> subset;
      for (std::size_t k = 0; k < m; ++k)
        if (mask >> k & 1U) subset.push_back(level[k]);
      LinearRow r{std::vector<Rational>(d, 0), 0, ""};
      for (const int a : subset) r.coeffs[static_cast<std::size_t>(a)] -= 1;
      for (const int b : shadows(q, subset).first) r.coeffs[static_cast<std::size_t>(b)] += 1;
      // Pruned: the empty subset (0 >= 0) and repeats.
      if (std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& c) { return c == 0; })) continue;
      if (!seen.insert(r.coeffs).second) continue;
      std::vector<std::string> names;
      for (const int a : subset) names.push_back(p.label(a));
      r.name = "nabla{" + join(names, ",") + "}";
      h.inequalities.push_back(std::move(r));
    }
  }
  return h;
}

namespace detail {

inline Rational row_value(const LinearRow& r, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (r.coeffs[k] != 0 && x[k] != 0) s += r.coeffs[k] * x[k];
  return s;
}

inline bool satisfies(const HDescription& h, const std::vector<Rational>& x) {
  for (const auto& r : h.equalities)
    if (row_value(r, x) != r.rhs) return false;
  for (const auto& r : h.inequalities)
    if (row_value(r, x) < r.rhs) return false;
  return true;
}

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline void make_primitive(std::vector<Rational>& v) {
  Integer den = 1, num = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num != 0 && num != 1)
    for (auto& x : v) x /= num;
}

}  // namespace detail

/// Vertices of the polytope {x : E x = e, G x >= g} by the double
/// description method: the equalities are solved to x = x0 + N y, and the
/// cone {(y,t) : G(x0 t + N y) - g t >= 0, t >= 0} is built row by row with
/// the combinatorial adjacency test. Throws if the polytope is unbounded.
inline std::vector<std::vector<Rational>> enumerate_vertices(const HDescription& h) {
  const std::size_t n = h.coordinates.size();
  // Equalities [E | e] in RREF.
  std::vector<std::vector<Rational>> aug;
  for (const auto& r : h.equalities) {
    auto row = r.coeffs;
    row.push_back(r.rhs);
    aug.push_back(std::move(row));
  }
  const auto pivots = detail::rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return {};  // inconsistent
  std::vector<bool> is_pivot(n, false);
  for (const auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t d = free_cols.size();
  // x0 and null basis N (columns indexed by free variables).
  std::vector<Rational> x0(n, 0);
  std::vector<std::vector<Rational>> N(n, std::vector<Rational>(d, 0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t pc = pivots[r];
    x0[pc] = aug[r][n];
    for (std::size_t f = 0; f < d; ++f) N[pc][f] = -aug[r][free_cols[f]];
  }
  for (std::size_t f = 0; f < d; ++f) N[free_cols[f]][f] = 1;

  // Cone rows over z = (y, t).
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : h.inequalities) {
    std::vector<Rational> row(d + 1, 0);
    for (std::size_t f = 0; f < d; ++f)
      for (std::size_t k = 0; k < n; ++k)
        if (r.coeffs[k] != 0 && N[k][f] != 0) row[f] += r.coeffs[k] * N[k][f];
    row[d] = detail::row_value(r, x0) - r.rhs;
    rows.push_back(std::move(row));
  }
  {
    std::vector<Rational> trow(d + 1, 0);
    trow[d] = 1;
    rows.push_back(std::move(trow));
  }
  const std::size_t m = rows.size(), dim = d + 1;
  auto dot = [&](const std::vector<Rational>& row, const std::vector<Rational>& z) {
    Rational s = 0;
    for (std::size_t k = 0; k < dim; ++k)
      if (row[k] != 0 && z[k] != 0) s += row[k] * z[k];
    return s;
  };

  // Initial basis: dim independent rows, chosen greedily.
  std::vector<std::size_t> basis_rows;
  {
    std::vector<std::vector<Rational>> acc;
    for (std::size_t i = 0; i < m && basis_rows.size() < dim; ++i) {
      auto trial = acc;
      trial.push_back(rows[i]);
      if (detail::rref(trial, dim).size() > acc.size()) {
        acc.push_back(rows[i]);
        basis_rows.push_back(i);
      }
    }
  }
  if (basis_rows.size() < dim) throw Error("enumerate_vertices: polytope is unbounded or has a lineality space");
  // Rays: columns of B^{-1}, i.e. z with B z = e_k.
  struct Ray {
    std::vector<Rational> z;
    std::set<std::size_t> tight;
  };
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<std::vector<Rational>> sys;
    for (std::size_t i = 0; i < dim; ++i) {
      auto row = rows[basis_rows[i]];
      row.push_back(i == k ? 1 : 0);
      sys.push_back(std::move(row));
    }
    detail::rref(sys, dim + 1);
    std::vector<Rational> z(dim);
    for (std::size_t i = 0; i < dim; ++i) z[i] = sys[i][dim];
    detail::make_primitive(z);
    rays.push_back({std::move(z), {}});
  }
  std::vector<std::size_t> processed(basis_rows.begin(), basis_rows.end());
  for (auto& r : rays)
    for (const auto i : processed)
      if (dot(rows[i], r.z) == 0) r.tight.insert(i);

  std::vector<bool> in_basis(m, false);
  for (const auto i : basis_rows) in_basis[i] = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (in_basis[i]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rows[i], rays[k].z);
      (val[k] > 0 ? pos : val[k] < 0 ? neg : zero).push_back(k);
    }
    std::vector<Ray> next;
    for (const auto k : pos) next.push_back(rays[k]);
    for (const auto k : zero) {
      Ray r = rays[k];
      r.tight.insert(i);
      next.push_back(std::move(r));
    }
    for (const auto a : pos)
      for (const auto b : neg) {
        std::set<std::size_t> common;
        std::set_intersection(rays[a].tight.begin(), rays[a].tight.end(), rays[b].tight.begin(), rays[b].tight.end(),
                              std::inserter(common, common.end()));
        if (common.size() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == a || k == b) continue;
          if (std::includes(rays[k].tight.begin(), rays[k].tight.end(), common.begin(), common.end())) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<Rational> z(dim);
        for (std::size_t t = 0; t < dim; ++t) z[t] = val[a] * rays[b].z[t] - val[b] * rays[a].z[t];
        detail::make_primitive(z);
        common.insert(i);
        next.push_back({std::move(z), std::move(common)});
      }
    rays = std::move(next);
    processed.push_back(i);
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rays) {
    if (r.z[d] == 0) throw Error("enumerate_vertices: polytope is unbounded");
    std::vector<Rational> x = x0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t f = 0; f < d; ++f)
        if (N[k][f] != 0) x[k] += N[k][f] * r.z[f] / r.z[d];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct HVerification {
  bool columns_satisfy = false;
  std::optional<bool> zero_one_exact;  // check 2; empty when skipped
  std::size_t zero_one_solutions = 0;
  long equality_dimension = 0;
  long polytope_dimension = 0;
  bool dimension_match = false;
  std::optional<bool> vertices_exact;  // check 4; empty when skipped
  std::size_t vertex_count = 0;
  bool partial = false;

  bool ok() const {
    return columns_satisfy && dimension_match && zero_one_exact.value_or(true) && vertices_exact.value_or(true);
  }
};

inline constexpr std::size_t kZeroOneCoordinateCap = 25;
inline constexpr std::size_t kVertexCoordinateCap = 12;

/// Checks an H-description against the model's columns: (1) columns
/// satisfy it, (2) its 0/1 points are exactly the columns, (3) equality
/// dimension equals the polytope dimension, (4) its vertices are exactly
/// the columns. (2) and (4) are skipped above their coordinate caps.
inline HVerification verify_h_description(const ModelMatrix& m, const HDescription& h) {
  const std::size_t n = h.coordinates.size();
  if (n != m.spec.a.rows()) throw Error("verify_h_description: coordinate count does not match the model rows");
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& c = h.coordinates[k];
    const std::string& r = m.spec.row_labels[k];
    if (c.substr(1) != r.substr(1)) throw Error("verify_h_description: coordinate " + c + " does not match row " + r);
  }
  HVerification out;
  std::set<std::vector<Rational>> columns;
  for (std::size_t c = 0; c < m.spec.a.cols(); ++c) {
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = m.spec.a(r, c);
    columns.insert(std::move(x));
  }
  out.columns_satisfy = std::all_of(columns.begin(), columns.end(), [&](const auto& x) { return detail::satisfies(h, x); });

  if (n <= kZeroOneCoordinateCap) {
    // Backtracking over coordinates; each row is tested once its last
    // coordinate is fixed.
    std::vector<std::vector<const LinearRow*>> due(n);
    std::vector<bool> is_eq;
    auto last_index = [&](const LinearRow& r) {
      std::size_t last = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (r.coeffs[k] != 0) last = k;
      return last;
    };
    for (const auto& r : h.equalities) due[last_index(r)].push_back(&r);
    for (const auto& r : h.inequalities) due[last_index(r)].push_back(&r);
    std::set<const LinearRow*> eq_rows;
    for (const auto& r : h.equalities) eq_rows.insert(&r);
    std::vector<Rational> x(n, 0);
    std::set<std::vector<Rational>> found;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == n) {
        found.insert(x);
        return;
      }
      for (int v = 0; v <= 1; ++v) {
        x[k] = v;
        bool ok = true;
        for (const LinearRow* r : due[k]) {
          const Rational val = detail::row_value(*r, x);
          if (eq_rows.count(r) ? val != r->rhs : val < r->rhs) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, k + 1);
      }
      x[k] = 0;
    };
    rec(rec, 0);
    out.zero_one_solutions = found.size();
    out.zero_one_exact = found == columns;
  } else {
    out.partial = true;
  }

  std::vector<std::vector<Rational>> eq;
  for (const auto& r : h.equalities) eq.push_back(r.coeffs);
  const long eq_rank = static_cast<long>(detail::rref(eq, n).size());
  out.equality_dimension = static_cast<long>(n) - eq_rank;
  out.polytope_dimension = polytope_dimension(m);
  out.dimension_match = out.equality_dimension == out.polytope_dimension;

  if (n <= kVertexCoordinateCap) {
    const auto verts = enumerate_vertices(h);
    out.vertex_count = verts.size();
    out.vertices_exact = std::set<std::vector<Rational>>(verts.begin(), verts.end()) == columns;
  } else {
    out.partial = true;
  }
  return out;
}

}  // namespace rankalg
