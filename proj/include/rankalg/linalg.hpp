#pragma once

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rankalg/core.hpp"

namespace rankalg {

/// Dense row-major matrix with fixed shape.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  template <class U>
  static Matrix from_rows(const std::vector<std::vector<U>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = T(rows[i][j]);
    }
    return m;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  /// Rows of *this followed by rows of `other`.
  Matrix stacked(const Matrix& other) const {
    if (other.cols_ != cols_ && rows_ != 0 && other.rows_ != 0) throw Error("column-count mismatch");
    Matrix out(rows_ + other.rows_, rows_ ? cols_ : other.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Integer basis of ker(A) ∩ Z^cols.
struct LatticeBasis {
  std::vector<std::vector<Integer>> vectors;
  std::size_t dimension() const { return vectors.size(); }
};

namespace detail {

/// Rows scaled by the lcm of their denominators.
inline IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

}  // namespace detail

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t rational_rank(IntegerMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t k = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t p = k;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(k, j));
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(i, j) * m(k, c) - m(i, c) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(k, c);
    ++k;
  }
  return k;
}

inline std::size_t rational_rank(const RationalMatrix& m) { return rational_rank(detail::clear_denominators(m)); }

template <class U>
  requires std::is_integral_v<U>
inline std::size_t rational_rank(const Matrix<U>& m) {
  return rational_rank(m.template cast<Integer>());
}

/// Integer kernel basis via column-style Hermite reduction of [A; I]:
/// unimodular column operations with minimal-absolute-value pivots bring A
/// to column echelon form; the identity block then holds a kernel basis in
/// the columns whose A-part vanished. A final pairwise size reduction keeps
/// entries small.
inline LatticeBasis kernel_lattice_basis(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // cols[c] = (A column c ; e_c)
  std::vector<std::vector<Integer>> cols(n, std::vector<Integer>(m + n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) cols[c][r] = a(r, c);
    cols[c][m + c] = 1;
  }
  std::size_t piv = 0;
  for (std::size_t r = 0; r < m && piv < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = piv; c < n; ++c) {
        if (cols[c][r] == 0) continue;
        if (best == n || abs(cols[c][r]) < abs(cols[best][r])) best = c;
      }
      if (best == n) break;
      std::swap(cols[piv], cols[best]);
      bool others = false;
      for (std::size_t c = piv + 1; c < n; ++c) {
        if (cols[c][r] == 0) continue;
        // q = nearest integer to cols[c][r] / cols[piv][r]
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), Integer(2 * cols[c][r] + cols[piv][r]).get_mpz_t(), Integer(2 * cols[piv][r]).get_mpz_t());
        if (q != 0)
          for (std::size_t k = r; k < m + n; ++k) cols[c][k] -= q * cols[piv][k];
        if (cols[c][r] != 0) others = true;
      }
      if (!others) {
        ++piv;
        break;
      }
    }
  }
  LatticeBasis basis;
  for (std::size_t c = piv; c < n; ++c) basis.vectors.emplace_back(cols[c].begin() + static_cast<std::ptrdiff_t>(m), cols[c].end());

  auto dot = [](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  };
  bool changed = true;
  auto& v = basis.vectors;
  for (int round = 0; changed && round < 1000; ++round) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (i == j) continue;
        const Integer vj = dot(v[j], v[j]);
        const Integer ij = dot(v[i], v[j]);
        Integer mu;
        mpz_fdiv_q(mu.get_mpz_t(), Integer(2 * ij + vj).get_mpz_t(), Integer(2 * vj).get_mpz_t());
        if (mu == 0) continue;
        // ||v_i - mu v_j||^2 - ||v_i||^2 = mu^2 vj - 2 mu ij
        if (mu * mu * vj - 2 * mu * ij >= 0) continue;
        for (std::size_t k = 0; k < v[i].size(); ++k) v[i][k] -= mu * v[j][k];
        changed = true;
      }
  }
  // Deterministic sign: first nonzero entry positive.
  for (auto& vec : v) {
    auto it = std::find_if(vec.begin(), vec.end(), [](const Integer& x) { return x != 0; });
    if (it != vec.end() && *it < 0)
      for (auto& x : vec) x = -x;
  }
  return basis;
}

template <class U>
  requires std::is_integral_v<U>
inline LatticeBasis kernel_lattice_basis(const Matrix<U>& a) {
  return kernel_lattice_basis(a.template cast<Integer>());
}

/// rowspace(a) ⊆ rowspace(b) over Q.
inline bool rowspace_contains(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw Error("rowspace_contains: column-count mismatch (" + std::to_string(a.cols()) + " vs " + std::to_string(b.cols()) + ")");
  return rational_rank(b) == rational_rank(b.stacked(a));
}

template <class U>
  requires std::is_integral_v<U>
inline bool rowspace_contains(const Matrix<U>& a, const Matrix<U>& b) {
  return rowspace_contains(a.template cast<Rational>(), b.template cast<Rational>());
}

// ---------------------------------------------------------------------------
// Serialization

template <class T>
std::string entry_string(const T& x) {
  if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
    return x.get_str();
  else
    return std::to_string(x);
}

/// CSV with a header row of column labels; the first column holds row labels.
template <class T>
void write_csv(std::ostream& out, const Matrix<T>& m, const std::vector<std::string>& row_labels,
               const std::vector<std::string>& col_labels) {
  out << "row";
  for (const auto& c : col_labels) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i < row_labels.size() ? row_labels[i] : std::to_string(i));
    for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << entry_string(m(i, j));
    out << '\n';
  }
}

template <class T>
nlohmann::json to_json(const Matrix<T>& m, const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_integral_v<T>)
        r.push_back(m(i, j));
      else
        r.push_back(entry_string(m(i, j)));
    }
    rows.push_back(std::move(r));
  }
  return {{"row_labels", row_labels}, {"column_labels", col_labels}, {"entries", rows}};
}

}  // namespace rankalg
