#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rankalg/core.hpp"

namespace rankalg {

/// Finite partial order on opaque string labels. Elements are indexed
/// 0..size()-1 in natural label order; the relation is stored reflexively
/// and transitively closed, covers are its transitive reduction.
class Poset {
 public:
  Poset() = default;

  /// Builds the transitive closure of `relations` (pairs a<b by label).
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& relations) {
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    for (std::size_t k = 1; k < labels.size(); ++k)
      if (labels[k] == labels[k - 1]) throw FormatError("duplicate element label '" + labels[k] + "'");
    Poset p;
    p.labels_ = std::move(labels);
    const std::size_t n = p.labels_.size();
    p.leq_.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t k = 0; k < n; ++k) p.leq_[k][k] = 1;
    for (const auto& [a, b] : relations) {
      const int ia = p.index_of(a), ib = p.index_of(b);
      if (ia == ib) throw FormatError("not a partial order: reflexive relation on '" + a + "'");
      p.leq_[ia][ib] = 1;
    }
    // Warshall closure.
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t i = 0; i < n; ++i)
        if (p.leq_[i][m])
          for (std::size_t j = 0; j < n; ++j)
            if (p.leq_[m][j]) p.leq_[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p.leq_[i][j] && p.leq_[j][i]) throw FormatError("not a partial order: cycle through '" + p.labels_[i] + "' and '" + p.labels_[j] + "'");
    p.compute_covers();
    return p;
  }

  /// Trusted constructor: labels already in natural order, `leq` closed,
  /// `covers` its reduction. Used by lattice builders.
  static Poset from_closed(std::vector<std::string> labels, std::vector<std::vector<std::uint8_t>> leq,
                           std::vector<std::pair<int, int>> covers) {
    Poset p;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(leq);
    p.set_covers(std::move(covers));
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                               [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    if (it == labels_.end() || *it != label) throw FormatError("unknown element '" + label + "'");
    return static_cast<int>(it - labels_.begin());
  }

  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  bool less(int a, int b) const { return a != b && leq_[a][b] != 0; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Cover pairs (a,b), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  /// Elements covering a (sorted).
  const std::vector<int>& up(int a) const { return up_[a]; }
  /// Elements covered by a (sorted).
  const std::vector<int>& down(int a) const { return down_[a]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(size()); ++k)
      if (down_[k].empty()) out.push_back(k);
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(size()); ++k)
      if (up_[k].empty()) out.push_back(k);
    return out;
  }

  /// Induced subposet on `elements` (any order); returns the subposet and
  /// the map from sub-indices to indices of *this.
  std::pair<Poset, std::vector<int>> induced(std::vector<int> elements) const {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const std::size_t m = elements.size();
    std::vector<std::string> labels;
    for (int e : elements) labels.push_back(labels_[e]);
    std::vector<std::vector<std::uint8_t>> leq(m, std::vector<std::uint8_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) leq[i][j] = leq_[elements[i]][elements[j]];
    Poset p;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(leq);
    p.compute_covers();
    return {std::move(p), std::move(elements)};
  }

  /// Pairs a<b of the full relation (strict), sorted.
  std::vector<std::pair<int, int>> strict_relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(size()); ++i)
      for (int j = 0; j < static_cast<int>(size()); ++j)
        if (less(i, j)) out.emplace_back(i, j);
    return out;
  }

 private:
  void compute_covers() {
    const int n = static_cast<int>(size());
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!less(a, b)) continue;
        bool between = false;
        for (int c = 0; c < n && !between; ++c) between = less(a, c) && less(c, b);
        if (!between) covers.emplace_back(a, b);
      }
    set_covers(std::move(covers));
  }

  void set_covers(std::vector<std::pair<int, int>> covers) {
    std::sort(covers.begin(), covers.end());
    covers_ = std::move(covers);
    up_.assign(size(), {});
    down_.assign(size(), {});
    for (auto [a, b] : covers_) {
      up_[a].push_back(b);
      down_[b].push_back(a);
    }
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint8_t>> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
};

/// A maximal chain a_0 < a_1 < ... < a_n, each step a cover.
struct MaximalChain {
  std::vector<int> path;
  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
};

/// Graded poset with rank function. When built as a lattice of order ideals
/// it also remembers the item set of every element, which lets chains be
/// written as permutation words.
class GradedPoset {
 public:
  GradedPoset() = default;
  GradedPoset(Poset base, std::vector<int> rank, std::vector<std::vector<int>> ideal_items = {}, int ground_size = 0)
      : base_(std::move(base)), rank_(std::move(rank)), items_(std::move(ideal_items)), ground_size_(ground_size) {
    rk_ = rank_.empty() ? 0 : *std::max_element(rank_.begin(), rank_.end());
    levels_.assign(static_cast<std::size_t>(rk_) + 1, {});
    for (int k = 0; k < static_cast<int>(rank_.size()); ++k) levels_[rank_[k]].push_back(k);
  }

  const Poset& poset() const { return base_; }
  std::size_t size() const { return base_.size(); }
  int rank(int e) const { return rank_[e]; }
  const std::vector<int>& ranks() const { return rank_; }
  /// rk(Q): top rank value.
  int rk() const { return rk_; }
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  const std::vector<int>& level(int i) const { return levels_.at(static_cast<std::size_t>(i)); }
  const std::string& label(int e) const { return base_.label(e); }

  bool is_ideal_lattice() const { return !items_.empty(); }
  /// Items (1-based, sorted) of an order-ideal element.
  const std::vector<int>& items(int e) const { return items_.at(static_cast<std::size_t>(e)); }
  int ground_size() const { return ground_size_; }

 private:
  Poset base_;
  std::vector<int> rank_;
  int rk_ = 0;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> items_;
  int ground_size_ = 0;
};

// ---------------------------------------------------------------------------
// Builders

inline std::string item_label(int item) { return std::to_string(item); }

/// Permutation word / item set label: digits run together for n < 10,
/// comma separated otherwise.
inline std::string word_label(const std::vector<int>& word, int n) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k && n >= 10) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

inline std::string subset_label(const std::vector<int>& items, int n) {
  if (items.empty()) return "∅";
  return word_label(items, n);
}

/// Constraint poset on [n] from pairs i<j (1-based).
inline Poset constraint_poset(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 1) throw FormatError("constraint poset needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(item_label(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (auto [i, j] : relations) {
    if (i < 1 || i > n || j < 1 || j > n) throw FormatError("relation item out of range 1.." + std::to_string(n));
    rel.emplace_back(item_label(i), item_label(j));
  }
  return Poset::from_relations(std::move(labels), rel);
}

inline Poset antichain(int n) { return constraint_poset(n, {}); }

inline Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
  return constraint_poset(n, rel);
}

/// c-chain 1<2<...<c together with k incomparable items c+1..c+k.
inline Poset mixed_poset(int c, int k) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < c; ++i) rel.emplace_back(i, i + 1);
  return constraint_poset(c + k, rel);
}

/// True if the poset's labels are exactly "1".."n".
inline bool is_constraint_poset(const Poset& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.label(static_cast<int>(k)) != item_label(static_cast<int>(k) + 1)) return false;
  return true;
}

/// Rank function of a graded poset; throws "not graded" otherwise.
inline GradedPoset grade(const Poset& p, std::vector<std::vector<int>> ideal_items = {}, int ground = 0) {
  const int n = static_cast<int>(p.size());
  if (n == 0) throw Error("not graded: empty poset");
  // Longest-path rank from below, processing in a linear extension order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.less(b, a)) ++below[a];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> rank(n, 0);
  for (int a : order)
    for (int d : p.down(a)) rank[a] = std::max(rank[a], rank[d] + 1);
  for (auto [a, b] : p.covers())
    if (rank[b] != rank[a] + 1) throw Error("not graded: maximal chains of different lengths");
  const auto maxima = p.maximal_elements();
  for (int m : maxima)
    if (rank[m] != rank[maxima.front()]) throw Error("not graded: maximal chains of different lengths");
  return GradedPoset(p, std::move(rank), std::move(ideal_items), ground);
}

/// Distributive lattice of order ideals of a constraint poset on [n],
/// ordered by inclusion and graded by cardinality.
inline GradedPoset order_ideal_lattice(const Poset& constraint, std::size_t max_ideals = 1u << 20) {
  if (!is_constraint_poset(constraint)) throw FormatError("order ideal lattice needs a constraint poset on 1..n");
  const int n = static_cast<int>(constraint.size());
  if (n > 62) throw FormatError("constraint poset too large");
  std::vector<std::uint64_t> below(n, 0);  // strict down-set mask of each item
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (constraint.less(j, i)) below[i] |= (std::uint64_t{1} << j);
  // Breadth-first generation by adding one available item at a time.
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : frontier)
      for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((s & bit) || (below[i] & ~s)) continue;
        if (seen.insert(s | bit).second) {
          next.push_back(s | bit);
          if (seen.size() > max_ideals) throw CapExceeded("order ideal lattice exceeds " + std::to_string(max_ideals) + " elements");
        }
      }
    frontier = std::move(next);
  }
  struct Entry {
    std::string label;
    std::uint64_t mask;
    std::vector<int> items;
  };
  std::vector<Entry> entries;
  for (std::uint64_t s : seen) {
    Entry e{"", s, {}};
    for (int i = 0; i < n; ++i)
      if (s & (std::uint64_t{1} << i)) e.items.push_back(i + 1);
    e.label = subset_label(e.items, n);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return natural_less(a.label, b.label); });
  const std::size_t m = entries.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> items;
  std::map<std::uint64_t, int> index;
  for (std::size_t k = 0; k < m; ++k) {
    labels.push_back(entries[k].label);
    items.push_back(entries[k].items);
    index[entries[k].mask] = static_cast<int>(k);
  }
  std::vector<std::vector<std::uint8_t>> leq(m, std::vector<std::uint8_t>(m, 0));
  std::vector<std::pair<int, int>> covers;
  std::vector<int> rank(m);
  for (std::size_t a = 0; a < m; ++a) {
    rank[a] = static_cast<int>(entries[a].items.size());
    for (std::size_t b = 0; b < m; ++b)
      if ((entries[a].mask & ~entries[b].mask) == 0) leq[a][b] = 1;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (entries[a].mask & bit) continue;
      auto it = index.find(entries[a].mask | bit);
      if (it != index.end()) covers.emplace_back(static_cast<int>(a), it->second);
    }
  }
  return GradedPoset(Poset::from_closed(std::move(labels), std::move(leq), std::move(covers)), std::move(rank),
                     std::move(items), n);
}

inline GradedPoset boolean_lattice(int n) {
  if (n < 1) throw FormatError("boolean lattice needs n >= 1");
  return order_ideal_lattice(antichain(n));
}

/// All maximal chains, lexicographic in element labels.
inline std::vector<MaximalChain> maximal_chains(const GradedPoset& q) {
  const Poset& p = q.poset();
  std::vector<MaximalChain> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int a) -> void {
    path.push_back(a);
    if (p.up(a).empty()) {
      out.push_back({path});
    } else {
      for (int b : p.up(a)) self(self, b);
    }
    path.pop_back();
  };
  for (int m : p.minimal_elements()) dfs(dfs, m);
  return out;
}

/// Permutation word of a chain in an order-ideal lattice: the item added at
/// step i occupies position i.
inline std::vector<int> chain_word(const GradedPoset& q, const MaximalChain& c) {
  std::vector<int> word;
  for (std::size_t k = 1; k < c.path.size(); ++k) {
    const auto& lo = q.items(c.path[k - 1]);
    const auto& hi = q.items(c.path[k]);
    std::vector<int> diff;
    std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(), std::back_inserter(diff));
    word.insert(word.end(), diff.begin(), diff.end());
  }
  return word;
}

/// Column label of a chain: the permutation word for order-ideal lattices
/// whose bottom is the empty ideal, otherwise labels joined by '<'.
inline std::string chain_label(const GradedPoset& q, const MaximalChain& c) {
  if (q.is_ideal_lattice() && !c.path.empty() && q.items(c.path.front()).empty())
    return word_label(chain_word(q, c), q.ground_size());
  std::vector<std::string> parts;
  for (int e : c.path) parts.push_back(q.label(e));
  return join(parts, "<");
}

/// Linear extensions of a constraint poset as permutation words, in
/// lexicographic order.
inline std::vector<std::vector<int>> linear_extensions(const Poset& constraint) {
  const GradedPoset q = order_ideal_lattice(constraint);
  std::vector<std::vector<int>> out;
  for (const auto& c : maximal_chains(q)) out.push_back(chain_word(q, c));
  return out;
}

/// (∇A, ΔA): elements covering some a in A, elements covered by some a in A.
inline std::pair<std::vector<int>, std::vector<int>> shadows(const GradedPoset& q, const std::vector<int>& a) {
  std::set<int> up, down;
  for (int e : a) {
    for (int b : q.poset().up(e)) up.insert(b);
    for (int b : q.poset().down(e)) down.insert(b);
  }
  return {{up.begin(), up.end()}, {down.begin(), down.end()}};
}

/// Induced graded subposet together with the map back into the parent.
struct Interval {
  GradedPoset sub;
  std::vector<int> to_parent;
};

/// (Q_{<=e}, Q_{>=e}).
inline std::pair<Interval, Interval> interval_subposets(const GradedPoset& q, int e) {
  const Poset& p = q.poset();
  std::vector<int> lower, upper;
  for (int a = 0; a < static_cast<int>(p.size()); ++a) {
    if (p.leq(a, e)) lower.push_back(a);
    if (p.leq(e, a)) upper.push_back(a);
  }
  auto make = [&](const std::vector<int>& elems) {
    auto [sub, map] = p.induced(elems);
    std::vector<std::vector<int>> items;
    if (q.is_ideal_lattice())
      for (int a : map) items.push_back(q.items(a));
    GradedPoset g = grade(sub, std::move(items), q.ground_size());
    return Interval{std::move(g), std::move(map)};
  };
  return {make(lower), make(upper)};
}

// ---------------------------------------------------------------------------
// Poset files

/// Parses {"elements":[...],"relations":[[a,b],...]} or the constraint
/// shorthand {"n":N,"relations":[[i,j],...]}.
inline Poset parse_poset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("poset file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("poset file must be a JSON object");
  auto as_label = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw FormatError("element labels must be strings or integers");
  };
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw FormatError("'relations' must be an array");
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2) throw FormatError("each relation must be a pair [a,b]");
      rel.emplace_back(as_label(r[0]), as_label(r[1]));
    }
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw FormatError("'n' must be a positive integer");
    const int n = j["n"].get<int>();
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(item_label(i));
    for (const auto& [a, b] : rel) {
      for (const auto& x : {a, b}) {
        bool ok = !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (!ok || std::stoll(x) < 1 || std::stoll(x) > n)
          throw FormatError("relation item '" + x + "' outside 1.." + std::to_string(n));
      }
    }
    return Poset::from_relations(std::move(labels), rel);
  }
  if (!j.contains("elements") || !j["elements"].is_array()) throw FormatError("poset file needs 'elements' or 'n'");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) labels.push_back(as_label(e));
  return Poset::from_relations(std::move(labels), rel);
}

}  // namespace rankalg
