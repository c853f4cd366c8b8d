#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankalg/core.hpp"
#include "rankalg/monomial.hpp"
#include "rankalg/parallel.hpp"

namespace rankalg {

/// Multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) { return term(Exponents(nvars, 0), c); }
  static Polynomial term(Exponents e, const Rational& c) {
    Polynomial p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t k) {
    Exponents e(nvars, 0);
    e.at(k) = 1;
    return term(std::move(e), 1);
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned k) const {
    Polynomial out = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Multiplies by c·x^e.
  Polynomial shifted(const Exponents& e, const Rational& c) const {
    Polynomial out(nvars_);
    for (const auto& [f, d] : terms_) {
      Exponents g(f);
      for (std::size_t k = 0; k < g.size(); ++k) g[k] += e[k];
      out.terms_.emplace_hint(out.terms_.end(), std::move(g), c * d);
    }
    if (c == 0) out.terms_.clear();
    return out;
  }

  /// Leading term under ord; the polynomial must be nonzero.
  std::pair<const Exponents*, const Rational*> leading(const TermOrder& ord) const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {&best->first, &best->second};
  }
  const Exponents& leading_monomial(const TermOrder& ord) const { return *leading(ord).first; }
  const Rational& leading_coefficient(const TermOrder& ord) const { return *leading(ord).second; }

  Polynomial monic(const TermOrder& ord) const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coefficient(ord));
  }

  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      const long t = total_degree(e);
      if (d >= 0 && t != d) return false;
      d = t;
    }
    return true;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (int j = 0; j < e[k]; ++j) t *= point.at(k);
      s += t;
    }
    return s;
  }

  /// Terms sorted descending by ord.
  std::vector<std::pair<Exponents, Rational>> sorted_terms(const TermOrder& ord) const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return ord.greater(x.first, y.first); });
    return out;
  }

  std::string to_string(const std::vector<std::string>& names, const TermOrder& ord) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(ord)) {
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      const bool unit = total_degree(e) == 0;
      if (a != 1 || unit) {
        out += a.get_str();
        if (!unit) out += "·";
      }
      if (!unit) out += monomial_string(e, names);
    }
    return out;
  }

 private:
  void adopt(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Parses polynomial text such as "p123*p321 - 2/3 p132^2 + (p1 + p2)p3".
/// Juxtaposition, '*' and '·' all denote multiplication. `resolve` maps an
/// identifier to a variable index or returns nullopt.
inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars,
                                   const std::function<std::optional<std::size_t>(const std::string&)>& resolve) {
  struct Parser {
    std::string s;
    std::size_t pos = 0;
    std::size_t nvars;
    const std::function<std::optional<std::size_t>(const std::string&)>& resolve;

    [[noreturn]] void fail(const std::string& what) const {
      throw FormatError("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }
    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_dot() const { return s.compare(pos, 2, "\xC2\xB7") == 0; }
    bool at_minus_sign() const { return s.compare(pos, 3, "\xE2\x88\x92") == 0; }

    Polynomial expr() {
      skip();
      Polynomial out(nvars);
      bool negate = false;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+' || at_minus_sign())) {
        negate = s[pos] != '+';
        pos += at_minus_sign() ? 3 : 1;
      }
      Polynomial t = product();
      out += negate ? -t : t;
      while (true) {
        skip();
        if (pos >= s.size()) break;
        if (s[pos] == '+' || s[pos] == '-' || at_minus_sign()) {
          const bool minus = s[pos] != '+';
          pos += at_minus_sign() ? 3 : 1;
          Polynomial u = product();
          out += minus ? -u : u;
        } else {
          break;
        }
      }
      return out;
    }
    bool factor_starts() {
      skip();
      if (pos >= s.size()) return false;
      const char c = s[pos];
      return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' || at_dot();
    }
    Polynomial product() {
      Polynomial out = power();
      while (factor_starts()) {
        if (s[pos] == '*')
          ++pos;
        else if (at_dot())
          pos += 2;
        out = out * power();
      }
      return out;
    }
    Polynomial power() {
      Polynomial b = base();
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected exponent");
        b = b.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
      }
      return b;
    }
    Polynomial base() {
      skip();
      if (pos >= s.size()) fail("unexpected end");
      const char c = s[pos];
      if (c == '(') {
        ++pos;
        Polynomial inner = expr();
        skip();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return Polynomial::constant(nvars, parse_rational(s.substr(start, pos - start)));
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos;
        while (pos < s.size()) {
          const char d = s[pos];
          if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == ',') {
            ++pos;
          } else if (d == '{') {
            const auto close = s.find('}', pos);
            if (close == std::string::npos) fail("unbalanced '{'");
            pos = close + 1;
            break;  // a braced subscript ends the name: p_{12}p_{21}
          } else {
            break;
          }
        }
        const std::string name = s.substr(start, pos - start);
        const auto idx = resolve(name);
        if (!idx) fail("unknown variable '" + name + "'");
        return Polynomial::variable(nvars, *idx);
      }
      fail(std::string("unexpected character '") + c + "'");
    }
  };
  Parser p{std::string(text), 0, nvars, resolve};
  Polynomial out = p.expr();
  p.skip();
  if (p.pos != p.s.size()) p.fail("trailing input");
  return out;
}

/// Resource limits for Buchberger runs. A zero degree cap means
/// 2 * (max generator degree).
struct GroebnerLimits {
  std::size_t max_reductions = 10'000'000;
  long max_degree = 0;
  unsigned jobs = 1;

  long effective_degree_cap(long max_generator_degree) const {
    return max_degree > 0 ? max_degree : 2 * std::max(1L, max_generator_degree);
  }
};

/// Full reduction of f by g: no term of the result is divisible by a
/// leading monomial of g.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const TermOrder& ord) {
  std::vector<std::pair<Exponents, Rational>> leads;
  std::vector<const Polynomial*> divisors;
  for (const auto& h : g) {
    if (h.is_zero()) continue;
    auto [e, c] = h.leading(ord);
    leads.emplace_back(*e, *c);
    divisors.push_back(&h);
  }
  Polynomial p = f, r(f.nvars());
  while (!p.is_zero()) {
    auto [e, c] = p.leading(ord);
    const Exponents lm = *e;
    const Rational lc = *c;
    std::size_t k = 0;
    while (k < leads.size() && !divides(leads[k].first, lm)) ++k;
    if (k == leads.size()) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
      continue;
    }
    Exponents shift(lm.size());
    for (std::size_t v = 0; v < lm.size(); ++v) shift[v] = lm[v] - leads[k].first[v];
    p -= divisors[k]->shifted(shift, lc / leads[k].second);
  }
  return r;
}

/// Reduced Gröbner basis of the ideal generated by gens (monic, sorted by
/// descending leading monomial). S-pairs are taken in batches of equal sugar
/// degree; each batch is reduced against the basis as it stood before the
/// batch (optionally in parallel) and merged in pair order, so the result
/// does not depend on `limits.jobs`.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord,
                                          const GroebnerLimits& limits = {}) {
  struct Element {
    Polynomial poly;
    Exponents lead;
    long sugar;
  };
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
    long sugar;
  };
  std::vector<Element> basis;
  std::vector<Pair> pairs;
  long max_gen_degree = 0;
  for (const auto& g : gens) max_gen_degree = std::max(max_gen_degree, g.degree());
  const long degree_cap = limits.effective_degree_cap(max_gen_degree);
  std::size_t reductions = 0;

  auto add = [&](Polynomial p, long sugar) {
    p = p.monic(ord);
    const Exponents lead = p.leading_monomial(ord);
    const std::size_t j = basis.size();
    basis.push_back({std::move(p), lead, sugar});
    for (std::size_t i = 0; i < j; ++i) {
      Exponents l = lcm(basis[i].lead, lead);
      const long s = std::max(basis[i].sugar + total_degree(l) - total_degree(basis[i].lead), sugar + total_degree(l) - total_degree(lead));
      pairs.push_back({i, j, std::move(l), s});
    }
  };
  auto current = [&] {
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(e.poly);
    return out;
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(g, current(), ord);
    if (!r.is_zero()) add(std::move(r), g.degree());
  }

  std::vector<std::vector<bool>> done;
  auto mark = [&](std::size_t i, std::size_t j) {
    if (done.size() < basis.size()) done.resize(basis.size());
    for (auto& row : done) row.resize(basis.size(), false);
    done[i][j] = done[j][i] = true;
  };
  auto is_done = [&](std::size_t i, std::size_t j) { return i < done.size() && j < done[i].size() && done[i][j]; };

  while (!pairs.empty()) {
    long s_min = pairs.front().sugar;
    for (const auto& p : pairs) s_min = std::min(s_min, p.sugar);
    std::vector<Pair> batch, rest;
    for (auto& p : pairs) (p.sugar == s_min ? batch : rest).push_back(std::move(p));
    pairs = std::move(rest);
    std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) { return std::tie(a.j, a.i) < std::tie(b.j, b.i); });

    std::vector<Pair> live;
    for (auto& p : batch) {
      mark(p.i, p.j);
      if (coprime(basis[p.i].lead, basis[p.j].lead)) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == p.i || k == p.j) continue;
        if (divides(basis[k].lead, p.lcm) && is_done(p.i, k) && is_done(p.j, k)) chain = true;
      }
      if (chain) continue;
      if (total_degree(p.lcm) > degree_cap)
        throw CapExceeded("Buchberger degree cap " + std::to_string(degree_cap) + " exceeded");
      live.push_back(std::move(p));
    }
    reductions += live.size();
    if (reductions > limits.max_reductions)
      throw CapExceeded("Buchberger S-pair reduction cap " + std::to_string(limits.max_reductions) + " exceeded");

    const std::vector<Polynomial> snapshot = current();
    std::vector<Polynomial> reduced(live.size());
    parallel_for(live.size(), limits.jobs, [&](std::size_t k) {
      const Pair& p = live[k];
      const auto& a = basis[p.i];
      const auto& b = basis[p.j];
      Exponents sa(p.lcm.size()), sb(p.lcm.size());
      for (std::size_t v = 0; v < p.lcm.size(); ++v) {
        sa[v] = p.lcm[v] - a.lead[v];
        sb[v] = p.lcm[v] - b.lead[v];
      }
      const Polynomial s = a.poly.shifted(sa, 1) - b.poly.shifted(sb, 1);
      reduced[k] = normal_form(s, snapshot, ord);
    });
    for (std::size_t k = 0; k < live.size(); ++k) {
      if (reduced[k].is_zero()) continue;
      Polynomial r = normal_form(reduced[k], current(), ord);
      if (!r.is_zero()) add(std::move(r), live[k].sugar);
    }
  }

  // Minimalize and interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].lead, basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(basis[i].poly);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Polynomial& f = minimal[i];
    const auto [e, c] = f.leading(ord);
    Polynomial tail = f;
    tail.add_term(*e, -*c);
    Polynomial r = Polynomial::term(*e, *c) + normal_form(tail, others, ord);
    out.push_back(r.monic(ord));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return out;
}

}  // namespace rankalg
