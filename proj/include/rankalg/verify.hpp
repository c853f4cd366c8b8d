#pragma once

// Acceptance harness: criterion runners shared by the CLI `verify` command
// and the acceptance test binary.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rankalg/hilbert.hpp"
#include "rankalg/models.hpp"
#include "rankalg/plackett_luce.hpp"
#include "rankalg/polytope.hpp"
#include "rankalg/poset.hpp"
#include "rankalg/random_posets.hpp"
#include "rankalg/reference_data.hpp"
#include "rankalg/structural.hpp"
#include "rankalg/toric.hpp"

namespace rankalg::verify {

enum class Status { Pass, Fail, Partial, Skipped };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Partial: return "partial";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string computed;
  std::string expected;
  std::string provenance;  // PAPER, DERIVED or TRIVIAL
  std::string note;
  bool asserted = true;  // false: recorded for the report, not part of the verdict
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  Status status() const {
    bool any_pass = false, any_other = false;
    for (const auto& c : checks) {
      if (!c.asserted) continue;
      if (c.status == Status::Fail) return Status::Fail;
      if (c.status == Status::Pass) any_pass = true;
      else any_other = true;
    }
    if (!any_pass && !any_other) return Status::Skipped;
    if (!any_other) return Status::Pass;
    return any_pass ? Status::Partial : Status::Skipped;
  }
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  /// Reduction budget for the inversion n = 5 engine run.
  std::size_t stretch_reductions = 20'000;
};

inline const std::vector<std::pair<int, std::string>>& criterion_titles() {
  static const std::vector<std::pair<int, std::string>> v{
      {1, "n=3 models"},
      {2, "n=4 dimensions"},
      {3, "inversion n=4"},
      {4, "ascending n=4"},
      {5, "Csiszar n=4"},
      {6, "Csiszar n=5/6 structural counts"},
      {7, "n=6 inversion fiber witness"},
      {8, "mixed poset models"},
      {9, "Birkhoff dimension formula"},
      {10, "inclusions and witnesses"},
      {11, "Plackett-Luce n=3"},
      {12, "Bradley-Terry and marginals"},
      {13, "Csiszar MLE"},
      {14, "stretch: inversion n=5, Csiszar n=5 Hilbert, PL_4"},
  };
  return v;
}

/// Criteria of a tier; throws FormatError for an unknown tier.
inline std::vector<int> tier_criteria(const std::string& tier) {
  std::vector<int> fast{1, 2, 3, 4, 5, 9, 10, 11, 12, 13};
  if (tier == "fast") return fast;
  std::vector<int> full{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  if (tier == "full") return full;
  if (tier == "stretch") {
    full.push_back(14);
    return full;
  }
  throw FormatError("unknown tier '" + tier + "' (expected fast, full or stretch)");
}

namespace detail {

inline std::string join_longs(const std::vector<long>& v) {
  std::vector<std::string> s;
  for (const long x : v) s.push_back(std::to_string(x));
  return join(s, ",");
}

inline std::string join_integers(const std::vector<Integer>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.get_str());
  return join(s, ",");
}

inline std::string degree_profile(const std::map<long, std::size_t>& d) {
  std::vector<std::string> s;
  for (const auto& [deg, c] : d) s.push_back(std::to_string(deg) + ":" + std::to_string(c));
  return "{" + join(s, ", ") + "}";
}

inline std::function<std::optional<std::size_t>(const std::string&)> resolver(const std::vector<std::string>& names) {
  auto index = std::make_shared<std::map<std::string, std::size_t>>();
  for (std::size_t k = 0; k < names.size(); ++k) {
    (*index)[names[k]] = k;
    // also accept p123 / p_123 for p_{123}
    const auto& s = names[k];
    const auto brace = s.find("_{");
    if (brace != std::string::npos && s.back() == '}') {
      const std::string head = s.substr(0, brace), body = s.substr(brace + 2, s.size() - brace - 3);
      (*index)[head + body] = k;
      (*index)[head + "_" + body] = k;
    }
  }
  return [index](const std::string& id) -> std::optional<std::size_t> {
    auto it = index->find(id);
    if (it == index->end()) return std::nullopt;
    return it->second;
  };
}

inline Polynomial parse_in(const std::string& text, const std::vector<std::string>& names) {
  return parse_polynomial(text, names.size(), resolver(names));
}

/// A printed binomial "m1 - m2" with unit coefficients.
inline Binomial parse_binomial(const std::string& text, const std::vector<std::string>& names) {
  const Polynomial f = parse_in(text, names);
  std::optional<Exponents> plus, minus;
  for (const auto& [e, c] : f.terms()) {
    if (c == 1 && !plus) plus = e;
    else if (c == -1 && !minus) minus = e;
    else throw FormatError("not a binomial with unit coefficients: " + text);
  }
  if (!plus || !minus) throw FormatError("not a binomial: " + text);
  return Binomial{*plus, *minus};
}

inline std::vector<Binomial> parse_binomials(const std::vector<std::string>& texts, const std::vector<std::string>& names) {
  std::vector<Binomial> out;
  for (const auto& t : texts) out.push_back(parse_binomial(t, names));
  return out;
}

/// Binomials as unordered pairs of monomials, ignoring orientation.
inline std::set<std::pair<Exponents, Exponents>> as_set(const std::vector<Binomial>& v) {
  std::set<std::pair<Exponents, Exponents>> s;
  for (const auto& b : v) s.insert(std::minmax(b.lead, b.trail));
  return s;
}

inline Integer numerator_at_one(const HilbertSeries& h) {
  Integer s = 0;
  for (const auto& c : h.numerator) s += c;
  return s;
}

inline Rational ratio(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline std::vector<Integer> to_integers(const std::vector<long>& v) {
  std::vector<Integer> out;
  for (const long x : v) out.emplace_back(x);
  return out;
}

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void check(std::string name, bool ok, std::string computed, std::string expected, std::string provenance,
             std::string note = {}) {
    r_.checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(computed), std::move(expected),
                         std::move(provenance), std::move(note)});
  }
  template <class T>
  void equal(std::string name, const T& computed, const T& expected, std::string provenance, std::string note = {}) {
    std::ostringstream a, b;
    a << computed;
    b << expected;
    check(std::move(name), computed == expected, a.str(), b.str(), std::move(provenance), std::move(note));
  }
  void skipped(std::string name, std::string expected, std::string provenance, std::string note) {
    r_.checks.push_back({std::move(name), Status::Skipped, "", std::move(expected), std::move(provenance), std::move(note)});
  }
  void info(std::string name, std::string computed, std::string expected, std::string provenance, std::string note) {
    r_.checks.push_back({std::move(name), Status::Skipped, std::move(computed), std::move(expected), std::move(provenance),
                         std::move(note), false});
  }

 private:
  CriterionResult& r_;
};

struct EngineRun {
  ModelMatrix m;
  std::vector<Binomial> gb;
  MinimalGenerators mingens;
  HilbertSeries hilbert;
  SeriesInvariants invariants;
};

inline EngineRun engine_run(ModelKind kind, const GradedPoset& q, unsigned jobs, bool with_hilbert = true) {
  EngineRun e{model_matrix(kind, q), {}, {}, {}, {}};
  GroebnerLimits lim;
  lim.jobs = jobs;
  e.gb = toric_default_groebner(e.m.spec, lim);
  e.mingens = minimal_generators(e.gb, TermOrder::grevlex(), lim);
  if (with_hilbert) {
    e.hilbert = hilbert_series(initial_ideal(e.gb, e.m.spec.nvars()), e.m.spec.nvars());
    e.invariants = series_invariants(e.hilbert);
  }
  return e;
}

inline std::size_t generator_count(const EngineRun& e) { return e.mingens.kept.size(); }

// ---------------------------------------------------------------------------

inline void criterion1(Recorder& rec, const VerifyOptions& opt) {
  const GradedPoset q = boolean_lattice(3);
  const auto inv = engine_run(ModelKind::Inversion, q, opt.jobs, false);
  const auto names = inv.m.spec.variable_names();
  const auto printed_inv = parse_binomials(reference::inversion_n3_quadrics(), names);
  rec.equal("inversion n=3: minimal generators", detail::degree_profile(inv.mingens.degrees), std::string("{2:2}"), "PAPER");
  rec.check("inversion n=3: engine ideal = printed quadrics", same_ideal(inv.mingens.kept, printed_inv, TermOrder::grevlex()),
            "same_ideal", "equal", "PAPER");

  const auto cubic = parse_binomials({reference::ascending_n3_cubic()}, names);
  for (const auto kind : {ModelKind::Ascending, ModelKind::Birkhoff}) {
    const auto e = engine_run(kind, q, opt.jobs, false);
    const std::string k = model_kind_name(kind);
    rec.equal(k + " n=3: minimal generators", detail::degree_profile(e.mingens.degrees), std::string("{3:1}"), "PAPER");
    rec.check(k + " n=3: engine ideal = printed cubic", same_ideal(e.mingens.kept, cubic, TermOrder::grevlex()), "same_ideal",
              "equal", "PAPER");
  }
  const auto csi = engine_run(ModelKind::Csiszar, q, opt.jobs, false);
  rec.equal("csiszar n=3: generator count", generator_count(csi), std::size_t{0}, "PAPER", "toric ideal is zero");

  const std::vector<std::pair<ModelKind, long>> dims{
      {ModelKind::Inversion, 3}, {ModelKind::Birkhoff, 4}, {ModelKind::Ascending, 4}, {ModelKind::Csiszar, 5}};
  for (const auto& [kind, d] : dims)
    rec.equal(model_kind_name(kind) + " n=3: polytope dimension", polytope_dimension(model_matrix(kind, q)), d, "PAPER");
}

inline void criterion2(Recorder& rec, const VerifyOptions&) {
  const GradedPoset q = boolean_lattice(4);
  const std::vector<std::pair<ModelKind, long>> dims{
      {ModelKind::Birkhoff, 9}, {ModelKind::Inversion, 6}, {ModelKind::Ascending, 11}, {ModelKind::Csiszar, 17}};
  for (const auto& [kind, d] : dims) {
    const auto m = model_matrix(kind, q);
    rec.equal(model_kind_name(kind) + " n=4: polytope dimension", polytope_dimension(m), d, "PAPER");
    rec.equal(model_kind_name(kind) + " n=4: columns", m.columns(), std::size_t{24}, "PAPER");
  }
}

inline void check_hilbert(Recorder& rec, const std::string& prefix, const EngineRun& e, const std::vector<long>& numerator,
                          long K, std::optional<long> degree) {
  const HilbertSeries expected{detail::to_integers(numerator), K};
  rec.equal(prefix + ": Hilbert series", e.hilbert.to_string(), expected.to_string(), "PAPER");
  if (degree) rec.equal(prefix + ": degree", e.invariants.degree.get_str(), std::to_string(*degree), "PAPER");
}

inline void criterion3(Recorder& rec, const VerifyOptions& opt) {
  const auto e = engine_run(ModelKind::Inversion, boolean_lattice(4), opt.jobs);
  rec.equal("inversion n=4: minimal generators", detail::degree_profile(e.mingens.degrees), std::string("{2:81}"), "PAPER");
  check_hilbert(rec, "inversion n=4", e, reference::inversion_n4_numerator(), 7, 180);
  rec.check("inversion n=4: squarefree initial ideal", squarefree_initial(e.gb), squarefree_initial(e.gb) ? "yes" : "no", "yes",
            "PAPER", "normality certificate");
  rec.check("inversion n=4: symmetric numerator", e.invariants.symmetric, e.invariants.symmetric ? "yes" : "no", "yes", "PAPER",
            "Gorenstein");
}

inline void criterion4(Recorder& rec, const VerifyOptions& opt) {
  const GradedPoset q = boolean_lattice(4);
  const auto e = engine_run(ModelKind::Ascending, q, opt.jobs);
  rec.equal("ascending n=4: minimal generators", detail::degree_profile(e.mingens.degrees), std::string("{2:6, 3:64, 4:93}"),
            "PAPER");
  check_hilbert(rec, "ascending n=4", e, reference::ascending_n4_numerator(), 12, 808);
  const auto lift = ascending_lift_basis(q, 4);
  GroebnerLimits lim;
  lim.jobs = opt.jobs;
  rec.check("ascending n=4: lift basis generates the engine ideal", same_ideal(lift.binomials, e.gb, TermOrder::grevlex(), lim),
            std::to_string(lift.binomials.size()) + " lifted binomials", "same ideal", "DERIVED");
}

inline void criterion5(Recorder& rec, const VerifyOptions& opt) {
  const auto e = engine_run(ModelKind::Csiszar, boolean_lattice(4), opt.jobs);
  const auto names = e.m.spec.variable_names();
  const auto printed = parse_binomials(reference::csiszar_n4_minors(), names);
  rec.check("csiszar n=4: Markov basis = printed minors", as_set(e.mingens.kept) == as_set(printed),
            std::to_string(e.mingens.kept.size()) + " binomials", "the 6 printed minors", "PAPER");
  const long dim = polytope_dimension(e.m);
  const long codim = static_cast<long>(e.m.columns()) - (dim + 1);
  rec.equal("csiszar n=4: dimension", dim, 17L, "PAPER");
  rec.equal("csiszar n=4: codimension", codim, 6L, "PAPER");
  rec.equal("csiszar n=4: codimension = generator count", static_cast<long>(generator_count(e)), codim, "PAPER",
            "complete intersection");
  const auto vol = facet_volume(initial_ideal(e.gb, e.m.spec.nvars()));
  const Integer from_series = e.invariants.degree;
  rec.check("csiszar n=4: degree, Hilbert numerator vs initial complex", from_series == vol.second,
            from_series.get_str() + " vs " + vol.second.get_str(), "agree", "DERIVED",
            "paper prints degree 32; six quadrics in a complete intersection give 2^6 = 64");
  rec.info("csiszar n=4: printed degree", from_series.get_str(), "32", "PAPER",
           "paper value differs from the computed degree; recorded, not asserted");
}

inline long csiszar_formula_dimension(const GradedPoset& q) {
  return static_cast<long>(q.poset().covers().size()) - static_cast<long>(q.size()) +
         static_cast<long>(q.level(q.rk()).size()) + static_cast<long>(q.level(0).size()) - 1;
}

inline void criterion6(Recorder& rec, const VerifyOptions& opt) {
  const auto b5 = csiszar_minor_basis(boolean_lattice(5), opt.jobs);
  rec.equal("csiszar n=5: raw minors", b5.raw, std::size_t{300}, "PAPER");
  rec.equal("csiszar n=5: distinct minors", b5.binomials.size(), std::size_t{270}, "PAPER");
  const auto b6 = csiszar_minor_basis(boolean_lattice(6), opt.jobs);
  rec.equal("csiszar n=6: raw minors", b6.raw, std::size_t{12780}, "PAPER");
  rec.equal("csiszar n=6: distinct minors", b6.binomials.size(), std::size_t{10980}, "PAPER");
  const GradedPoset q5 = boolean_lattice(5);
  const auto m = model_matrix(ModelKind::Csiszar, q5);
  rec.equal("csiszar n=5: dimension via rank", polytope_dimension(m), 49L, "PAPER");
  rec.equal("csiszar n=5: dimension via formula", csiszar_formula_dimension(q5), 49L, "PAPER");
}

inline void criterion7(Recorder& rec, const VerifyOptions& opt) {
  const auto m = model_matrix(ModelKind::Inversion, boolean_lattice(6));
  std::map<std::pair<int, int>, int> mult;
  for (const auto& p : reference::inversion_n6_fiber_inversions()) ++mult[p];
  std::vector<int> target(m.spec.a.rows(), 0);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      const int k = mult.count({i, j}) ? mult.at({i, j}) : 0;
      target[static_cast<std::size_t>(m.row_index("v_{" + std::to_string(i) + std::to_string(j) + "}"))] = k;
      target[static_cast<std::size_t>(m.row_index("u_{" + std::to_string(i) + std::to_string(j) + "}"))] = 3 - k;
    }
  const auto f = fiber(m.spec, target, 3, opt.jobs);
  std::set<std::vector<std::string>> got, want;
  for (const auto& e : f) {
    std::vector<std::string> words;
    for (std::size_t c = 0; c < e.size(); ++c)
      for (int r = 0; r < e[c]; ++r) words.push_back(m.spec.column_labels[c]);
    std::sort(words.begin(), words.end());
    got.insert(words);
  }
  for (auto w : reference::inversion_n6_fiber_monomials()) {
    std::sort(w.begin(), w.end());
    want.insert(w);
  }
  auto show = [](const std::set<std::vector<std::string>>& s) {
    std::vector<std::string> parts;
    for (const auto& w : s) parts.push_back("{" + join(w, " ") + "}");
    return join(parts, ", ");
  };
  rec.check("inversion n=6: degree-3 fiber = the two printed monomials", got == want, show(got), show(want), "PAPER");
}

inline void criterion8(Recorder& rec, const VerifyOptions& opt) {
  const GradedPoset q4 = order_ideal_lattice(mixed_poset(3, 1));
  const auto m4 = model_matrix(ModelKind::Inversion, q4);
  std::vector<std::string> states = m4.spec.column_labels;
  std::sort(states.begin(), states.end());
  auto want = reference::mixed_n4_states();
  std::sort(want.begin(), want.end());
  rec.equal("mixed n=4: states", join(states, ","), join(want, ","), "PAPER");
  const auto e4 = engine_run(ModelKind::Inversion, q4, opt.jobs, false);
  rec.equal("mixed n=4: inversion ideal is zero", e4.gb.size(), std::size_t{0}, "PAPER");

  const GradedPoset q5 = order_ideal_lattice(mixed_poset(3, 2));
  const auto e = engine_run(ModelKind::Inversion, q5, opt.jobs);
  rec.equal("mixed n=5: states", e.m.columns(), std::size_t{20}, "PAPER");
  rec.equal("mixed n=5: dimension", polytope_dimension(e.m), 7L, "PAPER");
  const auto names = e.m.spec.variable_names();
  const auto printed = parse_binomials(reference::mixed_n5_inversion_quadrics(), names);
  rec.check("mixed n=5: Markov basis = the 40 printed quadrics", as_set(e.mingens.kept) == as_set(printed),
            std::to_string(e.mingens.kept.size()) + " binomials " + degree_profile(e.mingens.degrees), "the 40 printed quadrics",
            "PAPER");
  check_hilbert(rec, "mixed n=5", e, reference::mixed_n5_numerator(), 8, 82);

  const auto alt = engine_run(ModelKind::AltInversion, q5, opt.jobs);
  const auto alt_printed = parse_binomials(reference::mixed_n5_alt_inversion_generators(), alt.m.spec.variable_names());
  rec.equal("mixed n=5 alternative: minimal generators", degree_profile(alt.mingens.degrees), std::string("{2:17, 3:1, 4:1}"),
            "PAPER");
  rec.check("mixed n=5 alternative: engine ideal = printed generators",
            same_ideal(alt.mingens.kept, alt_printed, TermOrder::grevlex()), "same_ideal", "equal", "PAPER");
  check_hilbert(rec, "mixed n=5 alternative", alt, reference::mixed_n5_alt_numerator(), 11, std::nullopt);
}

inline void criterion9(Recorder& rec, const VerifyOptions& opt) {
  for (int n = 1; n <= 6; ++n) {
    const auto a = birkhoff_dimension(antichain(n));
    rec.equal("birkhoff antichain n=" + std::to_string(n), a.dim, static_cast<long>((n - 1) * (n - 1)), "PAPER");
    const auto c = birkhoff_dimension(chain_poset(n));
    rec.equal("birkhoff chain n=" + std::to_string(n), c.dim, 0L, "TRIVIAL");
  }
  const auto ex = birkhoff_dimension(constraint_poset(3, {{1, 2}}));
  rec.equal("birkhoff {1<2} + {3}: |Z|, |C|, dim",
            std::to_string(ex.Z.size()) + ", " + std::to_string(ex.C.size()) + ", " + std::to_string(ex.dim), std::string("2, 5, 2"),
            "DERIVED");
  std::mt19937_64 rng(opt.seed);
  std::size_t agree = 0;
  std::vector<std::string> bad;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Poset p = random_constraint_poset(n, rng, 0.1 + 0.1 * static_cast<double>(rng() % 5));
    try {
      const auto d = birkhoff_dimension(p);
      if (d.dim == d.rank_dim) ++agree;
    } catch (const Error& e) {
      std::vector<std::string> rel;
      for (const auto& [a, b] : p.covers()) rel.push_back(p.label(a) + "<" + p.label(b));
      bad.push_back("n=" + std::to_string(n) + " {" + join(rel, ",") + "}: " + e.what());
    }
  }
  rec.check("birkhoff formula = rank on 50 random constraint posets", agree == 50, std::to_string(agree) + "/50", "50/50",
            "PAPER", bad.empty() ? "" : "first mismatch " + bad.front());
}

inline void criterion10(Recorder& rec, const VerifyOptions&) {
  for (const int n : {3, 4}) {
    const GradedPoset q = boolean_lattice(n);
    const auto birk = model_matrix(ModelKind::Birkhoff, q), asc = model_matrix(ModelKind::Ascending, q),
               csi = model_matrix(ModelKind::Csiszar, q), inv = model_matrix(ModelKind::Inversion, q);
    const std::string s = " (n=" + std::to_string(n) + ")";
    rec.check("birkhoff in ascending" + s, model_inclusion(birk, asc), "row space contained", "contained", "PAPER");
    rec.check("ascending in csiszar" + s, model_inclusion(asc, csi), "row space contained", "contained", "PAPER");
    rec.check("inversion in csiszar" + s, model_inclusion(inv, csi), "row space contained", "contained", "PAPER");
  }
  const GradedPoset q = boolean_lattice(4);
  const auto birk = model_matrix(ModelKind::Birkhoff, q);
  std::map<std::string, Rational> params;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) params["a_{" + std::to_string(i) + std::to_string(j) + "}"] = i == j ? 0 : 1;
  const auto der = evaluate_distribution(birk, params);
  const auto inv = model_matrix(ModelKind::Inversion, q);
  const auto names = inv.spec.variable_names();
  const Binomial quad = parse_binomial(reference::inversion_n4_quadric(), names);
  rec.check("inversion quadric lies in the inversion ideal", in_kernel(inv.spec, quad), "in kernel", "in kernel", "DERIVED");
  std::vector<Rational> point;
  for (const auto& l : birk.spec.column_labels) point.push_back(distribution_value(der, l));
  // birk and inv share the column order (lexicographic words)
  const Rational v = parse_in(reference::inversion_n4_quadric(), names).evaluate(point);
  rec.equal("derangement-uniform point on the inversion quadric", v.get_str(), std::string("-1/81"), "DERIVED");

  const auto asc = model_matrix(ModelKind::Ascending, q);
  const Binomial cubic = parse_binomial(reference::ascending_n4_cubic(), names);
  rec.check("ascending cubic lies in the ascending ideal", in_kernel(asc.spec, cubic), "in kernel", "in kernel", "DERIVED");
  const auto wit = evaluate_distribution(inv, inversion_witness_parameters());
  std::vector<Rational> wpoint;
  for (const auto& l : inv.spec.column_labels) wpoint.push_back(distribution_value(wit, l));
  const Rational w = parse_in(reference::ascending_n4_cubic(), names).evaluate(wpoint);
  rec.check("inversion witness on the ascending cubic", w != 0, w.get_str(), "nonzero", "DERIVED",
            "built under this library's u/v convention");
}

inline std::vector<std::string> sorted_variables(const PLMap& m) {
  auto v = m.variables;
  std::sort(v.begin(), v.end());
  return v;
}

inline void criterion11(Recorder& rec, const VerifyOptions& opt) {
  const PLMap pl = pl_homogeneous_map(antichain(3));
  const std::vector<std::string> t_names{"t1", "t2", "t3"};
  for (const auto& [w, img] : reference::pl3_images()) {
    const auto k = *pl.variable_index("p_{" + w + "}");
    rec.check("PL_3 image of p_" + w, pl.images[k] == parse_in(img, t_names), pl.images[k].to_string(t_names, TermOrder::grevlex()),
              img, "PAPER");
  }
  std::vector<Polynomial> gens;
  for (const auto& g : reference::pl3_generators()) {
    gens.push_back(pl.parse(g));
    rec.check("printed PL_3 generator vanishes: " + g, pl_vanishes(gens.back(), pl), "zero", "zero", "PAPER");
  }
  rec.check("p123 - p132 does not vanish", !pl_vanishes(pl.parse("p_{123} - p_{132}"), pl), "nonzero", "nonzero", "DERIVED");

  // lex with p123 > p132 > p213 > p231 > p312 > p321
  std::vector<int> prio;
  for (const auto& v : sorted_variables(pl)) prio.push_back(static_cast<int>(*pl.variable_index(v)));
  const TermOrder lex = TermOrder::lex(prio);
  GroebnerLimits lim;
  lim.jobs = opt.jobs;
  const auto gb = buchberger(gens, lex, lim);
  const auto in = polynomial_initial_ideal(gb, lex, 6);
  rec.check("PL_3 lex initial ideal is squarefree", in.squarefree(), in.squarefree() ? "yes" : "no", "yes", "PAPER");
  std::vector<std::vector<std::size_t>> primes;
  for (const auto& comp : reference::pl3_initial_primes()) {
    std::vector<std::size_t> s;
    for (const auto& w : comp) s.push_back(*pl.variable_index("p_{" + w + "}"));
    primes.push_back(s);
  }
  const MonomialIdeal printed = intersect_primes(primes, 6);
  rec.check("PL_3 lex initial ideal = intersection of the 7 printed primes",
            MonomialIdeal(6, in.generators()).generators() == printed.generators(),
            std::to_string(in.generators().size()) + " generators", std::to_string(printed.generators().size()) + " generators",
            "PAPER");
  const auto hs = hilbert_series(in, 6);
  rec.equal("PL_3 Hilbert series", hs.to_string(), HilbertSeries{detail::to_integers({1, 3, 3}), 3}.to_string(), "PAPER");
  rec.equal("PL_3 degree", series_invariants(hs).degree.get_str(), std::string("7"), "PAPER");

  for (const auto& [a, b] : reference::pl3_special_points()) {
    std::vector<Rational> x(6, 0);
    x[*pl.variable_index("p_{" + a + "}")] = 1;
    x[*pl.variable_index("p_{" + b + "}")] = -1;
    bool all = true;
    for (const auto& g : gens) all = all && g.evaluate(x) == 0;
    rec.check("point e" + a + " - e" + b + " satisfies the PL_3 generators", all, all ? "yes" : "no", "yes", "DERIVED");
  }

  std::mt19937_64 rng(opt.seed);
  std::size_t ones = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    if (pl_probability(antichain(n), random_theta(static_cast<std::size_t>(n), rng)).total == 1) ++ones;
  }
  rec.check("PL probabilities sum to 1 (100 random theta, n <= 5)", ones == 100, std::to_string(ones) + "/100", "100/100",
            "DERIVED");

  for (const int n : {3, 4}) {
    const auto e = engine_run(ModelKind::Ascending, boolean_lattice(n), opt.jobs, false);
    const PLMap m = pl_homogeneous_map(antichain(n));
    const auto names = e.m.spec.variable_names();
    std::size_t ok = 0;
    for (const auto& b : e.mingens.kept)
      if (pl_vanishes(m.parse(binomial_string(b, names)), m)) ++ok;
    rec.check("ascending ideal inside the PL ideal, n=" + std::to_string(n), ok == e.mingens.kept.size(),
              std::to_string(ok) + "/" + std::to_string(e.mingens.kept.size()) + " generators vanish", "all", "PAPER");
  }

  const Poset two = constraint_poset(4, {{1, 2}, {3, 4}});
  const PLMap tm = pl_homogeneous_map(two);
  const std::vector<std::string> t4{"t1", "t2", "t3", "t4"};
  bool images = tm.words.size() == reference::two_chain_images().size();
  for (const auto& [w, img] : reference::two_chain_images()) {
    const auto k = tm.variable_index("p_{" + w + "}");
    images = images && k && tm.images[*k] == parse_in(img, t4);
  }
  rec.check("two-chain poset: printed images", images, images ? "match" : "differ", "match", "PAPER");
  rec.check("two-chain poset: printed cubic vanishes", pl_vanishes(tm.parse(reference::two_chain_cubic()), tm), "zero", "zero",
            "PAPER");
  rec.check("two-chain poset: printed quadric vanishes", pl_vanishes(tm.parse(reference::two_chain_quadric()), tm), "zero",
            "zero", "PAPER");
}

inline void criterion12(Recorder& rec, const VerifyOptions& opt) {
  // a generic distribution: distinct primes as weights
  const std::vector<std::string> words{"123", "132", "213", "231", "312", "321"};
  const std::vector<long> weights{2, 3, 5, 7, 11, 13};
  Distribution dist;
  std::map<std::string, long> wt;
  for (std::size_t k = 0; k < words.size(); ++k) {
    dist.emplace_back(words[k], Rational(weights[k]));
    wt[words[k]] = weights[k];
  }
  const auto margs = marginalize(dist, 2);
  for (const auto& pm : reference::n3_pairwise_marginals()) {
    long f = 0, b = 0;
    for (const auto& w : pm.forward) f += wt.at(w);
    for (const auto& w : pm.backward) b += wt.at(w);
    std::optional<std::pair<Rational, Rational>> got;
    for (const auto& m : margs)
      if (m.subset == std::vector<int>{pm.i, pm.j}) {
        Rational x = 0, y = 0;
        for (const auto& [sw, v] : m.values) {
          if (sw == std::to_string(pm.i) + std::to_string(pm.j)) x = v;
          if (sw == std::to_string(pm.j) + std::to_string(pm.i)) y = v;
        }
        got = std::make_pair(x, y);
      }
    const std::string name = "marginal (q" + std::to_string(pm.i) + std::to_string(pm.j) + " : q" + std::to_string(pm.j) +
                             std::to_string(pm.i) + ")";
    const bool ok = got && got->first == f && got->second == b;
    rec.check(name, ok, got ? got->first.get_str() + ":" + got->second.get_str() : "missing",
              std::to_string(f) + ":" + std::to_string(b), "PAPER");
  }

  const auto bt = bt_circuit_binomials(antichain(3), 3);
  bool circuit = bt.binomials.size() == 1;
  if (circuit) circuit = as_set(bt.binomials) == as_set({parse_binomial(reference::bt3_circuit(), bt.variables)});
  rec.check("BT n=3 circuit = printed binomial", circuit,
            bt.binomials.empty() ? "none" : binomial_string(bt.binomials.front(), bt.variables), reference::bt3_circuit(), "PAPER");

  for (int n = 2; n <= 5; ++n) {
    const auto r = bt_parametrization_check(antichain(n), 5, opt.seed + static_cast<std::uint64_t>(n));
    const std::string s = " (antichain n=" + std::to_string(n) + ", " + std::to_string(r.circuits) + " circuits)";
    rec.check("circuits vanish under the BT map" + s, r.lawrence_vanish && r.bt_vanish, r.bt_vanish ? "zero" : "nonzero", "zero",
              "PAPER", r.failures.empty() ? "" : r.failures.front());
    rec.check("q_ij + q_ji = 1" + s, r.complementary, r.complementary ? "yes" : "no", "yes", "TRIVIAL");
    rec.check("pairwise PL marginals = BT values" + s, r.marginals_match.value_or(false), r.marginals_match.value_or(false) ? "yes" : "no",
              "yes", "PAPER");
  }

  std::mt19937_64 rng(opt.seed);
  std::size_t agree = 0;
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Poset p = random_constraint_poset(n, rng, 0.1 + 0.1 * static_cast<double>(rng() % 5));
    const auto dual = alexander_dual(incomparability_ideal(p));
    if (dual.ideal.generators().size() == linear_extensions(p).size()) ++agree;
  }
  rec.check("Alexander dual generators = linear extensions (25 random posets)", agree == 25, std::to_string(agree) + "/25", "25/25",
            "PAPER");

  const Poset two = constraint_poset(4, {{1, 2}, {3, 4}});
  const auto M = incomparability_ideal(two);
  auto labelled = [&](const std::vector<std::vector<std::string>>& gens) {
    std::vector<Exponents> out;
    for (const auto& g : gens) {
      Exponents e(M.variables.size(), 0);
      for (const auto& a : g) {
        const auto it = std::find(M.variables.begin(), M.variables.end(), "t_{" + a + "}");
        if (it == M.variables.end()) throw Error("unknown ideal label " + a);
        e[static_cast<std::size_t>(it - M.variables.begin())] = 1;
      }
      out.push_back(e);
    }
    return MonomialIdeal(M.variables.size(), out).generators();
  };
  rec.check("two-chain poset: incomparability ideal = printed M", M.ideal.generators() == labelled(reference::two_chain_sr_ideal()),
            std::to_string(M.ideal.generators().size()) + " generators", "9 generators", "PAPER");
  const auto D = alexander_dual(M);
  rec.check("two-chain poset: Alexander dual = printed M*", D.ideal.generators() == labelled(reference::two_chain_sr_dual()),
            std::to_string(D.ideal.generators().size()) + " generators", "6 generators", "PAPER");
}

inline void criterion13(Recorder& rec, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<GradedPoset> posets{boolean_lattice(3), boolean_lattice(4)};
  for (int k = 0; k < 5; ++k) posets.push_back(random_graded_poset(3 + static_cast<int>(rng() % 2), 3, rng));
  // 40 datasets on each Boolean lattice, 4 on each random poset
  const std::vector<int> per{40, 40, 4, 4, 4, 4, 4};
  std::size_t total = 0, stats_ok = 0, minors_ok = 0, sums_ok = 0;
  for (std::size_t k = 0; k < posets.size(); ++k) {
    const auto& q = posets[k];
    const auto m = model_matrix(ModelKind::Csiszar, q);
    const auto minors = csiszar_minor_basis(q, opt.jobs);
    for (int d = 0; d < per[k]; ++d) {
      std::map<std::string, Integer> counts;
      for (const auto& l : m.spec.column_labels) {
        const long c = static_cast<long>(rng() % 6);
        if (c) counts[l] = c;
      }
      if (counts.empty()) counts[m.spec.column_labels.front()] = 1;
      const auto mle = csiszar_mle(q, counts);
      std::vector<Rational> p;
      Rational sum = 0;
      for (const auto& l : m.spec.column_labels) {
        p.push_back(distribution_value(mle, l));
        sum += p.back();
      }
      const auto b = sufficient_stats(m, counts);
      const auto ap = rankalg::apply(m, p);
      bool ok = true;
      for (std::size_t r = 0; r < ap.size(); ++r) ok = ok && ap[r] == ratio(b.values[r], b.N);
      bool vanish = true;
      for (const auto& bin : minors.binomials) vanish = vanish && bin.polynomial().evaluate(p) == 0;
      ++total;
      stats_ok += ok;
      minors_ok += vanish;
      sums_ok += sum == 1;
    }
  }
  const std::string t = std::to_string(total);
  rec.check("MLE matches sufficient statistics A p = A u / N", stats_ok == total, std::to_string(stats_ok) + "/" + t, t + "/" + t,
            "PAPER");
  rec.check("structural quadrics vanish at the MLE", minors_ok == total, std::to_string(minors_ok) + "/" + t, t + "/" + t, "PAPER");
  rec.check("MLE sums to 1", sums_ok == total, std::to_string(sums_ok) + "/" + t, t + "/" + t, "TRIVIAL");

  const GradedPoset q3 = boolean_lattice(3);
  const auto m3 = model_matrix(ModelKind::Csiszar, q3);
  std::size_t emp = 0;
  for (int d = 0; d < 10; ++d) {
    std::map<std::string, Integer> counts;
    Integer N = 0;
    for (const auto& l : m3.spec.column_labels) {
      counts[l] = 1 + static_cast<long>(rng() % 9);
      N += counts[l];
    }
    const auto mle = csiszar_mle(q3, counts);
    bool same = true;
    for (const auto& [l, u] : counts) same = same && distribution_value(mle, l) == ratio(u, N);
    emp += same;
  }
  rec.check("n=3 MLE = empirical distribution", emp == 10, std::to_string(emp) + "/10", "10/10", "PAPER",
            "the n=3 Csiszar model is saturated");
}

/// #minimal quadrics of I_A = dim of its degree-2 part = sum over degree-2
/// fibers of (|fiber| - 1); I_A has no linear forms.
inline std::size_t quadric_count(const ToricSpec& spec) {
  const std::size_t n = spec.nvars(), rows = spec.a.rows();
  std::unordered_map<std::vector<int>, std::size_t, rankalg::detail::VectorHash> fibers;
  std::vector<int> v(rows);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t r = 0; r < rows; ++r) v[r] = spec.a(r, i) + spec.a(r, j);
      ++fibers[v];
    }
  std::size_t total = 0;
  for (const auto& [k, c] : fibers) total += c - 1;
  return total;
}

inline void criterion14(Recorder& rec, const VerifyOptions& opt) {
  const auto inv5 = model_matrix(ModelKind::Inversion, boolean_lattice(5));
  rec.equal("inversion n=5: minimal quadrics (degree-2 fibers)", quadric_count(inv5.spec), std::size_t{3029}, "PAPER");
  try {
    GroebnerLimits lim;
    lim.jobs = opt.jobs;
    lim.max_reductions = opt.stretch_reductions;
    const auto gb = toric_default_groebner(inv5.spec, lim);
    const auto mg = minimal_generators(gb, TermOrder::grevlex(), lim);
    rec.equal("inversion n=5: engine Markov basis", degree_profile(mg.degrees), std::string("{2:3029}"), "PAPER");
  } catch (const CapExceeded& e) {
    rec.skipped("inversion n=5: engine Markov basis", "{2:3029}", "PAPER",
                std::string("reduction cap reached: ") + e.what() + "; quadric count checked via fibers only");
  }

  const GradedPoset q5 = boolean_lattice(5);
  const auto minors = csiszar_minor_basis(q5, opt.jobs);
  const bool is_gb = is_groebner_basis(minors.binomials, TermOrder::grevlex());
  rec.check("csiszar n=5: minors form a Groebner basis", is_gb, is_gb ? "yes" : "no", "yes", "PAPER");
  const auto hs = hilbert_series(initial_ideal(minors.binomials, minors.variables.size()), minors.variables.size());
  std::vector<Integer> num;
  for (const auto& s : reference::csiszar_n5_numerator()) num.emplace_back(s);
  rec.equal("csiszar n=5: Hilbert series", hs.to_string(), HilbertSeries{num, 50}.to_string(), "PAPER");
  rec.equal("csiszar n=5: degree", series_invariants(hs).degree.get_str(), reference::csiszar_n5_degree(), "PAPER");

  rec.skipped("PL_4 generator counts and degree", "105 quadrics, 75 cubics, degree 191", "PAPER",
              "implicitization of PL_4 is not implemented");
}

}  // namespace detail

inline CriterionResult run_criterion(int id, const VerifyOptions& opt = {}) {
  CriterionResult r;
  r.id = id;
  for (const auto& [k, t] : criterion_titles())
    if (k == id) r.title = t;
  if (r.title.empty()) throw FormatError("unknown criterion " + std::to_string(id));
  detail::Recorder rec(r);
  const auto t0 = std::chrono::steady_clock::now();
  static const std::vector<void (*)(detail::Recorder&, const VerifyOptions&)> runners{
      detail::criterion1,  detail::criterion2,  detail::criterion3,  detail::criterion4,  detail::criterion5,
      detail::criterion6,  detail::criterion7,  detail::criterion8,  detail::criterion9,  detail::criterion10,
      detail::criterion11, detail::criterion12, detail::criterion13, detail::criterion14};
  try {
    runners[static_cast<std::size_t>(id - 1)](rec, opt);
  } catch (const CapExceeded& e) {
    if (id == 14)
      rec.skipped("criterion aborted", "", "", std::string("resource cap: ") + e.what());
    else
      rec.check("criterion aborted", false, std::string("resource cap: ") + e.what(), "completion", "");
  } catch (const std::exception& e) {
    rec.check("criterion aborted", false, std::string("error: ") + e.what(), "completion", "");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline nlohmann::json to_json(const CriterionResult& r) {
  nlohmann::json j;
  j["criterion"] = r.id;
  j["title"] = r.title;
  j["status"] = status_name(r.status());
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json x{{"name", c.name},     {"status", status_name(c.status)}, {"computed", c.computed},
                     {"expected", c.expected}, {"provenance", c.provenance}};
    if (!c.note.empty()) x["note"] = c.note;
    if (!c.asserted) x["asserted"] = false;
    j["checks"].push_back(std::move(x));
  }
  return j;
}

}  // namespace rankalg::verify
