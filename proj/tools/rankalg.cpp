// rankalg command-line frontend.
//
// Exit codes: 0 ok, 1 failed check or computation error, 2 bad input,
// 3 resource cap reached (a partial report is still written).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankalg/rankalg.hpp"
#include "rankalg/verify.hpp"

using nlohmann::json;
using namespace rankalg;

namespace {

struct Globals {
  std::string format = "text";
  std::string order = "grevlex";
  std::size_t cap = 10'000'000;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string poset = "boolean:3";
  std::string poset_file;
  std::string out;
};

struct Report {
  json result = json::object();
  std::vector<std::vector<std::string>> table;  // csv rows, header first
  std::string text;
  bool failed = false;
};

struct Input {
  std::optional<Poset> constraint;  // set when the poset is a constraint poset on [n]
  GradedPoset q;
  std::string name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("bad " + what + " '" + s + "'");
  }
}

Input load_poset(const Globals& g) {
  if (!g.poset_file.empty()) {
    const std::string text = read_file(g.poset_file);
    const Poset p = parse_poset(text);
    if (json::parse(text).contains("n")) return {p, order_ideal_lattice(p), g.poset_file};
    return {std::nullopt, grade(p), g.poset_file};
  }
  const auto colon = g.poset.find(':');
  if (colon == std::string::npos) throw FormatError("bad --poset '" + g.poset + "' (expected kind:n)");
  const std::string kind = g.poset.substr(0, colon), arg = g.poset.substr(colon + 1);
  if (kind == "boolean") {
    const int n = parse_int(arg, "poset size");
    if (n < 1 || n > 12) throw FormatError("boolean:n needs 1 <= n <= 12");
    return {antichain(n), boolean_lattice(n), g.poset};
  }
  Poset p = antichain(1);
  if (kind == "antichain" || kind == "chain") {
    const int n = parse_int(arg, "poset size");
    if (n < 1 || n > 12) throw FormatError(kind + ":n needs 1 <= n <= 12");
    p = kind == "antichain" ? antichain(n) : chain_poset(n);
  } else if (kind == "mixed") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) throw FormatError("mixed:c,k expects two numbers");
    const int c = parse_int(parts[0], "chain length"), k = parse_int(parts[1], "antichain size");
    if (c < 1 || k < 0 || c + k > 12) throw FormatError("mixed:c,k needs c >= 1, k >= 0, c + k <= 12");
    p = mixed_poset(c, k);
  } else {
    throw FormatError("unknown poset kind '" + kind + "'");
  }
  return {p, order_ideal_lattice(p), g.poset};
}

const Poset& need_constraint(const Input& in) {
  if (!in.constraint) throw FormatError("this command needs a constraint poset on [n]");
  return *in.constraint;
}

GroebnerLimits limits(const Globals& g) {
  GroebnerLimits l;
  l.max_reductions = g.cap;
  l.jobs = g.jobs;
  return l;
}

TermOrder term_order(const Globals& g) {
  if (g.order == "lex") return TermOrder::lex();
  return TermOrder::grevlex();
}

std::string q_str(const Rational& r) { return r.get_str(); }

std::vector<Rational> parse_theta(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_rational(part));
  return out;
}

std::map<std::string, Rational> parse_params(const std::string& s) {
  std::map<std::string, Rational> out;
  if (s.empty()) return out;
  // split on commas outside braces so that "u_{1,10}=2" survives
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (const char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos) throw FormatError("parameter '" + it + "' needs name=value");
    out[it.substr(0, eq)] = parse_rational(it.substr(eq + 1));
  }
  return out;
}

json distribution_json(const Distribution& d) {
  json j = json::object();
  for (const auto& [w, v] : d) j[w] = q_str(v);
  return j;
}

void distribution_table(Report& r, const Distribution& d) {
  r.table.push_back({"word", "value"});
  for (const auto& [w, v] : d) {
    r.table.push_back({w, q_str(v)});
    r.text += w + "  " + q_str(v) + "\n";
  }
}

void binomial_report(Report& r, const std::vector<Binomial>& gens, const std::vector<std::string>& names) {
  json arr = json::array();
  r.table.push_back({"degree", "binomial"});
  for (const auto& b : gens) {
    const std::string s = binomial_string(b, names);
    arr.push_back(s);
    r.table.push_back({std::to_string(b.degree()), s});
    r.text += s + "\n";
  }
  r.result["count"] = gens.size();
  r.result["binomials"] = arr;
}

std::string series_text(const HilbertSeries& h, const SeriesInvariants& inv) {
  return h.to_string() + "\nK = " + std::to_string(h.K) + "\ndegree = " + inv.degree.get_str() +
         "\nsymmetric numerator = " + (inv.symmetric ? "yes" : "no") + "\n";
}

// ---------------------------------------------------------------------------

Report cmd_poset_check(const Globals& g) {
  const Input in = load_poset(g);
  Report r;
  const Poset& p = in.q.poset();
  r.result["poset"] = in.name;
  r.result["elements"] = p.size();
  r.result["covers"] = p.covers().size();
  r.result["rank"] = in.q.rk();
  json levels = json::array();
  for (const auto& l : in.q.levels()) levels.push_back(l.size());
  r.result["level_sizes"] = levels;
  r.result["maximal_chains"] = maximal_chains(in.q).size();
  if (in.constraint) {
    r.result["constraint_size"] = in.constraint->size();
    r.result["constraint_relations"] = in.constraint->strict_relations().size();
    r.result["linear_extensions"] = linear_extensions(*in.constraint).size();
  }
  r.table.push_back({"key", "value"});
  for (const auto& [k, v] : r.result.items()) {
    r.table.push_back({k, v.dump()});
    r.text += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return r;
}

Report cmd_poset_chains(const Globals& g) {
  const Input in = load_poset(g);
  Report r;
  json arr = json::array();
  r.table.push_back({"chain"});
  for (const auto& c : maximal_chains(in.q)) {
    const std::string l = chain_label(in.q, c);
    arr.push_back(l);
    r.table.push_back({l});
    r.text += l + "\n";
  }
  r.result["count"] = arr.size();
  r.result["chains"] = arr;
  return r;
}

Report cmd_model_matrix(const Globals& g, const std::string& kind) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  Report r;
  r.result["kind"] = model_kind_name(m.kind);
  r.result["rows"] = m.spec.row_labels;
  r.result["columns"] = m.spec.column_labels;
  json a = json::array();
  std::vector<std::string> header{""};
  header.insert(header.end(), m.spec.column_labels.begin(), m.spec.column_labels.end());
  r.table.push_back(header);
  r.text += "rows " + std::to_string(m.spec.a.rows()) + ", columns " + std::to_string(m.spec.a.cols()) + "\n";
  for (std::size_t i = 0; i < m.spec.a.rows(); ++i) {
    json row = json::array();
    std::vector<std::string> line{m.spec.row_labels[i]};
    std::string t = m.spec.row_labels[i] + " ";
    for (std::size_t c = 0; c < m.spec.a.cols(); ++c) {
      row.push_back(m.spec.a(i, c));
      line.push_back(std::to_string(m.spec.a(i, c)));
      t += std::to_string(m.spec.a(i, c));
    }
    a.push_back(row);
    r.table.push_back(line);
    r.text += t + "\n";
  }
  r.result["matrix"] = a;
  r.result["notes"] = m.notes;
  return r;
}

Report cmd_model_dim(const Globals& g, const std::string& kind) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  Report r;
  const long d = polytope_dimension(m);
  r.result["kind"] = model_kind_name(m.kind);
  r.result["dimension"] = d;
  r.result["columns"] = m.columns();
  if (m.kind == ModelKind::Birkhoff && in.constraint) {
    try {
      const auto b = birkhoff_dimension(*in.constraint);
      r.result["formula"] = {{"Z", b.Z.size()}, {"C", b.C.size()}, {"dimension", b.dim}};
    } catch (const Error& e) {
      r.result["formula_error"] = e.what();
    }
  }
  r.table = {{"kind", "dimension", "columns"}, {model_kind_name(m.kind), std::to_string(d), std::to_string(m.columns())}};
  r.text = std::to_string(d) + "\n";
  return r;
}

Report cmd_model_hdesc(const Globals& g, const std::string& kind) {
  const Input in = load_poset(g);
  const auto k = parse_model_kind(kind);
  const auto h = h_description(k, in.q);
  Report r;
  auto row_text = [&](const LinearRow& row, const std::string& sense) {
    std::string s;
    for (std::size_t c = 0; c < row.coeffs.size(); ++c) {
      if (row.coeffs[c] == 0) continue;
      const bool neg = row.coeffs[c] < 0;
      const Rational a = neg ? Rational(-row.coeffs[c]) : row.coeffs[c];
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (a != 1) s += q_str(a) + " ";
      s += h.coordinates[c];
    }
    return (s.empty() ? "0" : s) + " " + sense + " " + q_str(row.rhs);
  };
  json eq = json::array(), ineq = json::array();
  r.table.push_back({"type", "row"});
  for (const auto& e : h.equalities) {
    eq.push_back(row_text(e, "="));
    r.table.push_back({"eq", eq.back()});
  }
  for (const auto& e : h.inequalities) {
    ineq.push_back(row_text(e, ">="));
    r.table.push_back({"ineq", ineq.back()});
  }
  r.result["coordinates"] = h.coordinates;
  r.result["equalities"] = eq;
  r.result["inequalities"] = ineq;
  if (k == ModelKind::Ascending) r.result["raw_subset_rows"] = h.raw_subset_rows;
  const auto m = model_matrix(k, in.q);
  const auto v = verify_h_description(m, h);
  json ver{{"columns_satisfy", v.columns_satisfy},
           {"equality_dimension", v.equality_dimension},
           {"polytope_dimension", v.polytope_dimension},
           {"dimension_match", v.dimension_match},
           {"partial", v.partial}};
  ver["zero_one_exact"] = v.zero_one_exact ? json(*v.zero_one_exact) : json("skipped");
  ver["vertices_exact"] = v.vertices_exact ? json(*v.vertices_exact) : json("skipped");
  ver["vertex_count"] = v.vertex_count;
  r.result["verification"] = ver;
  r.failed = !v.ok();
  for (const auto& s : eq) r.text += s.get<std::string>() + "\n";
  for (const auto& s : ineq) r.text += s.get<std::string>() + "\n";
  r.text += "verification: " + ver.dump() + "\n";
  return r;
}

Report cmd_model_markov(const Globals& g, const std::string& kind) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  const auto gens = toric_markov_basis(m.spec, limits(g));
  Report r;
  binomial_report(r, gens, m.spec.variable_names());
  std::map<long, std::size_t> deg;
  for (const auto& b : gens) ++deg[b.degree()];
  json d = json::object();
  for (const auto& [k, c] : deg) d[std::to_string(k)] = c;
  r.result["degrees"] = d;
  return r;
}

Report cmd_model_groebner(const Globals& g, const std::string& kind) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  const TermOrder ord = term_order(g);
  const auto gb = toric_groebner(m.spec, ord, limits(g));
  Report r;
  binomial_report(r, gb, m.spec.variable_names());
  r.result["order"] = ord.name();
  r.result["squarefree_initial"] = squarefree_initial(gb);
  return r;
}

Report cmd_model_hilbert(const Globals& g, const std::string& kind) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  const auto gb = toric_default_groebner(m.spec, limits(g));
  const auto h = hilbert_series(initial_ideal(gb, m.spec.nvars()), m.spec.nvars());
  const auto inv = series_invariants(h);
  Report r;
  std::vector<std::string> num;
  for (const auto& c : h.numerator) num.push_back(c.get_str());
  r.result["numerator"] = num;
  r.result["K"] = h.K;
  r.result["degree"] = inv.degree.get_str();
  r.result["symmetric"] = inv.symmetric;
  r.result["squarefree_initial"] = squarefree_initial(gb);
  r.table = {{"numerator", "K", "degree", "symmetric"}, {join(num, " "), std::to_string(h.K), inv.degree.get_str(), inv.symmetric ? "yes" : "no"}};
  r.text = series_text(h, inv);
  return r;
}

Report cmd_model_inclusion(const Globals& g, const std::string& inner, const std::string& outer) {
  const Input in = load_poset(g);
  const auto a = model_matrix(parse_model_kind(inner), in.q);
  const auto b = model_matrix(parse_model_kind(outer), in.q);
  const bool inc = model_inclusion(a, b);
  Report r;
  r.result = {{"inner", model_kind_name(a.kind)}, {"outer", model_kind_name(b.kind)}, {"included", inc}};
  r.table = {{"inner", "outer", "included"}, {model_kind_name(a.kind), model_kind_name(b.kind), inc ? "true" : "false"}};
  r.text = std::string(inc ? "included" : "not included") + "\n";
  return r;
}

Report cmd_model_mle(const Globals& g, const std::string& counts_path) {
  const Input in = load_poset(g);
  const json j = json::parse(read_file(counts_path));
  if (!j.is_object()) throw FormatError("counts file must map chain labels to counts");
  std::map<std::string, Integer> counts;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer() && !v.is_string()) throw FormatError("count for '" + k + "' must be an integer");
    counts[k] = Integer(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
  }
  const auto mle = csiszar_mle(in.q, counts);
  Report r;
  r.result["mle"] = distribution_json(mle);
  distribution_table(r, mle);
  return r;
}

Report cmd_model_mallows(const Globals& g, const std::string& qtext) {
  const Input in = load_poset(g);
  const int n = in.constraint ? static_cast<int>(in.constraint->size()) : in.q.ground_size();
  const auto d = mallows_specialize(n, parse_rational(qtext));
  Report r;
  r.result["distribution"] = distribution_json(d);
  distribution_table(r, d);
  return r;
}

Report cmd_model_eval(const Globals& g, const std::string& kind, const std::string& params, const std::string& witness,
                      const std::string& poly) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  auto p = parse_params(params);
  if (witness == "inversion") p = inversion_witness_parameters();
  if (witness == "derangement")
    for (int i = 1; i <= m.q.ground_size(); ++i)
      for (int j = 1; j <= m.q.ground_size(); ++j)
        p["a_{" + std::to_string(i) + std::to_string(j) + "}"] = i == j ? 0 : 1;
  const auto d = evaluate_distribution(m, p);
  Report r;
  r.result["distribution"] = distribution_json(d);
  distribution_table(r, d);
  if (!poly.empty()) {
    const auto names = m.spec.variable_names();
    const Polynomial f = verify::detail::parse_in(poly, names);
    std::vector<Rational> x;
    for (const auto& l : m.spec.column_labels) x.push_back(distribution_value(d, l));
    const Rational v = f.evaluate(x);
    r.result["polynomial_value"] = q_str(v);
    r.text += "value = " + q_str(v) + "\n";
  }
  return r;
}

Report cmd_toric_fiber(const Globals& g, const std::string& kind, const std::string& target_text, const std::string& monomial,
                       int degree) {
  const Input in = load_poset(g);
  const auto m = model_matrix(parse_model_kind(kind), in.q);
  std::vector<int> target;
  if (!monomial.empty()) {
    const Polynomial f = verify::detail::parse_in(monomial, m.spec.variable_names());
    if (f.terms().size() != 1) throw FormatError("--monomial must be a single monomial");
    target = image(m.spec, f.terms().begin()->first);
  } else {
    for (const auto& s : split(target_text, ',')) target.push_back(parse_int(s, "target entry"));
  }
  if (degree <= 0) {
    long sum = 0;
    for (const int t : target) sum += t;
    if (m.spec.column_sum() == 0 || sum % m.spec.column_sum()) throw FormatError("target is not in a degree slice");
    degree = static_cast<int>(sum / m.spec.column_sum());
  }
  const auto f = fiber(m.spec, target, degree, g.jobs);
  Report r;
  json arr = json::array();
  r.table.push_back({"monomial"});
  const auto names = m.spec.variable_names();
  for (const auto& e : f) {
    const std::string s = monomial_string(e, names, false);
    arr.push_back(s);
    r.table.push_back({s});
    r.text += s + "\n";
  }
  r.result["degree"] = degree;
  r.result["size"] = f.size();
  r.result["monomials"] = arr;
  return r;
}

Report cmd_pl_map(const Globals& g, const std::string& theta) {
  const Input in = load_poset(g);
  const Poset& p = need_constraint(in);
  const PLMap m = pl_homogeneous_map(p);
  Report r;
  const auto tn = m.theta_names();
  json imgs = json::object();
  r.table.push_back({"variable", "image"});
  for (std::size_t k = 0; k < m.variables.size(); ++k) {
    const std::string s = m.images[k].to_string(tn, TermOrder::grevlex());
    imgs[m.variables[k]] = s;
    r.table.push_back({m.variables[k], s});
    r.text += m.variables[k] + " -> " + s + "\n";
  }
  r.result["degree"] = m.degree;
  r.result["images"] = imgs;
  if (!theta.empty()) {
    const auto t = parse_theta(theta);
    const auto probs = pl_probability(p, t);
    r.result["probabilities"] = distribution_json(probs.distribution());
    r.result["total"] = q_str(probs.total);
    const auto w = pl_chain_weights(p, t);
    Rational s = 0;
    json wj = json::object();
    for (std::size_t k = 0; k < w.size(); ++k) {
      wj[probs.words[k]] = q_str(w[k]);
      s += w[k];
    }
    r.result["chain_weights"] = wj;
    r.result["chain_weight_sum"] = q_str(s);
    for (std::size_t k = 0; k < probs.words.size(); ++k) r.text += "P(" + probs.words[k] + ") = " + q_str(probs.values[k]) + "\n";
    r.text += "sum = " + q_str(probs.total) + "\n";
  }
  return r;
}

Report cmd_pl_check(const Globals& g, const std::string& poly) {
  const Input in = load_poset(g);
  const PLMap m = pl_homogeneous_map(need_constraint(in));
  const bool v = pl_vanishes(m.parse(poly), m);
  Report r;
  r.result = {{"polynomial", poly}, {"vanishes", v}};
  r.table = {{"polynomial", "vanishes"}, {poly, v ? "true" : "false"}};
  r.text = std::string(v ? "true" : "false") + "\n";
  return r;
}

Report cmd_pl_marginalize(const Globals& g, int k, const std::string& theta, const std::string& dist_path) {
  const Input in = load_poset(g);
  Distribution d;
  if (!dist_path.empty()) {
    const json j = json::parse(read_file(dist_path));
    if (!j.is_object()) throw FormatError("distribution file must map words to rationals");
    for (const auto& [w, v] : j.items()) d.emplace_back(w, parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
  } else {
    const Poset& p = need_constraint(in);
    std::vector<Rational> t = theta.empty() ? std::vector<Rational>(p.size(), 1) : parse_theta(theta);
    d = pl_probability(p, t).distribution();
  }
  Report r;
  json arr = json::array();
  r.table.push_back({"subset", "subword", "value", "normalized"});
  for (const auto& m : marginalize(d, k)) {
    std::vector<std::string> items;
    for (const int i : m.subset) items.push_back(std::to_string(i));
    json vals = json::object();
    for (const auto& [w, v] : m.values) {
      vals[w] = {{"value", q_str(v)}, {"normalized", q_str(m.normalized(w))}};
      r.table.push_back({join(items, " "), w, q_str(v), q_str(m.normalized(w))});
      r.text += "{" + join(items, ",") + "} " + w + "  " + q_str(v) + "  (" + q_str(m.normalized(w)) + ")\n";
    }
    arr.push_back({{"subset", m.subset}, {"values", vals}, {"total", q_str(m.total)}});
  }
  r.result["marginals"] = arr;
  return r;
}

Report cmd_pl_bt(const Globals& g, int trials) {
  const Input in = load_poset(g);
  const Poset& p = need_constraint(in);
  const auto rep = bt_parametrization_check(p, trials, g.seed);
  const auto bt = bt_circuit_binomials(p, std::max<int>(3, static_cast<int>(p.size())));
  Report r;
  json circ = json::array();
  for (const auto& b : bt.binomials) circ.push_back(binomial_string(b, bt.variables));
  r.result = {{"circuits", circ},
              {"pairs", rep.pairs},
              {"lawrence_vanish", rep.lawrence_vanish},
              {"bt_vanish", rep.bt_vanish},
              {"complementary", rep.complementary},
              {"failures", rep.failures}};
  r.result["marginals_match"] = rep.marginals_match ? json(*rep.marginals_match) : json("not applicable");
  r.failed = !rep.ok();
  r.table = {{"check", "value"},
             {"lawrence_vanish", rep.lawrence_vanish ? "true" : "false"},
             {"bt_vanish", rep.bt_vanish ? "true" : "false"},
             {"complementary", rep.complementary ? "true" : "false"},
             {"marginals_match", rep.marginals_match ? (*rep.marginals_match ? "true" : "false") : "n/a"}};
  for (const auto& c : circ) r.text += c.get<std::string>() + "\n";
  r.text += std::string("checks: ") + (rep.ok() ? "pass" : "fail") + "\n";
  return r;
}

Report cmd_verify(const Globals& g, const std::string& tier, int only) {
  verify::VerifyOptions opt;
  opt.jobs = g.jobs;
  opt.seed = g.seed;
  const std::vector<int> ids = only > 0 ? std::vector<int>{only} : verify::tier_criteria(tier);
  Report r;
  json arr = json::array();
  r.table.push_back({"criterion", "check", "status", "computed", "expected", "provenance", "note"});
  for (const int id : ids) {
    const auto res = verify::run_criterion(id, opt);
    arr.push_back(verify::to_json(res));
    if (res.status() == verify::Status::Fail) r.failed = true;
    r.text += std::to_string(id) + ". " + res.title + ": " + verify::status_name(res.status()) + "\n";
    for (const auto& c : res.checks) {
      r.table.push_back({std::to_string(id), c.name, verify::status_name(c.status), c.computed, c.expected, c.provenance, c.note});
      r.text += "   [" + verify::status_name(c.status) + "] " + c.name;
      if (!c.provenance.empty()) r.text += " [" + c.provenance + "]";
      r.text += ": " + c.computed;
      if (c.status != verify::Status::Pass) r.text += " (expected " + c.expected + ")";
      if (!c.note.empty()) r.text += "; " + c.note;
      r.text += "\n";
    }
  }
  r.result["tier"] = only > 0 ? "criterion " + std::to_string(only) : tier;
  r.result["criteria"] = arr;
  r.result["status"] = r.failed ? "fail" : "pass";
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (const char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

void emit(const Globals& g, const std::string& command, const Report& r, const std::string& status) {
  std::ostringstream os;
  if (g.format == "json") {
    json j{{"command", command}, {"status", status}, {"result", r.result}};
    os << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    for (const auto& row : r.table) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
      os << "\n";
    }
  } else {
    os << r.text;
  }
  if (g.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw FormatError("cannot write '" + g.out + "'");
    f << os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankalg: algebraic models of rankings on posets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--order", g.order, "Term order for groebner")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--cap", g.cap, "Reduction cap for Groebner computations");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--poset", g.poset, "boolean:n, antichain:n, chain:n or mixed:c,k");
  app.add_option("--poset-file", g.poset_file, "JSON poset file");
  app.add_option("-o,--out", g.out, "Write output to a file");

  std::string kind = "ascending", inner, outer, counts, qval, params, witness, poly, target, monomial, theta, dist, tier = "fast";
  int degree = 0, k = 2, trials = 10, criterion = 0;
  std::function<Report()> run;
  std::string command;

  auto* poset = app.add_subcommand("poset", "Poset utilities");
  poset->require_subcommand(1);
  poset->add_subcommand("check", "Summary of the poset")->callback([&] { command = "poset check"; run = [&] { return cmd_poset_check(g); }; });
  poset->add_subcommand("chains", "Maximal chains")->callback([&] { command = "poset chains"; run = [&] { return cmd_poset_chains(g); }; });

  auto* model = app.add_subcommand("model", "Toric ranking models");
  model->require_subcommand(1);
  const auto kinds = CLI::IsMember({"ascending", "csiszar", "birkhoff", "inversion", "alt-inversion", "alt_inversion"});
  auto add_kind = [&](CLI::App* s) { s->add_option("--kind", kind, "Model kind")->check(kinds); };
  auto* mm = model->add_subcommand("matrix", "Model matrix");
  add_kind(mm);
  mm->callback([&] { command = "model matrix"; run = [&] { return cmd_model_matrix(g, kind); }; });
  auto* md = model->add_subcommand("dim", "Polytope dimension");
  add_kind(md);
  md->callback([&] { command = "model dim"; run = [&] { return cmd_model_dim(g, kind); }; });
  auto* mh = model->add_subcommand("hdesc", "Linear description of the model polytope");
  mh->add_option("--kind", kind, "csiszar or ascending")->check(CLI::IsMember({"csiszar", "ascending"}));
  mh->callback([&] { command = "model hdesc"; run = [&] { return cmd_model_hdesc(g, kind); }; });
  auto* mk = model->add_subcommand("markov", "Minimal Markov basis");
  add_kind(mk);
  mk->callback([&] { command = "model markov"; run = [&] { return cmd_model_markov(g, kind); }; });
  auto* mg = model->add_subcommand("groebner", "Reduced Groebner basis of the toric ideal");
  add_kind(mg);
  mg->callback([&] { command = "model groebner"; run = [&] { return cmd_model_groebner(g, kind); }; });
  auto* mhs = model->add_subcommand("hilbert", "Hilbert series of the toric ring");
  add_kind(mhs);
  mhs->callback([&] { command = "model hilbert"; run = [&] { return cmd_model_hilbert(g, kind); }; });
  auto* mi = model->add_subcommand("inclusion", "Row-space inclusion of two models");
  mi->add_option("--inner", inner)->required()->check(kinds);
  mi->add_option("--outer", outer)->required()->check(kinds);
  mi->callback([&] { command = "model inclusion"; run = [&] { return cmd_model_inclusion(g, inner, outer); }; });
  auto* mle = model->add_subcommand("mle", "Closed-form Csiszar MLE");
  mle->add_option("--counts", counts, "JSON file chain label -> count")->required();
  mle->callback([&] { command = "model mle"; run = [&] { return cmd_model_mle(g, counts); }; });
  auto* mal = model->add_subcommand("mallows", "Mallows distribution");
  mal->add_option("--q", qval, "Dispersion, e.g. 1/2")->required();
  mal->callback([&] { command = "model mallows"; run = [&] { return cmd_model_mallows(g, qval); }; });
  auto* mev = model->add_subcommand("eval", "Evaluate a model at parameters");
  add_kind(mev);
  mev->add_option("--params", params, "name=value,...");
  mev->add_option("--witness", witness, "derangement or inversion")->check(CLI::IsMember({"derangement", "inversion"}));
  mev->add_option("--poly", poly, "Polynomial to evaluate at the distribution");
  mev->callback([&] { command = "model eval"; run = [&] { return cmd_model_eval(g, kind, params, witness, poly); }; });

  auto* toric = app.add_subcommand("toric", "Toric ideal utilities");
  toric->require_subcommand(1);
  auto* tf = toric->add_subcommand("fiber", "Monomials with a given image");
  add_kind(tf);
  tf->add_option("--target", target, "Comma-separated image vector");
  tf->add_option("--monomial", monomial, "Monomial whose fiber to list");
  tf->add_option("--degree", degree, "Degree (inferred by default)");
  tf->callback([&] { command = "toric fiber"; run = [&] { return cmd_toric_fiber(g, kind, target, monomial, degree); }; });

  auto* pl = app.add_subcommand("pl", "Plackett-Luce and Bradley-Terry");
  pl->require_subcommand(1);
  auto* pm = pl->add_subcommand("map", "Homogeneous PL map; probabilities with --theta");
  pm->add_option("--theta", theta, "Comma-separated positive rationals");
  pm->callback([&] { command = "pl map"; run = [&] { return cmd_pl_map(g, theta); }; });
  auto* pc = pl->add_subcommand("check", "Does a polynomial vanish under the PL map");
  pc->add_option("--poly", poly)->required();
  pc->callback([&] { command = "pl check"; run = [&] { return cmd_pl_check(g, poly); }; });
  auto* pmg = pl->add_subcommand("marginalize", "Complete marginalization of order k");
  pmg->add_option("--k", k)->check(CLI::Range(2, 12));
  pmg->add_option("--theta", theta, "PL parameters for the input distribution");
  pmg->add_option("--dist", dist, "JSON file word -> rational");
  pmg->callback([&] { command = "pl marginalize"; run = [&] { return cmd_pl_marginalize(g, k, theta, dist); }; });
  auto* pb = pl->add_subcommand("bt", "Bradley-Terry checks");
  pb->add_option("--trials", trials)->check(CLI::Range(1, 100000));
  pb->callback([&] { command = "pl bt"; run = [&] { return cmd_pl_bt(g, trials); }; });

  auto* ver = app.add_subcommand("verify", "Acceptance harness");
  ver->add_option("--tier", tier, "fast, full or stretch")->check(CLI::IsMember({"fast", "full", "stretch"}));
  ver->add_option("--criterion", criterion, "Run a single criterion")->check(CLI::Range(1, 14));
  ver->callback([&] { command = "verify"; run = [&] { return cmd_verify(g, tier, criterion); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  try {
    const Report r = run();
    emit(g, echo, r, r.failed ? "fail" : "ok");
    return r.failed ? 1 : 0;
  } catch (const CapExceeded& e) {
    Report r;
    r.result["error"] = e.what();
    r.text = std::string("resource cap reached: ") + e.what() + "\n";
    r.table = {{"error"}, {e.what()}};
    emit(g, echo, r, "cap");
    std::cerr << "rankalg: resource cap reached: " << e.what() << "\n";
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "rankalg: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "rankalg: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rankalg: " << e.what() << "\n";
    return 1;
  }
}
