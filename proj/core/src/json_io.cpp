#include "opbw/json_io.hpp"

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "opbw/error.hpp"

namespace opbw {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw Error(ErrorKind::ParseError, where + ": " + message);
}

const Json* opt_key(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string()) fail(where, std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long long need_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer()) fail(where, std::string("key \"") + key + "\" must be an integer");
  return v.get<long long>();
}

long long opt_int(const Json& j, const char* key, long long dflt, const std::string& where) {
  const Json* v = opt_key(j, key);
  if (!v) return dflt;
  if (!v->is_number_integer()) fail(where, std::string("key \"") + key + "\" must be an integer");
  return v->get<long long>();
}

bool opt_bool(const Json& j, const char* key, bool dflt, const std::string& where) {
  const Json* v = opt_key(j, key);
  if (!v) return dflt;
  if (!v->is_boolean()) fail(where, std::string("key \"") + key + "\" must be a boolean");
  return v->get<bool>();
}

const Json& need_array(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_array()) fail(where, std::string("key \"") + key + "\" must be an array");
  return v;
}

std::string at(const std::string& where, const char* key) {
  return where + "." + key;
}

std::string at(const std::string& where, const char* key, std::size_t index) {
  return where + "." + key + "[" + std::to_string(index) + "]";
}

Mat mat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
  Mat m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array())
      fail(where + "[" + std::to_string(r) + "]", "expected a row (array)");
    Vec v;
    for (std::size_t c = 0; c < row.size(); ++c)
      v.push_back(rat_from_json(
          row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    m.push_back(std::move(v));
  }
  return m;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (const Vec& v : m) {
    Json row = Json::array();
    for (const Rat& r : v) row.push_back(rat_to_json(r));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json dims_to_json(const std::vector<long long>& d) {
  Json a = Json::array();
  for (long long x : d) a.push_back(x);
  return a;
}

Json int_or_null(int value, int absent) {
  return value == absent ? Json(nullptr) : Json(value);
}

}  // namespace

// ---------------------------------------------------------------------------
// Generic plumbing
// ---------------------------------------------------------------------------

Json json_parse(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(where, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return json_parse(buf.str(), path);
}

std::string json_dump(const Json& j) {
  return j.dump(2) + "\n";
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  out << json_dump(j);
  if (!out) fail(path, "write failed");
}

// ---------------------------------------------------------------------------
// Rationals and Laurent polynomials
// ---------------------------------------------------------------------------

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) fail(where, "expected a rational as a string like \"-3/2\"");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

QPoly qpoly_from_string(const std::string& text, const std::string& where) {
  // Grammar of QPoly::text(): "0", or signed terms joined by " + " / " - ";
  // term = coeff | [coeff "*"] ("q" | "q^" int).
  std::string s = text;
  // Trim outer whitespace.
  const char* ws = " \t";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) fail(where, "empty Laurent polynomial");
  std::size_t e = s.find_last_not_of(ws);
  s = s.substr(b, e - b + 1);
  QPoly out;
  if (s == "0") return out;

  struct Term {
    int sign;
    std::string body;
  };
  std::vector<Term> parts;
  int sign = 1;
  std::size_t start = 0;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    start = 1;
  }
  std::size_t i = start;
  while (i < s.size()) {
    if (s.compare(i, 3, " + ") == 0) {
      parts.push_back({sign, s.substr(start, i - start)});
      sign = 1;
      i += 3;
      start = i;
    } else if (s.compare(i, 3, " - ") == 0) {
      parts.push_back({sign, s.substr(start, i - start)});
      sign = -1;
      i += 3;
      start = i;
    } else {
      ++i;
    }
  }
  parts.push_back({sign, s.substr(start)});

  for (const Term& t : parts) {
    if (t.body.empty()) fail(where, "empty term in \"" + text + "\"");
    std::string coeff_text;
    std::string q_text;
    std::size_t star = t.body.find('*');
    if (star != std::string::npos) {
      coeff_text = t.body.substr(0, star);
      q_text = t.body.substr(star + 1);
    } else if (t.body[0] == 'q') {
      coeff_text = "1";
      q_text = t.body;
    } else {
      coeff_text = t.body;
    }
    int exp = 0;
    if (!q_text.empty()) {
      if (q_text == "q") {
        exp = 1;
      } else if (q_text.compare(0, 2, "q^") == 0 && q_text.size() > 2) {
        try {
          std::size_t used = 0;
          exp = std::stoi(q_text.substr(2), &used);
          if (used != q_text.size() - 2) throw std::invalid_argument(q_text);
        } catch (const std::exception&) {
          fail(where, "bad q power \"" + q_text + "\" in \"" + text + "\"");
        }
      } else {
        fail(where, "bad q factor \"" + q_text + "\" in \"" + text + "\"");
      }
    }
    Rat c;
    try {
      c = rat_from_string(coeff_text);
    } catch (const Error&) {
      fail(where, "bad coefficient \"" + coeff_text + "\" in \"" + text + "\"");
    }
    out += QPoly::monomial(t.sign > 0 ? c : -c, exp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentations and orders
// ---------------------------------------------------------------------------

Json generators_to_json(const GeneratorSet& gens) {
  Json a = Json::array();
  for (int i = 0; i < gens.size(); ++i) {
    const Generator& g = gens[i];
    Json item;
    item["name"] = g.name;
    item["arity"] = g.arity;
    item["weight"] = g.weight;
    a.push_back(std::move(item));
  }
  return a;
}

GeneratorSet generators_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of generators");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string gw = where + "[" + std::to_string(i) + "]";
    Generator g;
    g.name = need_string(j[i], "name", gw);
    g.arity = static_cast<int>(opt_int(j[i], "arity", 2, gw));
    g.weight = static_cast<int>(opt_int(j[i], "weight", 1, gw));
    gens.push_back(std::move(g));
  }
  try {
    return GeneratorSet(std::move(gens));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json element_to_json(const Element& el) {
  Json a = Json::array();
  // Descending canonical text order: deterministic, independent of any
  // monomial order choice.
  for (auto it = el.terms.rbegin(); it != el.terms.rend(); ++it) {
    Json term;
    term["coeff"] = rat_to_json(it->second);
    term["tree"] = it->first.text();
    a.push_back(std::move(term));
  }
  return a;
}

Element element_from_json(const Json& j, const GeneratorSet& gens,
                          const std::string& where) {
  if (!j.is_array() || j.empty())
    fail(where, "expected a nonempty array of {coeff, tree} terms");
  Element el;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tw = where + "[" + std::to_string(i) + "]";
    Rat c = rat_from_json(need(j[i], "coeff", tw), at(tw, "coeff"));
    std::string text = need_string(j[i], "tree", tw);
    try {
      el.add(parse_tree(text, gens), c);
    } catch (const Error& e) {
      fail(tw, e.what());
    }
  }
  return el;
}

Json order_to_json(const MonomialOrder& ord) {
  Json j;
  j["kind"] = ord.kind == OrderKind::PathLex ? "pathlex" : "path-opp-deglex";
  Json names = Json::array();
  for (const std::string& n : ord.generator_order) names.push_back(n);
  j["generator_order"] = std::move(names);
  j["longer_prefix_wins"] = ord.longer_prefix_wins;
  return j;
}

MonomialOrder order_from_json(const Json& j, const std::string& where) {
  MonomialOrder ord;
  std::string kind = need_string(j, "kind", where);
  if (kind == "pathlex") {
    ord.kind = OrderKind::PathLex;
  } else if (kind == "path-opp-deglex") {
    ord.kind = OrderKind::PathOppositeDegLex;
  } else {
    fail(at(where, "kind"),
         "unknown order \"" + kind + "\" (expected pathlex or path-opp-deglex)");
  }
  if (const Json* names = opt_key(j, "generator_order")) {
    if (!names->is_array()) fail(at(where, "generator_order"), "expected an array of names");
    for (std::size_t i = 0; i < names->size(); ++i) {
      if (!(*names)[i].is_string())
        fail(at(where, "generator_order", i), "expected a generator name");
      ord.generator_order.push_back((*names)[i].get<std::string>());
    }
  }
  ord.longer_prefix_wins = opt_bool(j, "longer_prefix_wins", true, where);
  return ord;
}

Json symmetric_to_json(const SymmetricPresentation& sp) {
  Json j;
  Json names = Json::array();
  for (const std::string& n : sp.gen_names) names.push_back(n);
  j["gen_names"] = std::move(names);
  j["transposition"] = mat_to_json(sp.transposition);
  Json rels = Json::array();
  for (const SymmetricRelation& r : sp.relations) {
    Json rel;
    rel["a"] = mat_to_json(r.a);
    rel["b"] = mat_to_json(r.b);
    rel["c"] = mat_to_json(r.c);
    rels.push_back(std::move(rel));
  }
  j["relations"] = std::move(rels);
  return j;
}

SymmetricPresentation symmetric_from_json(const Json& j, const std::string& where) {
  SymmetricPresentation sp;
  const Json& names = need_array(j, "gen_names", where);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].is_string()) fail(at(where, "gen_names", i), "expected a name");
    sp.gen_names.push_back(names[i].get<std::string>());
  }
  sp.transposition = mat_from_json(need(j, "transposition", where), at(where, "transposition"));
  const Json& rels = need_array(j, "relations", where);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string rw = at(where, "relations", i);
    SymmetricRelation r;
    r.a = mat_from_json(need(rels[i], "a", rw), rw + ".a");
    r.b = mat_from_json(need(rels[i], "b", rw), rw + ".b");
    r.c = mat_from_json(need(rels[i], "c", rw), rw + ".c");
    sp.relations.push_back(std::move(r));
  }
  try {
    validate_symmetric(sp);
  } catch (const Error& e) {
    fail(where, e.what());
  }
  return sp;
}

Json presentation_file_to_json(const PresentationFile& pf) {
  Json j;
  if (pf.symmetric) {
    j["symmetric"] = symmetric_to_json(*pf.symmetric);
  } else {
    j["generators"] = generators_to_json(pf.shuffle.gens);
    Json rels = Json::array();
    for (const Element& r : pf.shuffle.relations) rels.push_back(element_to_json(r));
    j["relations"] = std::move(rels);
  }
  if (pf.order) j["order"] = order_to_json(*pf.order);
  return j;
}

PresentationFile presentation_file_from_json(const Json& j, const std::string& where) {
  PresentationFile pf;
  if (const Json* symj = opt_key(j, "symmetric")) {
    if (opt_key(j, "relations"))
      fail(where, "\"symmetric\" and \"relations\" are mutually exclusive");
    if (opt_key(j, "generators"))
      fail(where, "\"symmetric\" and \"generators\" are mutually exclusive"
                  " (generators are the symmetric gen_names)");
    pf.symmetric = symmetric_from_json(*symj, at(where, "symmetric"));
    pf.shuffle = shuffle_expand(*pf.symmetric);
  } else {
    GeneratorSet gens =
        generators_from_json(need(j, "generators", where), at(where, "generators"));
    std::vector<Element> relations;
    if (const Json* relj = opt_key(j, "relations")) {
      if (!relj->is_array()) fail(at(where, "relations"), "expected an array");
      for (std::size_t i = 0; i < relj->size(); ++i)
        relations.push_back(
            element_from_json((*relj)[i], gens, at(where, "relations", i)));
    }
    pf.shuffle = Presentation{std::move(gens), std::move(relations)};
  }
  if (const Json* oj = opt_key(j, "order"))
    pf.order = order_from_json(*oj, at(where, "order"));
  return pf;
}

PresentationFile load_presentation(const std::string& path) {
  return presentation_file_from_json(load_json_file(path), path);
}

// ---------------------------------------------------------------------------
// Groebner bases
// ---------------------------------------------------------------------------

Json basis_to_json(const GroebnerBasis& gb) {
  Json j;
  j["generators"] = generators_to_json(gb.gens);
  j["order"] = order_to_json(gb.order);
  j["certified_arity"] = gb.certified_arity;
  j["certified"] = gb.certified;
  Json els = Json::array();
  for (const Element& el : gb.elements) els.push_back(element_to_json(el));
  j["elements"] = std::move(els);
  return j;
}

GroebnerBasis basis_from_json(const Json& j, const std::string& where) {
  GroebnerBasis gb;
  gb.gens = generators_from_json(need(j, "generators", where), at(where, "generators"));
  gb.order = order_from_json(need(j, "order", where), at(where, "order"));
  gb.certified_arity = static_cast<int>(need_int(j, "certified_arity", where));
  gb.certified = opt_bool(j, "certified", true, where);
  const Json& els = need_array(j, "elements", where);
  for (std::size_t i = 0; i < els.size(); ++i)
    gb.elements.push_back(element_from_json(els[i], gb.gens, at(where, "elements", i)));
  return gb;
}

GroebnerBasis load_basis(const std::string& path) {
  return basis_from_json(load_json_file(path), path);
}

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

Json algebra_to_json(const AlgebraData& V, const std::vector<std::string>& gen_names) {
  Json j;
  j["dim"] = V.dim;
  Json basis = Json::array();
  for (const std::string& b : V.basis) basis.push_back(b);
  j["basis"] = std::move(basis);
  Json ops = Json::array();
  for (std::size_t i = 0; i < gen_names.size(); ++i) {
    Json op;
    op["gen"] = gen_names[i];
    Json table = Json::array();
    for (int x = 0; x < V.dim; ++x) {
      Json row = Json::array();
      for (int y = 0; y < V.dim; ++y) {
        Json cell = Json::array();
        for (const Rat& r : V.structure[i][x][y]) cell.push_back(rat_to_json(r));
        row.push_back(std::move(cell));
      }
      table.push_back(std::move(row));
    }
    op["table"] = std::move(table);
    ops.push_back(std::move(op));
  }
  j["ops"] = std::move(ops);
  return j;
}

AlgebraData algebra_from_json(const Json& j, const std::vector<std::string>& gen_names,
                              const std::string& where) {
  AlgebraData V;
  V.dim = static_cast<int>(need_int(j, "dim", where));
  if (V.dim < 0) fail(at(where, "dim"), "dimension must be nonnegative");
  const Json& basis = need_array(j, "basis", where);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) fail(at(where, "basis", i), "expected a name");
    V.basis.push_back(basis[i].get<std::string>());
  }
  if (static_cast<int>(V.basis.size()) != V.dim)
    fail(at(where, "basis"), "basis size does not match dim");
  V.structure.assign(
      gen_names.size(),
      std::vector<std::vector<Vec>>(V.dim, std::vector<Vec>(V.dim, Vec(V.dim, Rat(0)))));
  std::set<std::string> seen;
  if (const Json* ops = opt_key(j, "ops")) {
    if (!ops->is_array()) fail(at(where, "ops"), "expected an array");
    for (std::size_t o = 0; o < ops->size(); ++o) {
      const std::string ow = at(where, "ops", o);
      std::string gen = need_string((*ops)[o], "gen", ow);
      if (!seen.insert(gen).second) fail(ow, "duplicate op \"" + gen + "\"");
      std::size_t gi = 0;
      while (gi < gen_names.size() && gen_names[gi] != gen) ++gi;
      if (gi == gen_names.size())
        fail(ow, "op \"" + gen + "\" is not a generator of the presentation");
      const Json& table = need_array((*ops)[o], "table", ow);
      if (static_cast<int>(table.size()) != V.dim)
        fail(ow + ".table", "expected dim rows");
      for (int x = 0; x < V.dim; ++x) {
        if (!table[x].is_array() || static_cast<int>(table[x].size()) != V.dim)
          fail(ow + ".table[" + std::to_string(x) + "]", "expected dim columns");
        for (int y = 0; y < V.dim; ++y) {
          const Json& cell = table[x][y];
          const std::string cw =
              ow + ".table[" + std::to_string(x) + "][" + std::to_string(y) + "]";
          if (!cell.is_array() || static_cast<int>(cell.size()) != V.dim)
            fail(cw, "expected a coordinate vector of length dim");
          for (int c = 0; c < V.dim; ++c)
            V.structure[gi][x][y][c] =
                rat_from_json(cell[c], cw + "[" + std::to_string(c) + "]");
        }
      }
    }
  }
  return V;
}

AlgebraData load_algebra(const std::string& path,
                         const std::vector<std::string>& gen_names) {
  return algebra_from_json(load_json_file(path), gen_names, path);
}

// ---------------------------------------------------------------------------
// Series and symmetric functions
// ---------------------------------------------------------------------------

Json series_to_json(const PowerSeries& f) {
  Json j;
  j["truncation"] = f.trunc;
  Json coeffs = Json::array();
  for (int n = 0; n <= f.trunc; ++n) {
    const QPoly& qp = f.c[n];
    Json item;
    item["degree"] = n;
    item["value"] = rat_to_json(qp.is_rational() ? qp.rational_value() : qp.coeff(0));
    if (!qp.is_rational()) item["q_poly"] = qp.text();
    coeffs.push_back(std::move(item));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

PowerSeries series_from_json(const Json& j, const std::string& where) {
  int trunc = static_cast<int>(need_int(j, "truncation", where));
  if (trunc < 0) fail(at(where, "truncation"), "truncation must be nonnegative");
  PowerSeries f = PowerSeries::zero(trunc);
  const Json& coeffs = need_array(j, "coeffs", where);
  std::set<int> seen;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string cw = at(where, "coeffs", i);
    int degree = static_cast<int>(need_int(coeffs[i], "degree", cw));
    if (degree < 0 || degree > trunc) fail(cw, "degree out of range");
    if (!seen.insert(degree).second) fail(cw, "duplicate degree");
    if (const Json* qp = opt_key(coeffs[i], "q_poly")) {
      if (!qp->is_string()) fail(at(cw, "q_poly"), "expected a string");
      f.c[degree] = qpoly_from_string(qp->get<std::string>(), at(cw, "q_poly"));
    } else {
      f.c[degree] = QPoly(rat_from_json(need(coeffs[i], "value", cw), at(cw, "value")));
    }
  }
  return f;
}

Json sym_to_json(const SymFun& f) {
  Json j;
  j["truncation"] = f.trunc;
  Json coeffs = Json::array();
  for (int n = 0; n <= f.trunc; ++n) {
    for (const Partition& p : partitions_of(n)) {
      auto it = f.c.find(p);
      if (it == f.c.end()) continue;
      Json item;
      Json part = Json::array();
      for (int x : p) part.push_back(x);
      item["partition"] = std::move(part);
      item["value"] = rat_to_json(it->second);
      coeffs.push_back(std::move(item));
    }
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

SymFun sym_from_json(const Json& j, const std::string& where) {
  int trunc = static_cast<int>(need_int(j, "truncation", where));
  if (trunc < 0) fail(at(where, "truncation"), "truncation must be nonnegative");
  SymFun f = SymFun::zero(trunc);
  const Json& coeffs = need_array(j, "coeffs", where);
  std::set<Partition> seen;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string cw = at(where, "coeffs", i);
    const Json& pj = need_array(coeffs[i], "partition", cw);
    Partition p;
    int weight = 0;
    for (std::size_t k = 0; k < pj.size(); ++k) {
      if (!pj[k].is_number_integer() || pj[k].get<long long>() <= 0)
        fail(at(cw, "partition", k), "parts must be positive integers");
      int part = pj[k].get<int>();
      if (!p.empty() && part > p.back())
        fail(at(cw, "partition"), "parts must be nonincreasing");
      p.push_back(part);
      weight += part;
    }
    if (weight > trunc) fail(at(cw, "partition"), "partition weight exceeds truncation");
    if (!seen.insert(p).second) fail(cw, "duplicate partition");
    f.add(p, rat_from_json(need(coeffs[i], "value", cw), at(cw, "value")));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

Json dim_report_to_json(const DimReport& r) {
  Json j;
  j["verdict"] = r.match ? "MatchUpTo(" + std::to_string(r.checked_to) + ")"
                         : "MismatchAt(" + std::to_string(r.mismatch_at) + ")";
  j["checked_to"] = r.checked_to;
  j["match"] = r.match;
  j["mismatch_at"] = int_or_null(r.mismatch_at, -1);
  j["filtered"] = dims_to_json(r.filtered);
  j["graded"] = dims_to_json(r.graded);
  j["reference"] = dims_to_json(r.reference);
  return j;
}

Json numeric_check_to_json(const NumericCheck& c) {
  Json j;
  j["consistent"] = c.consistent;
  j["checked_to"] = c.checked_to;
  j["fails_at"] = int_or_null(c.fails_at, -1);
  Json u = Json::array();
  for (const Rat& r : c.solved_u) u.push_back(rat_to_json(r));
  j["solved_u"] = std::move(u);
  j["detail"] = c.detail;
  return j;
}

Json pbw_verdict_to_json(const PbwVerdict& v) {
  Json j;
  j["verdict"] = verdict_string(v);
  j["sufficient"] =
      v.sufficient == SufficientVerdict::Yes ? "left-comb" : "not-applicable";
  j["numeric"] = numeric_check_to_json(v.numeric);
  j["p_dims"] = dims_to_json(v.p_dims);
  j["u0_counts"] = dims_to_json(v.u0_counts);
  Json n = Json::array();
  for (const std::string& line : v.narrative) n.push_back(line);
  j["narrative"] = std::move(n);
  return j;
}

Json series_report_to_json(const SeriesReport& r) {
  Json j;
  if (r.series) j["series"] = series_to_json(*r.series);
  if (r.sym) j["sym"] = sym_to_json(*r.sym);
  j["nonnegative"] = r.nonnegative;
  j["schur_positive"] = r.schur_positive ? Json(*r.schur_positive) : Json(nullptr);
  j["violation_degree"] =
      r.violation_degree ? Json(*r.violation_degree) : Json(nullptr);
  if (r.violation_partition) {
    Json p = Json::array();
    for (int x : *r.violation_partition) p.push_back(x);
    j["violation_partition"] = std::move(p);
  } else {
    j["violation_partition"] = Json(nullptr);
  }
  j["violation_value"] = r.violation_value;
  return j;
}

}  // namespace opbw
