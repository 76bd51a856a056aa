/**
 * opbw — command-line front end for the operadic PBW toolkit.
 *
 * Commands:
 *   gb PRES          truncated Groebner completion: elements + per-arity dims
 *   verify BASIS     re-check a basis file (all S-elements reduce to zero)
 *   dims PRES        per-arity normal monomial counts of the presented operad
 *   pbw PRES         consolidated PBW verdict (left-comb + numeric routes)
 *   dual PRES        quadratic dual presentation and its completion dims
 *   series necessary --dual NAME    EGF necessary condition for PBW
 *   series character --dual NAME    character (Schur-positivity) version
 *   uea compare PRES ALG --depth N  enveloping-algebra dimension comparison
 *
 * Exit codes: 0 success / PBW proven, 1 invalid input (parse errors carry
 * location diagnostics), 2 uncertified completion, 3 refuted, 4 inconclusive.
 * Output is deterministic for fixed input and flags; json mode is byte-stable.
 */

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opbw/dual.hpp"
#include "opbw/error.hpp"
#include "opbw/groebner.hpp"
#include "opbw/json_io.hpp"
#include "opbw/pbw.hpp"
#include "opbw/series.hpp"
#include "opbw/trees.hpp"
#include "opbw/uea.hpp"

namespace {

using namespace opbw;

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kUncertified = 2;
constexpr int kRefuted = 3;
constexpr int kInconclusive = 4;

struct Opts {
  std::string order_kind;  // empty = keep the file's (or default) order
  std::string gen_order;   // comma separated, greatest first
  int max_arity = 5;
  int trunc = 6;
  std::string format = "text";
  std::string out;
  double budget_seconds = 600.0;
};

void add_order_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("--order", o.order_kind,
                  "monomial order: pathlex | path-opp-deglex")
      ->check(CLI::IsMember({"pathlex", "path-opp-deglex"}));
  cmd->add_option("--gen-order", o.gen_order,
                  "generator priority, greatest first, comma separated");
}

void add_output_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("--format", o.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "also write the JSON artifact to this path");
}

void add_completion_flags(CLI::App* cmd, Opts& o) {
  add_order_flags(cmd, o);
  cmd->add_option("--max-arity", o.max_arity, "certification bound (default 5)");
  cmd->add_option("--budget-seconds", o.budget_seconds,
                  "completion wall-clock budget (default 600)");
  add_output_flags(cmd, o);
}

MonomialOrder resolve_order(const std::optional<MonomialOrder>& file_order,
                            const Opts& o) {
  MonomialOrder ord = file_order.value_or(MonomialOrder{});
  if (o.order_kind == "pathlex") ord.kind = OrderKind::PathLex;
  if (o.order_kind == "path-opp-deglex") ord.kind = OrderKind::PathOppositeDegLex;
  if (!o.gen_order.empty()) {
    ord.generator_order.clear();
    std::stringstream ss(o.gen_order);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) ord.generator_order.push_back(item);
  }
  return ord;
}

std::string order_text(const MonomialOrder& ord) {
  std::string s = ord.kind == OrderKind::PathLex ? "pathlex" : "path-opp-deglex";
  if (!ord.generator_order.empty()) {
    s += " (generators ";
    for (std::size_t i = 0; i < ord.generator_order.size(); ++i) {
      if (i) s += " > ";
      s += ord.generator_order[i];
    }
    s += ")";
  }
  return s;
}

std::string dims_text(const std::vector<long long>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

std::string element_text(const Element& el) {
  if (el.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = el.terms.rbegin(); it != el.terms.rend(); ++it) {
    Rat c = it->second;
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != Rat(1)) s += rat_to_string(mag) + "*";
    s += it->first.text();
  }
  return s;
}

void emit(const Opts& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << json_dump(j);
  else
    std::cout << text;
  if (!o.out.empty()) save_json_file(o.out, j);
}

// ---------------------------------------------------------------------------
// gb / verify / dims
// ---------------------------------------------------------------------------

int cmd_gb(const std::string& path, const Opts& o) {
  PresentationFile pf = load_presentation(path);
  MonomialOrder ord = resolve_order(pf.order, o);
  CompletionOptions copts;
  copts.max_arity = o.max_arity;
  copts.budget_seconds = o.budget_seconds;
  GroebnerBasis gb = complete(pf.shuffle, ord, copts);
  std::vector<long long> dims = normal_monomial_counts(gb, gb.certified_arity);

  Json j = basis_to_json(gb);
  j["dims"] = Json(dims);

  std::ostringstream t;
  t << "input: " << path << "\n";
  t << "order: " << order_text(ord) << "\n";
  t << "elements: " << gb.elements.size() << "\n";
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    t << "  [" << i + 1 << "] " << element_text(gb.elements[i]) << "\n";
  t << "certified: " << (gb.certified ? "yes" : "no (budget exhausted)") << "\n";
  t << "certified_arity: " << gb.certified_arity << "\n";
  t << "normal monomials by arity (1.." << gb.certified_arity
    << "): " << dims_text(dims) << "\n";
  emit(o, j, t.str());
  return gb.certified ? kOk : kUncertified;
}

int cmd_verify(const std::string& path, const Opts& o) {
  GroebnerBasis gb = load_basis(path);
  const int bound = std::min(o.max_arity, gb.certified_arity);
  const bool ok = verify(gb, bound);
  std::vector<long long> dims = normal_monomial_counts(gb, bound);

  Json j;
  j["input"] = path;
  j["elements"] = static_cast<int>(gb.elements.size());
  j["checked_arity"] = bound;
  j["verified"] = ok;
  j["dims"] = Json(dims);

  std::ostringstream t;
  t << "basis: " << path << "\n";
  t << "order: " << order_text(gb.order) << "\n";
  t << "elements: " << gb.elements.size() << "\n";
  t << "checked arity: <= " << bound << "\n";
  t << "all S-elements reduce to zero: " << (ok ? "yes" : "NO") << "\n";
  if (ok) t << "certified_arity: " << bound << "\n";
  t << "normal monomials by arity (1.." << bound << "): " << dims_text(dims)
    << "\n";
  emit(o, j, t.str());
  return ok ? kOk : kUncertified;
}

int cmd_dims(const std::string& path, const Opts& o) {
  PresentationFile pf = load_presentation(path);
  MonomialOrder ord = resolve_order(pf.order, o);
  CompletionOptions copts;
  copts.max_arity = o.max_arity;
  copts.budget_seconds = o.budget_seconds;
  GroebnerBasis gb = complete(pf.shuffle, ord, copts);
  std::vector<long long> dims = normal_monomial_counts(gb, gb.certified_arity);

  Json j;
  j["input"] = path;
  j["order"] = order_to_json(ord);
  j["certified"] = gb.certified;
  j["certified_arity"] = gb.certified_arity;
  j["dims"] = Json(dims);

  std::ostringstream t;
  t << "input: " << path << "\n";
  t << "order: " << order_text(ord) << "\n";
  t << "certified: " << (gb.certified ? "yes" : "no (budget exhausted)") << "\n";
  t << "certified_arity: " << gb.certified_arity << "\n";
  t << "normal monomials by arity (1.." << gb.certified_arity
    << "): " << dims_text(dims) << "\n";
  emit(o, j, t.str());
  return gb.certified ? kOk : kUncertified;
}

// ---------------------------------------------------------------------------
// pbw
// ---------------------------------------------------------------------------

int cmd_pbw(const std::string& path, const Opts& o) {
  PresentationFile pf = load_presentation(path);
  MonomialOrder ord = resolve_order(pf.order, o);
  CompletionOptions copts;
  copts.max_arity = o.max_arity + 1;  // the numeric route needs one extra arity
  copts.budget_seconds = o.budget_seconds;
  GroebnerBasis gb = complete(pf.shuffle, ord, copts);
  if (!gb.certified) {
    std::cout << "completion uncertified (budget exhausted at arity "
              << gb.certified_arity << "); no verdict\n";
    return kUncertified;
  }
  DerivedPresentation dp = derivative_presentation(pf.shuffle);
  PbwVerdict v = pbw_verdict(gb, dp, o.max_arity);

  Json j = pbw_verdict_to_json(v);

  std::ostringstream t;
  t << "input: " << path << "\n";
  t << "order: " << order_text(ord) << "\n";
  t << "operad dims by arity (1.." << o.max_arity + 1
    << "): " << dims_text(v.p_dims) << "\n";
  t << "normal spine monomials by degree (0.." << o.max_arity
    << "): " << dims_text(v.u0_counts) << "\n";
  for (const std::string& line : v.narrative) t << "  - " << line << "\n";
  if (!v.numeric.solved_u.empty()) {
    t << "solved u0 dims: [";
    for (std::size_t i = 0; i < v.numeric.solved_u.size(); ++i) {
      if (i) t << ", ";
      t << rat_to_string(v.numeric.solved_u[i]);
    }
    t << "]\n";
  }
  t << "verdict: " << verdict_string(v) << "\n";
  emit(o, j, t.str());

  const std::string verdict = verdict_string(v);
  if (verdict == "proven") return kOk;
  if (verdict == "refuted") return kRefuted;
  return kInconclusive;
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

int cmd_dual(const std::string& path, const Opts& o) {
  PresentationFile pf = load_presentation(path);
  Presentation dual = quadratic_dual(pf.shuffle);
  MonomialOrder ord = resolve_order(std::nullopt, o);
  CompletionOptions copts;
  copts.max_arity = o.max_arity;
  copts.budget_seconds = o.budget_seconds;
  GroebnerBasis gb = complete(dual, ord, copts);
  std::vector<long long> dims = normal_monomial_counts(gb, gb.certified_arity);

  PresentationFile out;
  out.shuffle = dual;
  Json j = presentation_file_to_json(out);
  j["certified"] = gb.certified;
  j["certified_arity"] = gb.certified_arity;
  j["dims"] = Json(dims);

  std::ostringstream t;
  t << "input: " << path << "\n";
  t << "dual generators:";
  for (int i = 0; i < dual.gens.size(); ++i) t << " " << dual.gens[i].name;
  t << "\n";
  t << "dual relations: " << dual.relations.size() << "\n";
  for (std::size_t i = 0; i < dual.relations.size(); ++i)
    t << "  [" << i + 1 << "] " << element_text(dual.relations[i]) << "\n";
  t << "completion of the dual under " << order_text(ord) << ":\n";
  t << "certified: " << (gb.certified ? "yes" : "no (budget exhausted)") << "\n";
  t << "certified_arity: " << gb.certified_arity << "\n";
  t << "dual dims by arity (1.." << gb.certified_arity
    << "): " << dims_text(dims) << "\n";
  emit(o, j, t.str());
  return gb.certified ? kOk : kUncertified;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

PowerSeries named_series(const std::string& name, int trunc) {
  if (name == "t") return ps_t(trunc);
  if (name == "exp") return ps_exp(trunc);
  if (name == "log") return ps_log(trunc);
  if (name == "geometric") return ps_geometric(trunc);
  if (name == "com") return ps_com(trunc);
  if (name == "lie") return ps_lie(trunc);
  if (name == "as") return ps_as(trunc);
  if (name == "pois") return ps_pois(trunc);
  if (name == "lie2_dual") return ps_lie2_dual(trunc);
  throw Error(ErrorKind::ParseError,
              "unknown series \"" + name +
                  "\" (expected one of: t, exp, log, geometric, com, lie, as, "
                  "pois, lie2_dual)");
}

SymFun named_character(const std::string& name, int trunc) {
  if (name == "com") return chi_com(trunc);
  if (name == "lie") return chi_lie(trunc);
  if (name == "lie2_dual") return chi_lie2_dual(trunc);
  throw Error(ErrorKind::ParseError,
              "unknown character \"" + name +
                  "\" (expected one of: com, lie, lie2_dual)");
}

std::string partition_text(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

int series_exit(const SeriesReport& rep) {
  const bool ok = rep.nonnegative && rep.schur_positive.value_or(true);
  return ok ? kOk : kRefuted;
}

int cmd_series_necessary(const std::string& dual_name,
                         const std::string& dual_file, const Opts& o) {
  PowerSeries f = dual_file.empty()
                      ? named_series(dual_name, o.trunc)
                      : series_from_json(load_json_file(dual_file), dual_file);
  SeriesReport rep = necessary_condition_egf(f);

  Json j = series_report_to_json(rep);

  std::ostringstream t;
  t << "dual series: "
    << (dual_file.empty() ? dual_name : dual_file) << ", truncation " << f.trunc
    << "\n";
  t << "u0 egf (exact to degree " << rep.series->trunc << "):\n";
  for (int n = 0; n <= rep.series->trunc; ++n)
    t << "  t^" << n << ": " << rep.series->coeff(n).text() << "\n";
  t << "nonnegative: " << (rep.nonnegative ? "yes" : "NO") << "\n";
  if (rep.violation_degree)
    t << "violation at degree " << *rep.violation_degree << ": "
      << rep.violation_value << "\n";
  t << "verdict: "
    << (rep.nonnegative ? "consistent (necessary condition holds)" : "refuted")
    << "\n";
  emit(o, j, t.str());
  return series_exit(rep);
}

int cmd_series_character(const std::string& dual_name, const Opts& o) {
  SymFun chi = named_character(dual_name, o.trunc);
  SeriesReport rep = necessary_condition_sym(chi, o.trunc - 1);

  Json j = series_report_to_json(rep);

  std::ostringstream t;
  t << "dual character: " << dual_name << ", truncation " << o.trunc << "\n";
  t << "u0 character (power-sum basis, exact to degree " << rep.sym->trunc
    << "):\n";
  for (int n = 0; n <= rep.sym->trunc; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto it = rep.sym->c.find(p);
      if (it == rep.sym->c.end()) continue;
      t << "  p" << partition_text(p) << ": " << rat_to_string(it->second)
        << "\n";
    }
  t << "egf nonnegative: " << (rep.nonnegative ? "yes" : "NO") << "\n";
  if (rep.schur_positive)
    t << "schur positive (degrees <= " << o.trunc - 1
      << "): " << (*rep.schur_positive ? "yes" : "NO") << "\n";
  if (rep.violation_degree) {
    t << "violation at degree " << *rep.violation_degree;
    if (rep.violation_partition)
      t << ", partition " << partition_text(*rep.violation_partition);
    t << ": " << rep.violation_value << "\n";
  }
  const bool ok = rep.nonnegative && rep.schur_positive.value_or(true);
  t << "verdict: " << (ok ? "consistent (necessary condition holds)" : "refuted")
    << "\n";
  emit(o, j, t.str());
  return series_exit(rep);
}

// ---------------------------------------------------------------------------
// uea
// ---------------------------------------------------------------------------

int cmd_uea_compare(const std::string& pres_path, const std::string& alg_path,
                    int depth, const Opts& o) {
  PresentationFile pf = load_presentation(pres_path);
  if (!pf.symmetric)
    throw Error(ErrorKind::ParseError,
                pres_path +
                    ": uea compare needs the symmetric block of a binary "
                    "presentation (shuffle relations alone do not determine "
                    "the enveloping algebra)");
  const SymmetricPresentation& sp = *pf.symmetric;
  AlgebraData V = load_algebra(alg_path, sp.gen_names);
  validate_algebra_shapes(sp, V);
  if (!algebra_satisfies_relations(sp, V))
    throw Error(ErrorKind::ParseError,
                alg_path + ": the algebra does not satisfy the presented "
                           "relations (structure constants violate a relation "
                           "on some basis triple)");
  DimReport rep = pbw_compare(sp, V, depth);

  Json j = dim_report_to_json(rep);

  std::ostringstream t;
  t << "presentation: " << pres_path << "\n";
  t << "algebra: " << alg_path << " (dim " << V.dim << ")\n";
  t << "depth: " << depth << " (checked to " << rep.checked_to << ")\n";
  t << "filtered dims of U_P(V):  " << dims_text(rep.filtered) << "\n";
  t << "graded dims of U_P(V):    " << dims_text(rep.graded) << "\n";
  t << "filtered dims of U_P(V0): " << dims_text(rep.reference) << "\n";
  t << "verdict: "
    << (rep.match ? "MatchUpTo(" + std::to_string(rep.checked_to) + ")"
                  : "MismatchAt(" + std::to_string(rep.mismatch_at) + ")")
    << "\n";
  if (!rep.match)
    t << "a dimension mismatch refutes the PBW property of the enveloping "
         "functor\n";
  emit(o, j, t.str());
  return rep.match ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "opbw: Groebner bases, Koszul duals, generating series and enveloping "
      "algebras for operads presented by generators and relations"};
  app.require_subcommand(1);
  Opts o;

  std::string pres_path, basis_path, alg_path;
  std::string dual_name, dual_file;
  int depth = 3;

  CLI::App* gb = app.add_subcommand("gb", "truncated Groebner completion");
  gb->add_option("presentation", pres_path, "presentation JSON file")->required();
  add_completion_flags(gb, o);

  CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a basis file");
  verify_cmd->add_option("basis", basis_path, "basis JSON file")->required();
  verify_cmd->add_option("--max-arity", o.max_arity, "check bound (default 5)");
  add_output_flags(verify_cmd, o);

  CLI::App* dims = app.add_subcommand("dims", "per-arity operad dimensions");
  dims->add_option("presentation", pres_path, "presentation JSON file")->required();
  add_completion_flags(dims, o);

  CLI::App* pbw = app.add_subcommand("pbw", "combined PBW verdict");
  pbw->add_option("presentation", pres_path, "presentation JSON file")->required();
  add_completion_flags(pbw, o);

  CLI::App* dual = app.add_subcommand("dual", "quadratic dual presentation");
  dual->add_option("presentation", pres_path, "presentation JSON file")->required();
  add_completion_flags(dual, o);

  CLI::App* series = app.add_subcommand("series", "generating-series tests");
  series->require_subcommand(1);
  CLI::App* nec = series->add_subcommand(
      "necessary", "EGF necessary condition from the dual's series");
  nec->add_option("--dual", dual_name,
                  "named dual series: t, exp, log, geometric, com, lie, as, "
                  "pois, lie2_dual");
  nec->add_option("--dual-file", dual_file, "dual series as a JSON file");
  nec->add_option("--trunc", o.trunc, "truncation degree (default 6)");
  add_output_flags(nec, o);
  CLI::App* chr = series->add_subcommand(
      "character", "character necessary condition (Schur positivity)");
  chr->add_option("--dual", dual_name, "named dual character: com, lie, lie2_dual")
      ->required();
  chr->add_option("--trunc", o.trunc, "truncation degree (default 6)");
  add_output_flags(chr, o);

  CLI::App* uea = app.add_subcommand("uea", "enveloping-algebra commands");
  uea->require_subcommand(1);
  CLI::App* cmp = uea->add_subcommand(
      "compare", "graded dims of U_P(V) against U_P(V0)");
  cmp->add_option("presentation", pres_path, "presentation JSON file")->required();
  cmp->add_option("algebra", alg_path, "algebra JSON file")->required();
  cmp->add_option("--depth", depth, "filtration depth to compare (default 3)");
  add_output_flags(cmp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (gb->parsed()) return cmd_gb(pres_path, o);
    if (verify_cmd->parsed()) return cmd_verify(basis_path, o);
    if (dims->parsed()) return cmd_dims(pres_path, o);
    if (pbw->parsed()) return cmd_pbw(pres_path, o);
    if (dual->parsed()) return cmd_dual(pres_path, o);
    if (series->parsed()) {
      if (nec->parsed()) {
        if (dual_name.empty() && dual_file.empty())
          throw Error(ErrorKind::ParseError,
                      "series necessary: provide --dual NAME or --dual-file PATH");
        return cmd_series_necessary(dual_name, dual_file, o);
      }
      return cmd_series_character(dual_name, o);
    }
    if (uea->parsed()) return cmd_uea_compare(pres_path, alg_path, depth, o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Uncertified:
        return kUncertified;
      default:
        return kInvalidInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
