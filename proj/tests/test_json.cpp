#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

/**
 * JSON serialization tests.
 *
 * Everything the tools write must load back to the identical value
 * (presentations, bases, algebras, series, symmetric functions), and the
 * bundled data/ files must agree bit for bit with the in-code sample
 * presentations the unit suites are pinned to.  A few emissions are frozen as
 * golden byte strings because the CLI promises byte-stable json output.
 */

#include <string>
#include <vector>

#include "opbw/dual.hpp"
#include "opbw/error.hpp"
#include "opbw/groebner.hpp"
#include "opbw/json_io.hpp"
#include "opbw/pbw.hpp"
#include "opbw/series.hpp"
#include "opbw/uea.hpp"
#include "operad_samples.hpp"

using namespace opbw;

namespace {

const std::string kData = OPBW_DATA_DIR;

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.gens.size() != b.gens.size()) return false;
  for (int i = 0; i < a.gens.size(); ++i) {
    if (a.gens[i].name != b.gens[i].name) return false;
    if (a.gens[i].arity != b.gens[i].arity) return false;
    if (a.gens[i].weight != b.gens[i].weight) return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (!samples::same_element(a.relations[i], b.relations[i])) return false;
  return true;
}

bool same_symmetric(const SymmetricPresentation& a, const SymmetricPresentation& b) {
  if (a.gen_names != b.gen_names) return false;
  if (a.transposition != b.transposition) return false;
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    if (a.relations[i].a != b.relations[i].a) return false;
    if (a.relations[i].b != b.relations[i].b) return false;
    if (a.relations[i].c != b.relations[i].c) return false;
  }
  return true;
}

PresentationFile roundtrip(const PresentationFile& pf) {
  return presentation_file_from_json(
      json_parse(json_dump(presentation_file_to_json(pf)), "<roundtrip>"),
      "<roundtrip>");
}

}  // namespace

TEST_CASE("rationals and laurent polynomials round-trip") {
  CHECK(rat_from_json(Json("-3/2"), "<t>") == Rat(-3, 2));
  CHECK(rat_from_json(Json(7), "<t>") == Rat(7));
  CHECK(rat_to_json(Rat(-3, 2)) == Json("-3/2"));
  CHECK_THROWS_AS(rat_from_json(Json(1.5), "<t>"), Error);
  CHECK_THROWS_AS(rat_from_json(Json("1/0"), "<t>"), Error);

  // QPoly text round-trips through the parser.
  std::vector<QPoly> polys = {
      QPoly(),
      QPoly(Rat(1)),
      QPoly(Rat(-3, 2)),
      QPoly::monomial(Rat(2), -1),
      QPoly(Rat(1)) - QPoly::monomial(Rat(1, 6), 2),
      QPoly::monomial(Rat(-1), 2) + QPoly::monomial(Rat(1), 1),
      QPoly::monomial(Rat(5, 3), 4) - QPoly::monomial(Rat(7), -2) + QPoly(Rat(1, 2)),
  };
  for (const QPoly& p : polys)
    CHECK(qpoly_from_string(p.text(), "<t>") == p);

  CHECK(qpoly_from_string("1 - 1/6*q^2", "<t>") ==
        QPoly(Rat(1)) - QPoly::monomial(Rat(1, 6), 2));
  CHECK_THROWS_AS(qpoly_from_string("", "<t>"), Error);
  CHECK_THROWS_AS(qpoly_from_string("q^", "<t>"), Error);
  CHECK_THROWS_AS(qpoly_from_string("1 +", "<t>"), Error);
  CHECK_THROWS_AS(qpoly_from_string("frog", "<t>"), Error);
  CHECK_THROWS_AS(qpoly_from_string("1*p^2", "<t>"), Error);
}

TEST_CASE("presentation files round-trip (shuffle and symmetric forms)x") {
  // Symmetric form.
  PresentationFile pf;
  pf.symmetric = samples::leib();
  pf.shuffle = shuffle_expand(*pf.symmetric);
  MonomialOrder ord;
  ord.kind = OrderKind::PathOppositeDegLex;
  ord.generator_order = {"tr", "tl"};
  pf.order = ord;

  PresentationFile back = roundtrip(pf);
  REQUIRE(back.symmetric.has_value());
  CHECK(same_symmetric(*back.symmetric, *pf.symmetric));
  CHECK(same_presentation(back.shuffle, pf.shuffle));
  REQUIRE(back.order.has_value());
  CHECK(back.order->kind == OrderKind::PathOppositeDegLex);
  CHECK(back.order->generator_order == std::vector<std::string>{"tr", "tl"});
  CHECK(back.order->longer_prefix_wins);

  // Shuffle form (no symmetric block), including a free presentation.
  PresentationFile shuffle_only;
  shuffle_only.shuffle = shuffle_expand(samples::prelie());
  PresentationFile back2 = roundtrip(shuffle_only);
  CHECK_FALSE(back2.symmetric.has_value());
  CHECK_FALSE(back2.order.has_value());
  CHECK(same_presentation(back2.shuffle, shuffle_only.shuffle));

  PresentationFile free_pf;
  free_pf.shuffle = samples::free_one_binary();
  PresentationFile back3 = roundtrip(free_pf);
  CHECK(back3.shuffle.relations.empty());
  CHECK(same_presentation(back3.shuffle, free_pf.shuffle));
}

TEST_CASE("presentation file validation errors") {
  CHECK_THROWS_AS(load_json_file(kData + "/presentations/no_such_file.json"), Error);
  CHECK_THROWS_AS(json_parse("{oops", "<t>"), Error);

  auto load = [](const std::string& text) {
    return presentation_file_from_json(json_parse(text, "<t>"), "<t>");
  };
  // symmetric and explicit relations are mutually exclusive
  CHECK_THROWS_AS(
      load(R"x({"symmetric": {"gen_names": ["b"], "transposition": [["-1"]],
               "relations": []}, "relations": []})x"),
      Error);
  // missing generators
  CHECK_THROWS_AS(load(R"x({"relations": []})x"), Error);
  // malformed tree text
  CHECK_THROWS_AS(
      load(R"x({"generators": [{"name": "m"}],
               "relations": [[{"coeff": "1", "tree": "m(1,2"}]]})x"),
      Error);
  // unknown generator in a tree
  CHECK_THROWS_AS(
      load(R"x({"generators": [{"name": "m"}],
               "relations": [[{"coeff": "1", "tree": "w(1,2)"}]]})x"),
      Error);
  // empty element
  CHECK_THROWS_AS(
      load(R"x({"generators": [{"name": "m"}], "relations": [[]]})x"), Error);
  // bad order kind
  CHECK_THROWS_AS(
      load(R"x({"generators": [{"name": "m"}], "order": {"kind": "deglex"}})x"),
      Error);
  // non-involutive transposition is rejected by deep validation
  CHECK_THROWS_AS(
      load(R"x({"symmetric": {"gen_names": ["b"], "transposition": [["2"]],
               "relations": []}})x"),
      Error);
}

TEST_CASE("bundled presentation files agree with the sample presentations") {
  struct Pair {
    const char* file;
    SymmetricPresentation sp;
  };
  const std::vector<Pair> pairs = {
      {"lie", samples::lie()},    {"com", samples::com()},
      {"as", samples::as()},      {"prelie", samples::prelie()},
      {"perm", samples::perm()},  {"leib", samples::leib()},
      {"zinb", samples::zinb()},  {"pois", samples::pois()},
      {"lie2", samples::lie2()},
  };
  for (const Pair& p : pairs) {
    CAPTURE(p.file);
    PresentationFile pf =
        load_presentation(kData + "/presentations/" + p.file + ".json");
    REQUIRE(pf.symmetric.has_value());
    CHECK(same_symmetric(*pf.symmetric, p.sp));
    CHECK(same_presentation(pf.shuffle, shuffle_expand(p.sp)));
  }

  PresentationFile freepf = load_presentation(kData + "/presentations/free.json");
  CHECK_FALSE(freepf.symmetric.has_value());
  CHECK(same_presentation(freepf.shuffle, samples::free_one_binary()));

  // leib.json carries the order its basis is certified under.
  PresentationFile leib = load_presentation(kData + "/presentations/leib.json");
  REQUIRE(leib.order.has_value());
  CHECK(leib.order->kind == OrderKind::PathOppositeDegLex);
  CHECK(leib.order->generator_order == std::vector<std::string>{"tr", "tl"});
}

TEST_CASE("groebner bases round-trip with certification metadata") {
  Presentation p = shuffle_expand(samples::prelie());
  CompletionOptions opts;
  opts.max_arity = 4;
  GroebnerBasis gb = complete(p, MonomialOrder{}, opts);
  REQUIRE(gb.certified);

  GroebnerBasis back = basis_from_json(
      json_parse(json_dump(basis_to_json(gb)), "<t>"), "<t>");
  CHECK(back.certified);
  CHECK(back.certified_arity == gb.certified_arity);
  CHECK(back.order.kind == gb.order.kind);
  REQUIRE(back.elements.size() == gb.elements.size());
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    CHECK(samples::same_element(back.elements[i], gb.elements[i]));
  CHECK(verify(back, back.certified_arity));
  CHECK(normal_monomial_counts(back, 4) == normal_monomial_counts(gb, 4));
}

TEST_CASE("algebra files round-trip and agree with the samples") {
  const std::vector<std::string> lie_names = samples::lie().gen_names;
  AlgebraData sl2 = samples::sl2();
  AlgebraData back = algebra_from_json(
      json_parse(json_dump(algebra_to_json(sl2, lie_names)), "<t>"), lie_names,
      "<t>");
  CHECK(back.dim == sl2.dim);
  CHECK(back.basis == sl2.basis);
  CHECK(back.structure == sl2.structure);

  AlgebraData from_file =
      load_algebra(kData + "/algebras/sl2.json", lie_names);
  CHECK(from_file.structure == sl2.structure);
  CHECK(algebra_satisfies_relations(samples::lie(), from_file));

  const std::vector<std::string> leib_names = samples::leib().gen_names;
  AlgebraData leib_xy =
      load_algebra(kData + "/algebras/leib_xy.json", leib_names);
  CHECK(leib_xy.structure == samples::leib_xy().structure);
  CHECK(algebra_satisfies_relations(samples::leib(), leib_xy));

  auto parse_alg = [&](const std::string& text) {
    return algebra_from_json(json_parse(text, "<t>"), lie_names, "<t>");
  };
  // unknown op name
  CHECK_THROWS_AS(
      parse_alg(R"x({"dim": 1, "basis": ["x"],
                    "ops": [{"gen": "nope", "table": [[["0"]]]}]})x"),
      Error);
  // duplicate op
  CHECK_THROWS_AS(
      parse_alg(R"x({"dim": 1, "basis": ["x"],
                    "ops": [{"gen": "b", "table": [[["0"]]]},
                            {"gen": "b", "table": [[["0"]]]}]})x"),
      Error);
  // wrong table shape
  CHECK_THROWS_AS(
      parse_alg(R"x({"dim": 2, "basis": ["x", "y"],
                    "ops": [{"gen": "b", "table": [[["0"]]]}]})x"),
      Error);
  // basis size mismatch
  CHECK_THROWS_AS(parse_alg(R"x({"dim": 2, "basis": ["x"], "ops": []})x"), Error);
  // missing ops means the zero algebra
  AlgebraData zero = parse_alg(R"x({"dim": 2, "basis": ["x", "y"]})x");
  CHECK(zero.structure == samples::zero_algebra(1, 2).structure);
}

TEST_CASE("series round-trip including q coefficients") {
  for (const PowerSeries& f :
       {ps_exp(6), ps_pois(6), ps_lie(8), PowerSeries::zero(3)}) {
    PowerSeries back =
        series_from_json(json_parse(json_dump(series_to_json(f)), "<t>"), "<t>");
    CHECK(back == f);
  }

  auto parse_series = [](const std::string& text) {
    return series_from_json(json_parse(text, "<t>"), "<t>");
  };
  // sparse input: missing degrees are zero
  PowerSeries sparse = parse_series(
      R"x({"truncation": 3, "coeffs": [{"degree": 1, "value": "1"}]})x");
  CHECK(sparse == ps_t(3));
  CHECK_THROWS_AS(parse_series(
      R"x({"truncation": 2, "coeffs": [{"degree": 5, "value": "1"}]})x"), Error);
  CHECK_THROWS_AS(parse_series(
      R"x({"truncation": 2, "coeffs": [{"degree": 1, "value": "1"},
                                      {"degree": 1, "value": "2"}]})x"), Error);

  for (const SymFun& chi : {chi_lie(5), chi_lie2_dual(4), SymFun::zero(2)}) {
    SymFun back =
        sym_from_json(json_parse(json_dump(sym_to_json(chi)), "<t>"), "<t>");
    CHECK(back == chi);
  }
  auto parse_sym = [](const std::string& text) {
    return sym_from_json(json_parse(text, "<t>"), "<t>");
  };
  CHECK_THROWS_AS(parse_sym(
      R"x({"truncation": 3, "coeffs": [{"partition": [1, 2], "value": "1"}]})x"),
      Error);
  CHECK_THROWS_AS(parse_sym(
      R"x({"truncation": 3, "coeffs": [{"partition": [0], "value": "1"}]})x"),
      Error);
  CHECK_THROWS_AS(parse_sym(
      R"x({"truncation": 2, "coeffs": [{"partition": [3], "value": "1"}]})x"),
      Error);
}

TEST_CASE("report emission: verdict strings and golden bytes") {
  // Golden bytes: the byte-stability contract of json mode, frozen on a value
  // small enough to audit by eye.
  CHECK(json_dump(series_to_json(ps_t(2))) ==
        "{\n"
        "  \"truncation\": 2,\n"
        "  \"coeffs\": [\n"
        "    {\n"
        "      \"degree\": 0,\n"
        "      \"value\": \"0\"\n"
        "    },\n"
        "    {\n"
        "      \"degree\": 1,\n"
        "      \"value\": \"1\"\n"
        "    },\n"
        "    {\n"
        "      \"degree\": 2,\n"
        "      \"value\": \"0\"\n"
        "    }\n"
        "  ]\n"
        "}\n");

  SeriesReport pois_report = necessary_condition_egf(ps_pois(6));
  Json pj = series_report_to_json(pois_report);
  CHECK(pj["nonnegative"] == Json(false));
  CHECK(pj["violation_degree"] == Json(3));
  CHECK(pj["violation_value"] == Json("1/6 - 1/6*q^2"));
  CHECK(pj["series"]["coeffs"][3]["q_poly"] == Json("1/6 - 1/6*q^2"));
  CHECK(pj["series"]["coeffs"][3]["value"] == Json("1/6"));

  DimReport match;
  match.filtered = {1, 4, 10};
  match.graded = {1, 3, 6};
  match.reference = {1, 4, 10};
  match.checked_to = 2;
  Json mj = dim_report_to_json(match);
  CHECK(mj["verdict"] == Json("MatchUpTo(2)"));
  CHECK(mj["mismatch_at"].is_null());

  DimReport mismatch = match;
  mismatch.match = false;
  mismatch.mismatch_at = 1;
  CHECK(dim_report_to_json(mismatch)["verdict"] == Json("MismatchAt(1)"));

  // pbw verdict on prelie: proven via the left-comb route.
  Presentation p = shuffle_expand(samples::prelie());
  CompletionOptions opts;
  opts.max_arity = 4;
  GroebnerBasis gb = complete(p, MonomialOrder{}, opts);
  PbwVerdict v = pbw_verdict(gb, derivative_presentation(p), 3);
  CHECK(verdict_string(v) == "proven");
  Json vj = pbw_verdict_to_json(v);
  CHECK(vj["verdict"] == Json("proven"));
  CHECK(vj["sufficient"] == Json("left-comb"));
  CHECK(vj["numeric"]["consistent"] == Json(true));
}
