#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

/**
 * Quadratic duality tests.
 *
 * The sign convention of the diagonal pairing is frozen here by golden
 * vectors: the dual of the Lie-bracket presentation is the commutative
 * presentation (exact relations pinned), the dual of pre-Lie is Perm, and the
 * dual of Leibniz is Zinbiel.  Structural theorems are checked across all
 * sample presentations: the complement identity dim R + dim R^⊥ = 3g²,
 * span-level involutivity dual(dual(p)) ~ p, and the pivot complementarity
 * between normal monomials of p and leading monomials of dual(p) under the
 * pairing-transported opposite order.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "opbw/dual.hpp"
#include "opbw/groebner.hpp"
#include "opbw/linalg.hpp"
#include "opbw/uea.hpp"
#include "operad_samples.hpp"

using namespace opbw;
using samples::el;
using samples::same_element;

namespace {

Mat rows_of(const Presentation& p) { return quadratic_data(p).relation_rows; }

std::vector<long long> dims_of(const Presentation& p, const MonomialOrder& ord,
                               int N) {
  GroebnerBasis gb = complete(p, ord, {N, 600.0});
  REQUIRE(gb.certified);
  return normal_monomial_counts(gb, N);
}

std::vector<Presentation> all_samples() {
  return {shuffle_expand(samples::lie()),    shuffle_expand(samples::com()),
          shuffle_expand(samples::as()),     shuffle_expand(samples::prelie()),
          shuffle_expand(samples::perm()),   shuffle_expand(samples::leib()),
          shuffle_expand(samples::zinb()),   shuffle_expand(samples::pois()),
          shuffle_expand(samples::lie2())};
}

}  // namespace

TEST_CASE("shape monomials, classification and indexing") {
  Presentation prelie = shuffle_expand(samples::prelie());
  const GeneratorSet& g2 = prelie.gens;

  // Pinned canonical forms on a one-generator set.
  GeneratorSet g1({{"b", 2, 1}});
  CHECK(shape_monomial(g1, Shape3::LL, 0, 0).text() == "b(b(1,2),3)");
  CHECK(shape_monomial(g1, Shape3::LR, 0, 0).text() == "b(b(1,3),2)");
  CHECK(shape_monomial(g1, Shape3::RR, 0, 0).text() == "b(1,b(2,3))");

  // Round trip over every (shape, outer, inner) for two generators, and
  // agreement between quadratic_index and the basis layout.
  QuadraticData qd = quadratic_data(prelie);
  REQUIRE(qd.basis.size() == 12);
  int at = 0;
  for (Shape3 shape : {Shape3::LL, Shape3::LR, Shape3::RR})
    for (int o = 0; o < 2; ++o)
      for (int i = 0; i < 2; ++i, ++at) {
        CHECK(quadratic_index(2, shape, o, i) == at);
        ShuffleTree m = shape_monomial(g2, shape, o, i);
        CHECK(m == qd.basis[at]);
        Shape3 cs;
        int co, ci;
        classify_quadratic(m, &cs, &co, &ci);
        CHECK(cs == shape);
        CHECK(co == o);
        CHECK(ci == i);
      }

  // The basis is exactly the arity-3 monomial enumeration (as a set).
  std::vector<ShuffleTree> listed = enumerate_monomials(g2, 3);
  REQUIRE(listed.size() == 12);
  for (const ShuffleTree& m : listed)
    CHECK(std::count(qd.basis.begin(), qd.basis.end(), m) == 1);

  Shape3 s;
  int o, i;
  CHECK_THROWS_AS(classify_quadratic(parse_tree("tr(1,2)", g2), &s, &o, &i),
                  Error);
  CHECK_THROWS_AS(
      classify_quadratic(parse_tree("tr(tr(tr(1,2),3),4)", g2), &s, &o, &i),
      Error);
}

TEST_CASE("pairing signs are frozen") {
  // One generator: ε alone.
  QuadraticData lie_qd = quadratic_data(shuffle_expand(samples::lie()));
  REQUIRE(lie_qd.pairing_signs.size() == 3);
  CHECK(lie_qd.pairing_signs[0] == 1);   // LL
  CHECK(lie_qd.pairing_signs[1] == -1);  // LR
  CHECK(lie_qd.pairing_signs[2] == -1);  // RR

  // Two generators: ε(shape)·η(outer)·η(inner) with η = (+1, −1).
  QuadraticData qd = quadratic_data(shuffle_expand(samples::prelie()));
  auto sign = [&](Shape3 shape, int o, int i) {
    return qd.pairing_signs[quadratic_index(2, shape, o, i)];
  };
  CHECK(sign(Shape3::LL, 0, 0) == 1);
  CHECK(sign(Shape3::LL, 0, 1) == -1);
  CHECK(sign(Shape3::LL, 1, 0) == -1);
  CHECK(sign(Shape3::LL, 1, 1) == 1);
  CHECK(sign(Shape3::LR, 0, 0) == -1);
  CHECK(sign(Shape3::LR, 1, 0) == 1);
  CHECK(sign(Shape3::RR, 0, 0) == -1);
  CHECK(sign(Shape3::RR, 1, 1) == -1);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(quadratic_data(Presentation{GeneratorSet(std::vector<Generator>{}), {}}),
                  Error);

  Presentation ternary{GeneratorSet({{"t", 3, 1}}), {}};
  CHECK_THROWS_AS(quadratic_data(ternary), Error);

  GeneratorSet g({{"m", 2, 1}});
  Presentation linear{g, {el(g, {{"m(1,2)", 1}})}};
  CHECK_THROWS_AS(quadratic_dual(linear), Error);

  Presentation cubic{g, {el(g, {{"m(m(m(1,2),3),4)", 1}})}};
  CHECK_THROWS_AS(quadratic_dual(cubic), Error);

  Presentation zero{g, {Element{}}};
  CHECK_THROWS_AS(quadratic_dual(zero), Error);
}

TEST_CASE("golden: dual of the bracket presentation is the commutative one") {
  Presentation lie = shuffle_expand(samples::lie());
  Presentation dual = quadratic_dual(lie);

  REQUIRE(dual.gens.size() == 1);
  CHECK(dual.gens[0].name == "b_d");
  CHECK(dual.gens[0].arity == 2);

  // Exact output, freezing the sign convention end to end.
  REQUIRE(dual.relations.size() == 2);
  CHECK(same_element(dual.relations[0],
                     el(dual.gens, {{"b_d(b_d(1,2),3)", -1},
                                    {"b_d(b_d(1,3),2)", 1}})));
  CHECK(same_element(dual.relations[1],
                     el(dual.gens, {{"b_d(b_d(1,2),3)", -1},
                                    {"b_d(1,b_d(2,3))", 1}})));

  CHECK(spans_equal(rows_of(dual), rows_of(shuffle_expand(samples::com()))));
  CHECK(dims_of(dual, MonomialOrder{}, 4) ==
        std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("golden: dual of pre-lie is perm") {
  Presentation prelie = shuffle_expand(samples::prelie());
  Presentation dual = quadratic_dual(prelie);

  REQUIRE(dual.gens.size() == 2);
  CHECK(dual.gens[0].name == "tr_d");
  CHECK(dual.gens[1].name == "tl_d");
  CHECK(dual.relations.size() == 9);

  CHECK(spans_equal(rows_of(dual), rows_of(shuffle_expand(samples::perm()))));
  CHECK(dims_of(dual, MonomialOrder{}, 4) ==
        std::vector<long long>{1, 2, 3, 4});
}

TEST_CASE("golden: dual of leibniz is zinbiel") {
  Presentation leib = shuffle_expand(samples::leib());
  Presentation dual = quadratic_dual(leib);

  CHECK(dual.relations.size() == 6);
  CHECK(spans_equal(rows_of(dual), rows_of(shuffle_expand(samples::zinb()))));

  // The dual has an all-left-comb Groebner basis under the default order:
  // the sufficient PBW condition applies, and the quotient dimensions are
  // the factorials.
  GroebnerBasis gb = complete(dual, MonomialOrder{}, {5, 600.0});
  REQUIRE(gb.certified);
  for (const Element& e : gb.elements)
    CHECK(is_left_comb(leading_monomial(e, MonomialOrder{}, dual.gens)));
  CHECK(normal_monomial_counts(gb, 5) ==
        std::vector<long long>{1, 2, 6, 24, 120});
}

TEST_CASE("self-dual presentations") {
  // Associative: literally self-annihilating in the frozen convention.
  Presentation as = shuffle_expand(samples::as());
  Presentation das = quadratic_dual(as);
  CHECK(spans_equal(rows_of(das), rows_of(as)));
  CHECK(dims_of(das, MonomialOrder{}, 4) ==
        std::vector<long long>{1, 2, 6, 24});

  // Poisson: self-dual up to basis change only — the spans differ in this
  // convention, but the quotient dimensions are preserved.
  Presentation pois = shuffle_expand(samples::pois());
  Presentation dpois = quadratic_dual(pois);
  CHECK(rank(rows_of(dpois)) == 6);
  CHECK_FALSE(spans_equal(rows_of(dpois), rows_of(pois)));
  CHECK(dims_of(dpois, MonomialOrder{}, 4) ==
        std::vector<long long>{1, 2, 6, 24});
}

TEST_CASE("dual of the two-bracket presentation has linear growth") {
  Presentation lie2 = shuffle_expand(samples::lie2());
  Presentation dual = quadratic_dual(lie2);
  CHECK(dual.relations.size() == 9);
  // Matches the exponential series t·e^t of its dimension character.
  CHECK(dims_of(dual, MonomialOrder{}, 4) ==
        std::vector<long long>{1, 2, 3, 4});
}

TEST_CASE("complement identity and involutivity across all samples") {
  for (const Presentation& p : all_samples()) {
    const int g = p.gens.size();
    Mat pr = rows_of(p);
    Presentation d = quadratic_dual(p);
    Mat dr = rows_of(d);
    CHECK(rank(pr) + rank(dr) == 3 * g * g);
    CHECK(static_cast<int>(d.relations.size()) == 3 * g * g - rank(pr));

    // Involutivity holds at span level (stronger than dimension equality).
    Presentation dd = quadratic_dual(d);
    CHECK(spans_equal(rows_of(dd), pr));
  }

  // Free on one binary generator: the dual kills the whole quadratic part.
  Presentation free_p = samples::free_one_binary();
  Presentation dfree = quadratic_dual(free_p);
  CHECK(dfree.relations.size() == 3);
  CHECK(dims_of(dfree, MonomialOrder{}, 4) ==
        std::vector<long long>{1, 1, 0, 0});
  CHECK(spans_equal(rows_of(quadratic_dual(dfree)), Mat{}));
}

TEST_CASE("leading complementarity under the transported opposite order") {
  // When p has a quadratic Groebner basis with normal arity-3 set N, the
  // dual relation space, triangularized with columns ordered by ascending
  // primal order (the pairing transport of the opposite order), has pivot
  // monomials exactly the duals of N.
  Presentation leib = shuffle_expand(samples::leib());
  MonomialOrder leib_ord{OrderKind::PathOppositeDegLex, {"tr", "tl"}, true};
  GroebnerBasis gleib = complete(leib, leib_ord, {4, 600.0});
  REQUIRE(gleib.certified);

  std::vector<std::string> normal_texts;
  for (const ShuffleTree& m : normal_monomials(gleib, 3))
    normal_texts.push_back(m.text());
  std::sort(normal_texts.begin(), normal_texts.end());
  REQUIRE(normal_texts.size() == 6);

  QuadraticData primal = quadratic_data(leib);
  Mat dual_rows = rows_of(quadratic_dual(leib));
  REQUIRE(dual_rows.size() == 6);

  std::vector<int> cols(primal.basis.size());
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(), [&](int a, int b) {
    return compare(leib_ord, primal.gens, primal.basis[a], primal.basis[b]) < 0;
  });

  Mat permuted;
  for (const Vec& row : dual_rows) {
    Vec pr(row.size());
    for (size_t j = 0; j < cols.size(); ++j) pr[j] = row[cols[j]];
    permuted.push_back(std::move(pr));
  }
  Mat echelon = rref(permuted);
  REQUIRE(echelon.size() == 6);

  std::vector<std::string> pivot_texts;
  for (const Vec& row : echelon) {
    size_t j = 0;
    while (j < row.size() && row[j] == 0) ++j;
    REQUIRE(j < row.size());
    pivot_texts.push_back(primal.basis[cols[j]].text());
  }
  std::sort(pivot_texts.begin(), pivot_texts.end());

  CHECK(pivot_texts == normal_texts);
}
