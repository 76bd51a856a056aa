#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

/**
 * Groebner engine tests: completion on the bundled operads against
 * independently known graded dimensions and published reduced bases, total
 * reduction properties, S-element enumeration, and an independent quotient
 * dimension oracle via one-hole relation placements.
 */

#include <algorithm>
#include <map>

#include "opbw/groebner.hpp"
#include "opbw/linalg.hpp"
#include "operad_samples.hpp"

using namespace opbw;
using samples::el;
using samples::same_element;

namespace {

GroebnerBasis gb(const SymmetricPresentation& sp, MonomialOrder order = {},
                 int max_arity = 5) {
  CompletionOptions opts;
  opts.max_arity = max_arity;
  return complete(shuffle_expand(sp), order, opts);
}

/// Independent oracle: dim of the presented operad in one arity, from the
/// rank of every one-hole placement of every relation inside that arity.
long long quotient_dim(const Presentation& p, int arity) {
  std::vector<ShuffleTree> all = enumerate_monomials(p.gens, arity);
  std::map<ShuffleTree, int> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);

  Mat rows;
  for (const Element& r : p.relations)
    for (const ShuffleTree& pat : enumerate_monomials(p.gens, r.arity))
      for (const ShuffleTree& host : all)
        for (const Embedding& e : divisors(host, pat)) {
          Vec row(all.size(), Rat(0));
          for (const auto& [mono, c] : r.terms)
            row[index.at(substitute(p.gens, host, e, mono))] += c;
          rows.push_back(std::move(row));
        }
  return static_cast<long long>(all.size()) - rank(rows);
}

void check_counts(const GroebnerBasis& G, const std::vector<long long>& expect) {
  CHECK(G.certified);
  CHECK(normal_monomial_counts(G, static_cast<int>(expect.size())) == expect);
}

}  // namespace

TEST_CASE("element arithmetic") {
  GeneratorSet g({{"m", 2, 1}});
  Element e = el(g, {{"m(m(1,2),3)", 1}, {"m(1,m(2,3))", -1}});
  CHECK(e.arity == 3);
  CHECK(e.weight() == 2);
  e.add(parse_tree("m(m(1,2),3)", g), Rat(-1));
  CHECK(e.terms.size() == 1);
  CHECK_THROWS_AS(e.add(parse_tree("m(1,2)", g), Rat(1)), Error);
  e.add(parse_tree("m(1,m(2,3))", g), Rat(1));
  CHECK(e.is_zero());
  CHECK_THROWS_AS(
      leading_monomial(Element{}, MonomialOrder{}, g), Error);
}

TEST_CASE("leading monomial restricts to the top weight part") {
  GeneratorSet g({{"a", 2, 1}, {"b", 2, 2}});
  // a(a(1,2),3) is greater in the pure path order (letter a has priority),
  // but b(b(1,2),3) has weight 4 > 2 and must lead.
  Element e = el(g, {{"a(a(1,2),3)", 1}, {"b(b(1,2),3)", 1}});
  CHECK(e.weight() == std::nullopt);
  CHECK(e.top_weight() == 4);
  CHECK(leading_monomial(e, MonomialOrder{}, g).text() == "b(b(1,2),3)");
  CHECK(compare(MonomialOrder{}, g, parse_tree("a(a(1,2),3)", g),
                parse_tree("b(b(1,2),3)", g)) > 0);
}

TEST_CASE("lie: one-relation basis, factorial dimensions") {
  SymmetricPresentation sp = samples::lie();
  Presentation p = shuffle_expand(sp);
  REQUIRE(p.relations.size() == 1);
  CHECK(same_element(
      p.relations[0],
      el(p.gens,
         {{"b(b(1,2),3)", 1}, {"b(b(1,3),2)", -1}, {"b(1,b(2,3))", -1}})));

  GroebnerBasis G = gb(sp);
  REQUIRE(G.elements.size() == 1);
  CHECK(same_element(G.elements[0], p.relations[0]));
  CHECK(G.certified_arity == 5);
  check_counts(G, {1, 1, 2, 6, 24});
  CHECK(verify(G, 5));
}

TEST_CASE("com: two-relation basis, one-dimensional components") {
  GroebnerBasis G = gb(samples::com());
  REQUIRE(G.elements.size() == 2);
  CHECK(same_element(G.elements[0],
                     el(G.gens, {{"m(m(1,3),2)", 1}, {"m(1,m(2,3))", -1}})));
  CHECK(same_element(G.elements[1],
                     el(G.gens, {{"m(m(1,2),3)", 1}, {"m(1,m(2,3))", -1}})));
  check_counts(G, {1, 1, 1, 1, 1});
}

TEST_CASE("as: six-relation basis, factorial dimensions") {
  GroebnerBasis G = gb(samples::as());
  REQUIRE(G.elements.size() == 6);
  std::vector<Element> expect = {
      el(G.gens, {{"m(m(1,2),3)", 1}, {"m(1,m(2,3))", -1}}),
      el(G.gens, {{"m(m(1,3),2)", 1}, {"m(1,mo(2,3))", -1}}),
      el(G.gens, {{"m(mo(1,2),3)", 1}, {"mo(m(1,3),2)", -1}}),
      el(G.gens, {{"m(mo(1,3),2)", 1}, {"mo(m(1,2),3)", -1}}),
      el(G.gens, {{"mo(mo(1,2),3)", 1}, {"mo(1,mo(2,3))", -1}}),
      el(G.gens, {{"mo(mo(1,3),2)", 1}, {"mo(1,m(2,3))", -1}}),
  };
  for (const Element& want : expect)
    CHECK(std::any_of(G.elements.begin(), G.elements.end(),
                      [&](const Element& have) { return same_element(have, want); }));
  check_counts(G, {1, 2, 6, 24, 120});
}

TEST_CASE("prelie: the published three-element basis") {
  GroebnerBasis G = gb(samples::prelie());
  REQUIRE(G.elements.size() == 3);
  // Ascending by leading monomial in the path order (tr > tl).
  CHECK(same_element(G.elements[0],
                     el(G.gens, {{"tr(tl(1,3),2)", 1},
                                 {"tl(tr(1,2),3)", -1},
                                 {"tl(tl(1,2),3)", 1},
                                 {"tl(1,tl(2,3))", -1}})));
  CHECK(same_element(G.elements[1],
                     el(G.gens, {{"tr(tl(1,2),3)", 1},
                                 {"tl(tr(1,3),2)", -1},
                                 {"tl(tl(1,3),2)", 1},
                                 {"tl(1,tr(2,3))", -1}})));
  CHECK(same_element(G.elements[2],
                     el(G.gens, {{"tr(tr(1,2),3)", 1},
                                 {"tr(tr(1,3),2)", -1},
                                 {"tr(1,tr(2,3))", -1},
                                 {"tr(1,tl(2,3))", 1}})));
  check_counts(G, {1, 2, 9, 64, 625});
  CHECK(verify(G, 5));
}

TEST_CASE("perm: linear dimensions") {
  GroebnerBasis G = gb(samples::perm());
  check_counts(G, {1, 2, 3, 4, 5});
}

TEST_CASE("leib: the published six-element basis in the opposite-degree order") {
  MonomialOrder order{OrderKind::PathOppositeDegLex, {"tr", "tl"}, true};
  GroebnerBasis G = gb(samples::leib(), order);
  REQUIRE(G.elements.size() == 6);
  // Ascending by leading monomial: ll(tr,tl), lr(tr,tl), rr(tr,tr),
  // rr(tr,tl), rr(tl,tr), rr(tl,tl).
  CHECK(same_element(G.elements[0],
                     el(G.gens, {{"tr(tl(1,2),3)", 1}, {"tr(tr(1,2),3)", 1}})));
  CHECK(same_element(G.elements[1],
                     el(G.gens, {{"tr(tl(1,3),2)", 1}, {"tr(tr(1,3),2)", 1}})));
  CHECK(same_element(G.elements[2],
                     el(G.gens, {{"tr(1,tr(2,3))", 1},
                                 {"tr(tr(1,2),3)", -1},
                                 {"tl(tr(1,3),2)", -1}})));
  CHECK(same_element(G.elements[3],
                     el(G.gens, {{"tr(1,tl(2,3))", 1},
                                 {"tl(tr(1,2),3)", -1},
                                 {"tr(tr(1,3),2)", -1}})));
  CHECK(same_element(G.elements[4],
                     el(G.gens, {{"tl(1,tr(2,3))", 1},
                                 {"tl(tl(1,2),3)", 1},
                                 {"tl(tl(1,3),2)", -1}})));
  CHECK(same_element(G.elements[5],
                     el(G.gens, {{"tl(1,tl(2,3))", 1},
                                 {"tl(tl(1,2),3)", -1},
                                 {"tl(tl(1,3),2)", 1}})));
  check_counts(G, {1, 2, 6, 24, 120});
  CHECK(verify(G, 5));
}

TEST_CASE("free presentation: empty basis, double-factorial counts") {
  GroebnerBasis G = complete(samples::free_one_binary(), MonomialOrder{});
  CHECK(G.elements.empty());
  CHECK(G.certified);
  check_counts(G, {1, 1, 3, 15, 105});
}

TEST_CASE("one-hole placement oracle agrees with normal monomial counts") {
  struct Case {
    SymmetricPresentation sp;
    MonomialOrder order;
  };
  std::vector<Case> cases = {
      {samples::lie(), {}},
      {samples::com(), {}},
      {samples::as(), {}},
      {samples::prelie(), {}},
      {samples::leib(), {OrderKind::PathOppositeDegLex, {"tr", "tl"}, true}},
      {samples::pois(), {}},
      {samples::lie2(), {}},
      {samples::zinb(), {}},
  };
  for (const Case& c : cases) {
    Presentation p = shuffle_expand(c.sp);
    GroebnerBasis G = complete(p, c.order, {4, 600.0});
    std::vector<long long> counts = normal_monomial_counts(G, 4);
    for (int n = 2; n <= 4; ++n)
      CHECK(quotient_dim(p, n) == counts[n - 1]);
  }
}

TEST_CASE("reduce is idempotent and produces divisor-free normal forms") {
  GroebnerBasis G = gb(samples::prelie());
  std::vector<ShuffleTree> monos = enumerate_monomials(G.gens, 4);
  Element e;
  for (size_t i = 0; i < monos.size(); ++i)
    if (i % 3 != 1) e.add(monos[i], Rat(static_cast<int>(i % 7) - 3));
  Element r1 = reduce(e, G.elements, G.order, G.gens);
  Element r2 = reduce(r1, G.elements, G.order, G.gens);
  CHECK(same_element(r1, r2));
  for (const auto& [m, c] : r1.terms)
    for (const Element& b : G.elements)
      CHECK(divisors(m, leading_monomial(b, G.order, G.gens)).empty());
  // Reduction changes the element only modulo the relation span: the
  // difference must reduce to zero as well.
  Element diff = e.minus(r1);
  CHECK(reduce(diff, G.elements, G.order, G.gens).is_zero());
}

TEST_CASE("self-overlap count for the lie relation") {
  GroebnerBasis G = gb(samples::lie());
  const Element& g0 = G.elements[0];
  std::vector<Element> s = overlaps(g0, g0, G.order, G.gens, 6);
  // The only small common multiple of b(b(1,2),3) with itself is the left
  // comb b(b(b(1,2),3),4); larger arities cannot be covered by two
  // overlapping two-vertex embeddings.
  CHECK(s.size() == 1);
  CHECK(reduce(s[0], G.elements, G.order, G.gens).is_zero());
}

TEST_CASE("completion output does not depend on the relation listing order") {
  Presentation p = shuffle_expand(samples::leib());
  MonomialOrder order{OrderKind::PathOppositeDegLex, {"tr", "tl"}, true};
  GroebnerBasis G1 = complete(p, order);
  std::reverse(p.relations.begin(), p.relations.end());
  // Also rescale to exercise monicization.
  for (Element& r : p.relations) r = r.scaled(Rat(-7, 3));
  GroebnerBasis G2 = complete(p, order);
  REQUIRE(G1.elements.size() == G2.elements.size());
  for (size_t i = 0; i < G1.elements.size(); ++i)
    CHECK(same_element(G1.elements[i], G2.elements[i]));
}

TEST_CASE("interreduction: redundant consequences are eliminated") {
  // Feed the engine the lie relation plus a consequence of it; the completed
  // basis must coincide with the one from the relation alone.
  SymmetricPresentation sp = samples::lie();
  Presentation p = shuffle_expand(sp);
  GroebnerBasis G1 = complete(p, MonomialOrder{});
  Element extra = overlaps(G1.elements[0], G1.elements[0], G1.order, G1.gens, 4)[0];
  if (!extra.is_zero()) p.relations.push_back(extra);
  GroebnerBasis G2 = complete(p, MonomialOrder{});
  REQUIRE(G2.elements.size() == G1.elements.size());
  for (size_t i = 0; i < G1.elements.size(); ++i)
    CHECK(same_element(G1.elements[i], G2.elements[i]));
}

TEST_CASE("uncertified bases are flagged when the budget is exhausted") {
  CompletionOptions opts;
  opts.max_arity = 6;
  opts.budget_seconds = 0.0;
  GroebnerBasis G = complete(shuffle_expand(samples::prelie()), MonomialOrder{}, opts);
  CHECK(!G.certified);
  CHECK(G.certified_arity < 6);
}
