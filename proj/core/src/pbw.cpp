#include "opbw/pbw.hpp"

#include <algorithm>

#include "opbw/error.hpp"

namespace opbw {

namespace {

void require_certified(const GroebnerBasis& G, int arity_needed) {
  if (!G.certified)
    throw Error(ErrorKind::Uncertified,
                "basis is not certified (completion budget exhausted)");
  if (G.certified_arity < arity_needed)
    throw Error(ErrorKind::Uncertified,
                "basis certified to arity " + std::to_string(G.certified_arity) +
                    " but arity " + std::to_string(arity_needed) + " is required");
}

/// Leading monomials of G that are left combs (only these can divide a comb).
std::vector<ShuffleTree> comb_leads(const GroebnerBasis& G) {
  std::vector<ShuffleTree> leads;
  for (const Element& e : G.elements) {
    const ShuffleTree& lm = leading_monomial(e, G.order, G.gens);
    if (is_left_comb(lm)) leads.push_back(lm);
  }
  return leads;
}

/// All left combs of the given arity (filtered enumeration).
std::vector<ShuffleTree> left_combs(const GeneratorSet& gens, int arity) {
  std::vector<ShuffleTree> combs;
  for (const ShuffleTree& m : enumerate_monomials(gens, arity))
    if (is_left_comb(m)) combs.push_back(m);
  return combs;
}

}  // namespace

DerivedPresentation derivative_presentation(const Presentation& p) {
  DerivedPresentation dp;
  dp.base = p;
  for (const Generator& g : p.gens.list())
    dp.color2_generators.push_back({"d" + g.name, g.arity - 1, g.weight});
  return dp;
}

const Presentation& strip_colors(const DerivedPresentation& dp) { return dp.base; }

bool sufficient_left_comb(const GroebnerBasis& G) {
  require_certified(G, G.certified_arity);
  for (const Element& e : G.elements)
    if (!is_left_comb(leading_monomial(e, G.order, G.gens))) return false;
  return true;
}

std::vector<long long> u0_dims(const GroebnerBasis& G,
                               const DerivedPresentation& dp, int max_arity) {
  if (max_arity < 0) throw Error(ErrorKind::ParseError, "negative arity bound");
  require_certified(G, max_arity + 1);
  const GeneratorSet& gens = dp.base.gens;
  std::vector<ShuffleTree> leads = comb_leads(G);
  std::vector<long long> dims;
  for (int n = 0; n <= max_arity; ++n) {
    long long count = 0;
    for (const ShuffleTree& comb : left_combs(gens, n + 1)) {
      bool normal = true;
      for (const ShuffleTree& lm : leads)
        if (!divisors(comb, lm).empty()) {
          normal = false;
          break;
        }
      if (normal) ++count;
    }
    dims.push_back(count);
  }
  return dims;
}

NumericCheck numeric_pbw_check(const GroebnerBasis& G,
                               const DerivedPresentation& dp, int max_arity) {
  if (max_arity < 0) throw Error(ErrorKind::ParseError, "negative arity bound");
  require_certified(G, max_arity + 1);

  std::vector<long long> p_dims = normal_monomial_counts(G, max_arity + 1);
  std::vector<long long> counts = u0_dims(G, dp, max_arity);

  // f_P(t) = Σ_{m>=1} dim P(m) t^m / m!, truncated at degree max_arity.
  // The spine-monomial counts bound dim U⁰ from above, so solving
  // f_P'(t) = Σ_n u(n) f_P(t)^n / n! degree by degree must produce
  // nonnegative integers u(n) <= counts[n] whenever PBW holds.
  int N = max_arity;
  std::vector<Rat> fp(N + 1, Rat(0));
  for (int m = 1; m <= N; ++m) fp[m] = Rat(p_dims[m - 1]) / factorial(m);

  NumericCheck check;
  check.checked_to = N;

  // Powers of f_P, truncated.
  std::vector<std::vector<Rat>> pow(N + 1, std::vector<Rat>(N + 1, Rat(0)));
  pow[0][0] = 1;
  for (int kk = 1; kk <= N; ++kk)
    for (int i = 0; i <= N; ++i)
      for (int j = 1; i + j <= N; ++j) pow[kk][i + j] += pow[kk - 1][i] * fp[j];

  for (int n = 0; n <= N; ++n) {
    // Degree-n coefficient of f_P' is dim P(n+1) / n!.
    Rat target = Rat(p_dims[n]) / factorial(n);
    Rat partial(0);
    for (int kk = 0; kk < n; ++kk)
      partial += check.solved_u[kk] / factorial(kk) * pow[kk][n];
    // pow[n][n] = (dim P(1))^n = 1, so u(n) is determined directly.
    Rat u = (target - partial) * factorial(n);
    check.solved_u.push_back(u);
    std::string fail;
    if (u < 0)
      fail = "is negative";
    else if (!rat_is_integer(u))
      fail = "is not an integer";
    else if (u > Rat(counts[n]))
      fail = "exceeds the spine monomial count " + std::to_string(counts[n]);
    if (!fail.empty()) {
      check.consistent = false;
      check.fails_at = n;
      check.detail = "u(" + std::to_string(n) + ") = " + rat_to_string(u) + " " + fail;
      break;
    }
  }
  return check;
}

PbwVerdict pbw_verdict(const GroebnerBasis& G, const DerivedPresentation& dp,
                       int max_arity) {
  PbwVerdict v;
  v.sufficient = sufficient_left_comb(G) ? SufficientVerdict::Yes
                                         : SufficientVerdict::NotApplicable;
  v.numeric = numeric_pbw_check(G, dp, max_arity);
  v.p_dims = normal_monomial_counts(G, max_arity + 1);
  v.u0_counts = u0_dims(G, dp, max_arity);

  if (v.sufficient == SufficientVerdict::Yes)
    v.narrative.push_back(
        "All leading monomials of the certified basis are left combs: "
        "the enveloping functor satisfies the PBW property (sufficient criterion).");
  else
    v.narrative.push_back(
        "Some leading monomials are not left combs: the sufficient criterion "
        "does not apply (PBW is neither proven nor refuted by this route).");
  if (v.numeric.consistent)
    v.narrative.push_back(
        "Numeric freeness check: consistent up to degree " +
        std::to_string(v.numeric.checked_to) +
        " (supporting evidence; the check is necessary, not sufficient).");
  else
    v.narrative.push_back("Numeric freeness check: " + v.numeric.detail +
                          " at degree " + std::to_string(v.numeric.fails_at) +
                          "; the PBW property is refuted.");
  return v;
}

std::string verdict_string(const PbwVerdict& v) {
  if (v.sufficient == SufficientVerdict::Yes) return "proven";
  if (!v.numeric.consistent) return "refuted";
  return "inconclusive";
}

}  // namespace opbw
