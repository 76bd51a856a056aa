#pragma once
/**
 * The two operadic PBW tests.
 *
 * For an operad P presented by generators and relations, the enveloping
 * functor U_P satisfies the PBW property iff the arity-shifted collection ∂P
 * (one input frozen) is a free right P-module.  Two computable routes:
 *
 *  - Sufficient condition: if a certified Groebner basis of the shuffle
 *    presentation has only left-comb leading monomials, PBW holds.
 *  - Necessary condition (numeric): freeness forces the exponential
 *    generating function identity f_P' = f_{U⁰}(f_P), where U⁰ = U_P applied
 *    to the zero algebra on one generator.  Solving the identity degree by
 *    degree for the dimensions u(n) of U⁰ must produce nonnegative integers
 *    bounded by the count of normal spine monomials (left combs with no
 *    leading-monomial divisor), because those monomials always span U⁰.  Any
 *    violation refutes PBW exactly; consistency is supporting evidence only.
 *
 * The derivative presentation realizes ∂P inside a two-colored free operad:
 * the path from leaf 1 to the root (the spine) carries the second color, and
 * the relations are re-read with that coloring, which is forced and therefore
 * stored implicitly.
 */

#include <string>
#include <vector>

#include "opbw/groebner.hpp"
#include "opbw/rational.hpp"

namespace opbw {

/// ∂γ for a base generator γ: the spine input plus arity-1 ordinary inputs.
struct DerivedGenerator {
  std::string name;
  int color1_inputs = 1;
  int weight = 1;
};

/// The two-colored derivative of a presentation.  The coloring of relations
/// is forced (leaf-1 path), so the base data is stored verbatim and the
/// color-2 view is positional.
struct DerivedPresentation {
  Presentation base;
  std::vector<DerivedGenerator> color2_generators;
};

DerivedPresentation derivative_presentation(const Presentation& p);

/// Forgets the coloring; returns the base presentation verbatim.
const Presentation& strip_colors(const DerivedPresentation& dp);

/// True iff every leading monomial of the certified basis is a left comb;
/// true proves the PBW property.  Throws Error(Uncertified) if the basis is
/// not certified.
bool sufficient_left_comb(const GroebnerBasis& G);

/// Per arity n = 0..max_arity: the number of left combs of arity n+1 with no
/// leading-monomial divisor.  These monomials always span the degree-n part
/// of U⁰, with equality of dimensions when PBW holds and the leading monomials
/// are left combs.  Requires certification up to max_arity + 1.
std::vector<long long> u0_dims(const GroebnerBasis& G,
                               const DerivedPresentation& dp, int max_arity);

struct NumericCheck {
  bool consistent = true;
  int checked_to = 0;  ///< degrees 0..checked_to were examined
  int fails_at = -1;   ///< first failing degree, or -1
  std::vector<Rat> solved_u;  ///< the solved dimensions u(0)..u(checked)
  std::string detail;  ///< human-readable reason on failure
};

/// Solves f_P' = f_{U⁰}(f_P) for the dimensions u(n) of U⁰ using the exact
/// graded dimensions of P below the certification bound.  Fails at the first
/// degree where u(n) is negative, non-integral, or exceeds the normal spine
/// monomial count; failure refutes PBW.  Requires certification up to
/// max_arity + 1.
NumericCheck numeric_pbw_check(const GroebnerBasis& G,
                               const DerivedPresentation& dp, int max_arity);

enum class SufficientVerdict { Yes, NotApplicable };

struct PbwVerdict {
  SufficientVerdict sufficient = SufficientVerdict::NotApplicable;
  NumericCheck numeric;
  std::vector<long long> p_dims;      ///< graded dims of P, arity 1..max_arity+1
  std::vector<long long> u0_counts;   ///< normal spine monomial counts, 0..max_arity
  std::vector<std::string> narrative; ///< which route produced which conclusion
};

/// Runs both tests and assembles the combined verdict.
PbwVerdict pbw_verdict(const GroebnerBasis& G, const DerivedPresentation& dp,
                       int max_arity);

/// "proven" when the sufficient condition fired, "refuted" when the numeric
/// check failed, "inconclusive" otherwise.
std::string verdict_string(const PbwVerdict& v);

}  // namespace opbw
