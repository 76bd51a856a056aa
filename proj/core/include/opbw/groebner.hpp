#pragma once
/**
 * Groebner bases for shuffle operad ideals.
 *
 * Elements are finite rational linear combinations of shuffle-tree monomials
 * of one arity.  Reduction rewrites the greatest divisible monomial using a
 * basis element (all occurrences found through divisor embeddings); completion
 * is a truncated Buchberger loop over small common multiples, processed in
 * ascending (arity, leading monomial) order, certified up to a stated arity
 * bound.  Normal monomial counts below the certified bound equal the graded
 * dimensions of the presented operad.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opbw/rational.hpp"
#include "opbw/trees.hpp"

namespace opbw {

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// A linear combination of same-arity monomials.  Terms are keyed by the
/// canonical serialization (deterministic iteration); zero coefficients are
/// never stored.
struct Element {
  std::map<ShuffleTree, Rat> terms;
  int arity = 0;  // 0 until the first term is added

  bool is_zero() const { return terms.empty(); }

  /// Adds c * m (erasing the term if the sum vanishes).
  void add(const ShuffleTree& m, const Rat& c);

  /// Common weight of all terms, or nullopt for mixed / zero elements.
  std::optional<int> weight() const;

  /// Largest weight over the terms (quadratic-linear data reduces by its
  /// top-weight part).
  int top_weight() const;

  Element scaled(const Rat& c) const;
  Element minus(const Element& other) const;
};

/// Greatest monomial of e in the order, restricted to top-weight terms
/// (for weight-homogeneous elements that is just the greatest term).
/// Throws Error(ZeroElement) if e is zero.
const ShuffleTree& leading_monomial(const Element& e, const MonomialOrder& order,
                                    const GeneratorSet& gens);

/// Coefficient of the leading monomial.
Rat leading_coefficient(const Element& e, const MonomialOrder& order,
                        const GeneratorSet& gens);

// ---------------------------------------------------------------------------
// Presentations and bases
// ---------------------------------------------------------------------------

struct Presentation {
  GeneratorSet gens;
  std::vector<Element> relations;
};

struct GroebnerBasis {
  GeneratorSet gens;
  MonomialOrder order;
  std::vector<Element> elements;  ///< monic, inter-reduced, ascending (arity, lead)
  int certified_arity = 0;        ///< S-elements checked for all arities <= this
  bool certified = true;          ///< false if the resource budget was exhausted
};

struct CompletionOptions {
  int max_arity = 6;             ///< certification bound
  double budget_seconds = 600.0; ///< wall-clock budget; exceeding it yields an uncertified partial basis
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Total reduction of e modulo `basis`: repeatedly rewrites the greatest
/// divisible monomial (first basis element in listing order, first embedding
/// in preorder).  Deterministic and idempotent; the result has no monomial
/// divisible by any leading monomial of the basis.
Element reduce(const Element& e, const std::vector<Element>& basis,
               const MonomialOrder& order, const GeneratorSet& gens);

/// S-elements of the pair (g1, g2): for every small common multiple T of the
/// two leading monomials with arity <= max_arity (embeddings jointly covering
/// T and sharing at least one vertex), the difference of the two one-step
/// rewritings of T.  Exhaustive and duplicate-free.
std::vector<Element> overlaps(const Element& g1, const Element& g2,
                              const MonomialOrder& order, const GeneratorSet& gens,
                              int max_arity);

/// Truncated Buchberger completion.  Preconditions: no zero relations.
/// The output is monic and inter-reduced, and as a set of leading monomials is
/// independent of the input relation order.
GroebnerBasis complete(const Presentation& p, const MonomialOrder& order,
                       const CompletionOptions& opts = {});

/// Re-checks every S-element of the basis up to the bound; true iff all reduce
/// to zero.
bool verify(const GroebnerBasis& basis, int max_arity);

/// Number of monomials of each arity 1..max_arity with no leading-monomial
/// divisor.  Below the certified bound of a verified basis these are the
/// graded dimensions of the presented operad.
std::vector<long long> normal_monomial_counts(const GroebnerBasis& basis,
                                              int max_arity);

/// The normal monomials themselves (same filter as the counts).
std::vector<ShuffleTree> normal_monomials(const GroebnerBasis& basis, int arity);

}  // namespace opbw
