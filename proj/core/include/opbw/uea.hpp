#pragma once
/**
 * Universal enveloping algebras of algebras over binary quadratic operads.
 *
 * A symmetric binary presentation lists a basis γ_1..γ_k of the space of
 * binary operations together with the transposition action and quadratic
 * relations written over the three planar shapes
 *
 *     ll: γ_i(γ_j(x1,x2),x3)   lr: γ_i(γ_j(x1,x3),x2)   rr: γ_i(x1,γ_j(x2,x3)),
 *
 * one coefficient matrix (indexed [outer][inner]) per shape.  Every quadratic
 * relation of a symmetric operad with binary generators can be written this
 * way by moving leaf permutations into the generator space.
 *
 * The module provides:
 *  - saturation: a row-echelon basis of the span of all leaf relabelings of
 *    the listed relations (the full degree-3 relation space),
 *  - shuffle expansion into a presentation for the Groebner engine,
 *  - the enveloping algebra U_P(V) of a finite-dimensional P-algebra V,
 *    presented by generators ∂γ_i(e_a) with one quadratic-linear relation
 *    per (relation, basis pair):
 *        Σ_ij a_ij ∂γ_i(w)∂γ_j(v) + b_ij ∂γ_i(v)∂γ_j(w) + c_ij ∂γ_i(γ_j(v,w)),
 *  - filtered dimensions of U_P(V) by exact truncated linear algebra, and the
 *    per-algebra PBW comparison against the same algebra with all structure
 *    constants set to zero.
 */

#include <map>
#include <string>
#include <vector>

#include "opbw/groebner.hpp"
#include "opbw/linalg.hpp"
#include "opbw/rational.hpp"
#include "opbw/trees.hpp"

namespace opbw {

// ---------------------------------------------------------------------------
// Symmetric binary presentations
// ---------------------------------------------------------------------------

/// One quadratic relation: Σ_ij a[i][j]·ll(i,j) + b[i][j]·lr(i,j)
/// + c[i][j]·rr(i,j) in the three-shape coordinates above.
struct SymmetricRelation {
  Mat a, b, c;
};

struct SymmetricPresentation {
  /// Basis names of the binary operation space (also the shuffle generators).
  std::vector<std::string> gen_names;
  /// Action of the transposition on the operation space:
  /// γ_i(y,x) = Σ_j transposition[i][j] γ_j(x,y).  Must be an involution.
  Mat transposition;
  std::vector<SymmetricRelation> relations;
};

/// Checks matrix shapes and the involution property.
/// Throws Error(ParseError) on violation.
void validate_symmetric(const SymmetricPresentation& sp);

/// Row-echelon basis (in the 3k² shape coordinates, deterministic) of the
/// span of all leaf relabelings of the listed relations.  This is the full
/// quadratic relation space of the presented operad.
std::vector<SymmetricRelation> saturate_relations(const SymmetricPresentation& sp);

/// Shuffle expansion: generators = gen_names (binary, weight 1); relations =
/// the saturated relation basis converted to shuffle-tree elements.
Presentation shuffle_expand(const SymmetricPresentation& sp);

// ---------------------------------------------------------------------------
// Algebras over the presented operad
// ---------------------------------------------------------------------------

struct AlgebraData {
  int dim = 0;
  std::vector<std::string> basis;
  /// structure[i][x][y] = coordinate vector of γ_i(e_x, e_y), length dim.
  std::vector<std::vector<std::vector<Vec>>> structure;
};

/// Shape validation of the algebra against the presentation (k tables of
/// dim×dim×dim exact rationals).  Throws Error(ParseError) on violation.
void validate_algebra_shapes(const SymmetricPresentation& sp, const AlgebraData& V);

/// Deep validation: the structure constants are equivariant for the
/// transposition and every listed relation vanishes on all basis triples.
bool algebra_satisfies_relations(const SymmetricPresentation& sp, const AlgebraData& V);

/// Same dimension, all structure constants zero.
AlgebraData trivial_algebra(const AlgebraData& V);

// ---------------------------------------------------------------------------
// The enveloping algebra presentation
// ---------------------------------------------------------------------------

/// Words over generator ids; the empty word is the unit.
using Word = std::vector<int>;
/// Noncommutative polynomial: finite rational combination of words.
using NCPoly = std::map<Word, Rat>;

/// One generator ∂γ_op(e_vec) of the enveloping algebra.
struct AssocGenerator {
  int op = 0;
  int vec = 0;
  std::string name;
};

struct AssocPresentation {
  std::vector<AssocGenerator> generators;
  /// Quadratic-linear relations (words of length 2 and 1).
  std::vector<NCPoly> relations;
  bool unital = true;
};

/// Builds the presentation of U_P(V): k·dim generators and one relation per
/// (saturated relation, ordered basis pair).  Throws on shape violations.
AssocPresentation enveloping_presentation(const SymmetricPresentation& sp,
                                          const AlgebraData& V);

// ---------------------------------------------------------------------------
// Dimensions and the per-algebra PBW comparison
// ---------------------------------------------------------------------------

/// dim F_n of the generator-degree filtration for n = 0..D, computed as the
/// corank of the span of truncated relation consequences u·r·v inside the
/// space of words of length ≤ n.  `max_words` bounds the coordinate space; if
/// some degree would exceed it the report is truncated at the last feasible
/// degree (partial result, never an exception).
std::vector<long long> filtered_dims(const AssocPresentation& ap, int D,
                                     long long max_words = 200000);

struct DimReport {
  std::vector<long long> filtered;   ///< dim F_n of U_P(V), n = 0..checked
  std::vector<long long> graded;     ///< first differences of `filtered`
  std::vector<long long> reference;  ///< dim F_n of U_P(V₀)
  bool match = true;
  int mismatch_at = -1;  ///< first n with filtered[n] != reference[n], or -1
  int checked_to = 0;
};

/// Compares U_P(V) against U_P(V₀) (same presentation, zero structure
/// constants) degree by degree up to D.  A mismatch refutes the PBW property
/// of the enveloping functor; a match is evidence for this algebra only.
DimReport pbw_compare(const SymmetricPresentation& sp, const AlgebraData& V, int D);

}  // namespace opbw
