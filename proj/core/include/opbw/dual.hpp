#pragma once
/**
 * Quadratic (Koszul) duality for binary quadratic shuffle presentations.
 *
 * The weight-2, arity-3 component of the free shuffle operad on g binary
 * generators has the 3g² monomial basis
 *
 *     LL(o,i) = γ_o(γ_i(1,2),3),
 *     LR(o,i) = γ_o(γ_i(1,3),2),
 *     RR(o,i) = γ_o(1,γ_i(2,3)),
 *
 * indexed shape-major, then by outer and inner generator.  The dual of a
 * presentation whose relations span R inside this component is the
 * presentation on dual generators (primal names with a "_d" suffix, same
 * order) whose relations span the annihilator of R under the diagonal signed
 * pairing
 *
 *     <shape(γ*_o, γ*_i), shape'(γ_u, γ_v)>
 *         = δ_{shape,shape'} δ_{o,u} δ_{i,v} · ε(shape) · η(o) · η(i),
 *
 * with ε = (LL:+1, LR:−1, RR:−1) and η alternating +1, −1, +1, … along the
 * generator list.  Quadratic duality is only defined up to basis change on
 * this pairing; the convention above is one global choice, frozen by golden
 * tests (the dual of the Lie-bracket presentation is the commutative one, the
 * dual of the pre-Lie presentation is Perm).  Any convention passing those
 * vectors yields the same dimension series, which is all downstream
 * consumers (the generating-series necessary condition) use.
 *
 * Dimensions always satisfy the complement identity
 *     dim R + dim R^⊥ = 3g².
 *
 * Input must be a shuffle presentation; symmetric binary data is expanded
 * first with shuffle_expand (enveloping-algebra module).
 */

#include <vector>

#include "opbw/groebner.hpp"
#include "opbw/linalg.hpp"

namespace opbw {

/// The three shapes of a weight-2 arity-3 monomial on binary generators.
enum class Shape3 { LL, LR, RR };

/// Decomposition of the weight-2 arity-3 component: the ordered monomial
/// basis, the relation row space in that basis, and the pairing signs.
struct QuadraticData {
  GeneratorSet gens;
  std::vector<ShuffleTree> basis;  ///< size 3g²; see quadratic_index
  Mat relation_rows;               ///< one row per input relation
  std::vector<Rat> pairing_signs;  ///< per basis index: ε(shape)·η(o)·η(i)
};

/// Index of (shape, outer, inner) in the quadratic basis: shape-major,
/// then outer, then inner.
int quadratic_index(int g, Shape3 shape, int outer, int inner);

/// The arity-3 monomial with the given shape and vertex generators.
ShuffleTree shape_monomial(const GeneratorSet& gens, Shape3 shape, int outer,
                           int inner);

/// Classifies an arity-3 weight-2 monomial on binary generators.
/// Throws Error(Unsupported) for any other monomial.
void classify_quadratic(const ShuffleTree& m, Shape3* shape, int* outer,
                        int* inner);

/// Validates the presentation (binary generators, nonzero weight-2
/// relations) and assembles the quadratic data.  Throws Error(Unsupported)
/// on a non-binary generator or a non-quadratic relation, Error(ZeroElement)
/// on a zero relation.
QuadraticData quadratic_data(const Presentation& p);

/// The quadratic dual presentation.  Relation count equals
/// 3g² − rank(relations of p); see the header comment for the convention.
Presentation quadratic_dual(const Presentation& p);

}  // namespace opbw
