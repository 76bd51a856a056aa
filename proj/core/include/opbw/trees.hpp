#pragma once
/**
 * Shuffle-tree monomials.
 *
 * A shuffle tree of arity n is a planar rooted tree whose leaves are labeled
 * bijectively by 1..n and whose internal vertices carry generators, subject to
 * the shuffle condition: at every internal vertex the minimal leaf labels of
 * the child subtrees strictly increase from left to right.  Shuffle trees are
 * the monomials of free shuffle operads; the canonical text serialization
 * (prefix traversal, e.g. "m(m(1,2),3)") doubles as the equality/hash key and
 * round-trips bit-exactly through parse_tree.
 *
 * The module also provides:
 *  - enumeration of all monomials of a given arity (ascending canonical order),
 *  - grafting with explicit leaf relabeling (invalid relabelings are rejected
 *    with a structured error naming the offending vertex — never re-sorted),
 *  - divisor embeddings (connected vertex subsets matching a smaller monomial
 *    after relabeling bound subtrees by their minimal leaves),
 *  - two admissible monomial orders (path-lexicographic and
 *    path-opposite-degree-lexicographic) driven by per-leaf generator words,
 *  - the left-comb predicate and the spine view used by the one-colored
 *    derivative constructions.
 */

#include <optional>
#include <string>
#include <vector>

#include "opbw/error.hpp"

namespace opbw {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

struct Generator {
  std::string name;
  int arity = 2;
  int weight = 1;  // weight grading; defaults to 1 per vertex
};

/// An ordered list of generators; the listing order is the default generator
/// priority for monomial orders (first = greatest).
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](int id) const { return gens_[id]; }
  const std::vector<Generator>& list() const { return gens_; }

  /// Index of the named generator, or -1.
  int index_of(const std::string& name) const;

 private:
  std::vector<Generator> gens_;
};

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Plain recursive node: gen >= 0 selects a generator (children.size() must
/// equal its arity); gen == -1 is a leaf carrying `label`.
struct TreeNode {
  int gen = -1;
  int label = 0;
  std::vector<TreeNode> children;

  static TreeNode leaf(int label) { return TreeNode{-1, label, {}}; }
  static TreeNode node(int gen, std::vector<TreeNode> ch) {
    return TreeNode{gen, 0, std::move(ch)};
  }
  bool is_leaf() const { return gen < 0; }
};

/// Immutable validated shuffle tree.  Equality, hashing and container order
/// all use the canonical text, so byte equality is structural equality.
class ShuffleTree {
 public:
  /// The arity-1 identity monomial: a single leaf labeled 1.
  ShuffleTree();

  /// Validates the node against the generator set and freezes it.
  /// Throws Error(InvalidTree) naming the offending vertex on violation.
  static ShuffleTree make(TreeNode root, const GeneratorSet& gens);

  const TreeNode& root() const { return root_; }
  int arity() const { return arity_; }
  int weight() const { return weight_; }
  /// Canonical serialization, e.g. "m(m(1,2),3)".
  const std::string& text() const { return text_; }

  bool operator==(const ShuffleTree& o) const { return text_ == o.text_; }
  bool operator!=(const ShuffleTree& o) const { return text_ != o.text_; }
  /// Canonical-serialization order (deterministic container order; this is
  /// NOT the monomial order used by Groebner reduction — see compare()).
  bool operator<(const ShuffleTree& o) const { return text_ < o.text_; }

 private:
  TreeNode root_;
  int arity_ = 1;
  int weight_ = 0;
  std::string text_;
};

/// Parses the canonical serialization back into a tree (strict: the input must
/// be exactly the canonical form of a valid shuffle tree).
ShuffleTree parse_tree(const std::string& text, const GeneratorSet& gens);

// ---------------------------------------------------------------------------
// Enumeration, grafting, divisors
// ---------------------------------------------------------------------------

/// All shuffle monomials of the given arity over `gens`, in ascending
/// canonical-serialization order.  `max_weight` bounds the total weight; it is
/// required when a unary generator is present (otherwise the set is infinite).
std::vector<ShuffleTree> enumerate_monomials(
    const GeneratorSet& gens, int arity,
    std::optional<int> max_weight = std::nullopt);

/// True iff no vertex has a non-leaf child other than its first child
/// (equivalently: the tree grows only along the leftmost spine).
bool is_left_comb(const ShuffleTree& t);

/// Grafts `inner` into leaf `leaf` of `outer`.  `inner_labels` lists, in
/// ascending order, the labels of the combined tree assigned to inner's
/// leaves; the remaining labels go to outer's other leaves preserving their
/// relative order.  An empty `inner_labels` means the contiguous block
/// {leaf, ..., leaf+inner.arity()-1} (the "identity" relabeling).  If the
/// resulting planar tree violates the shuffle condition, throws
/// Error(InvalidRelabel) naming the offending vertex; nothing is re-sorted.
ShuffleTree graft(const GeneratorSet& gens, const ShuffleTree& outer, int leaf,
                  const ShuffleTree& inner,
                  const std::vector<int>& inner_labels = {});

/// A divisor occurrence of a pattern d inside a monomial m: a connected set of
/// internal vertices of m whose induced monomial (bound subtrees collapsed to
/// leaves, relabeled by increasing subtree minima) equals d.
struct Embedding {
  int root = 0;                ///< preorder id (over all nodes of m) of the image of d's root
  std::vector<int> vertices;   ///< preorder ids of all matched internal vertices
  std::vector<int> bound;      ///< bound[l-1] = preorder id of the subtree bound to pattern leaf l
};

/// All embeddings of d into m (exhaustive, duplicate-free, ordered by root id).
std::vector<Embedding> divisors(const ShuffleTree& m, const ShuffleTree& d);

/// Replaces the embedded occurrence in m by `replacement` (same arity as the
/// pattern d that produced `emb`); pattern leaf l takes the subtree bound[l-1].
/// The result is automatically a valid shuffle tree with the same global leaf
/// labels as m.
ShuffleTree substitute(const GeneratorSet& gens, const ShuffleTree& m,
                       const Embedding& emb, const ShuffleTree& replacement);

// ---------------------------------------------------------------------------
// Monomial orders
// ---------------------------------------------------------------------------

enum class OrderKind {
  PathLex,             ///< leaf-by-leaf path words, longer word first, then letters
  PathOppositeDegLex,  ///< greater monomial = degree-lex smaller leaf-1 path word
};

struct MonomialOrder {
  OrderKind kind = OrderKind::PathLex;
  /// Generator priority, greatest first; empty = the GeneratorSet order.
  std::vector<std::string> generator_order;
  /// PathLex word-length direction: true (default) = the longer path word is
  /// the greater one; in particular a word beats its proper prefixes.
  bool longer_prefix_wins = true;
};

/// Three-way comparison in the given admissible order: -1 if a < b, 0 if
/// equal, +1 if a > b.  Throws Error(ArityMismatch) when arities differ.
int compare(const MonomialOrder& order, const GeneratorSet& gens,
            const ShuffleTree& a, const ShuffleTree& b);

// ---------------------------------------------------------------------------
// Spine view
// ---------------------------------------------------------------------------

/// Read-only view of the path from the leaf labeled 1 up to the root (the
/// "spine"), as used by the two-colored derivative: spine vertices correspond
/// to the operator letters of a left-comb word.
struct ColoredView {
  int arity = 1;
  std::vector<int> spine_vertices;  ///< preorder ids, root first, down to the parent of leaf 1
  std::vector<bool> on_spine;       ///< per preorder id (internal vertices only meaningful)
  bool spine_only = false;          ///< true iff every internal vertex lies on the spine
};

ColoredView spine_view(const ShuffleTree& t);

// ---------------------------------------------------------------------------
// Utilities shared by the engine
// ---------------------------------------------------------------------------

/// Preorder pointers to every node (internal and leaf) of t's root.
std::vector<const TreeNode*> preorder_nodes(const TreeNode& root);

/// Smallest leaf label in the subtree.
int subtree_min(const TreeNode& n);

/// Resolves the generator priority ranks for an order (rank 0 = greatest).
/// Throws Error(ParseError) if a named generator does not exist.
std::vector<int> generator_ranks(const MonomialOrder& order,
                                 const GeneratorSet& gens);

}  // namespace opbw
