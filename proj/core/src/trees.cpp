#include "opbw/trees.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace opbw {

// ---------------------------------------------------------------------------
// GeneratorSet
// ---------------------------------------------------------------------------

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> names;
  for (const Generator& g : gens_) {
    if (!valid_name(g.name))
      throw Error(ErrorKind::ParseError,
                  "invalid generator name '" + g.name +
                      "' (want [A-Za-z_][A-Za-z0-9_]*)");
    if (g.arity < 1)
      throw Error(ErrorKind::InvalidTree,
                  "generator '" + g.name + "' has arity < 1");
    if (!names.insert(g.name).second)
      throw Error(ErrorKind::ParseError, "duplicate generator name '" + g.name + "'");
  }
}

int GeneratorSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// Validation + canonical text
// ---------------------------------------------------------------------------

namespace {

/// Validates the subtree, accumulating leaf labels and weight; returns the
/// minimal leaf label.  `path` is the child-index path used in error messages.
int validate_node(const TreeNode& n, const GeneratorSet& gens,
                  const std::string& path, std::vector<int>* labels,
                  int* weight) {
  if (n.is_leaf()) {
    if (n.label < 1)
      throw Error(ErrorKind::InvalidTree,
                  "leaf at vertex " + path + " has non-positive label " +
                      std::to_string(n.label));
    if (!n.children.empty())
      throw Error(ErrorKind::InvalidTree, "leaf at vertex " + path + " has children");
    labels->push_back(n.label);
    return n.label;
  }
  if (n.gen < 0 || n.gen >= gens.size())
    throw Error(ErrorKind::InvalidTree,
                "unknown generator id at vertex " + path);
  const Generator& g = gens[n.gen];
  if (static_cast<int>(n.children.size()) != g.arity)
    throw Error(ErrorKind::InvalidTree,
                "vertex " + path + " (" + g.name + ") has " +
                    std::to_string(n.children.size()) + " children, expected " +
                    std::to_string(g.arity));
  *weight += g.weight;
  int prev_min = 0;
  int my_min = 0;
  for (size_t i = 0; i < n.children.size(); ++i) {
    std::string child_path = path + "." + std::to_string(i);
    int m = validate_node(n.children[i], gens, child_path, labels, weight);
    if (i == 0) {
      my_min = m;
    } else if (m <= prev_min) {
      throw Error(ErrorKind::InvalidTree,
                  "shuffle condition violated at vertex " + path + " (" + g.name +
                      "): child minima " + std::to_string(prev_min) + ", " +
                      std::to_string(m) + " are not strictly increasing");
    }
    my_min = std::min(my_min, m);
    prev_min = m;
  }
  return my_min;
}

void render_text(const TreeNode& n, const GeneratorSet& gens, std::string* out) {
  if (n.is_leaf()) {
    *out += std::to_string(n.label);
    return;
  }
  *out += gens[n.gen].name;
  *out += '(';
  for (size_t i = 0; i < n.children.size(); ++i) {
    if (i) *out += ',';
    render_text(n.children[i], gens, out);
  }
  *out += ')';
}

}  // namespace

ShuffleTree::ShuffleTree() : root_(TreeNode::leaf(1)), arity_(1), weight_(0), text_("1") {}

ShuffleTree ShuffleTree::make(TreeNode root, const GeneratorSet& gens) {
  std::vector<int> labels;
  int weight = 0;
  validate_node(root, gens, "root", &labels, &weight);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw Error(ErrorKind::InvalidTree,
                  "leaf labels are not exactly 1.." + std::to_string(sorted.size()));
  ShuffleTree t;
  t.root_ = std::move(root);
  t.arity_ = static_cast<int>(labels.size());
  t.weight_ = weight;
  t.text_.clear();
  render_text(t.root_, gens, &t.text_);
  return t;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  const GeneratorSet& gens;
  size_t pos = 0;

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                "tree parse error at offset " + std::to_string(pos) + ": " + what +
                    " in '" + s + "'");
  }

  TreeNode parse_node() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
      }
      return TreeNode::leaf(v);
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected leaf label or generator name");
    size_t start = pos;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos;
    std::string name = s.substr(start, pos - start);
    int id = gens.index_of(name);
    if (id < 0) fail("unknown generator '" + name + "'");
    if (peek() != '(') fail("expected '(' after generator '" + name + "'");
    ++pos;
    std::vector<TreeNode> children;
    children.push_back(parse_node());
    while (peek() == ',') {
      ++pos;
      children.push_back(parse_node());
    }
    if (peek() != ')') fail("expected ')' or ','");
    ++pos;
    return TreeNode::node(id, std::move(children));
  }
};

}  // namespace

ShuffleTree parse_tree(const std::string& text, const GeneratorSet& gens) {
  Parser p{text, gens};
  TreeNode n = p.parse_node();
  if (p.pos != text.size()) p.fail("trailing characters");
  ShuffleTree t = ShuffleTree::make(std::move(n), gens);
  if (t.text() != text)
    throw Error(ErrorKind::ParseError,
                "input '" + text + "' is not canonical (canonical form: '" +
                    t.text() + "')");
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

/// Enumerates the partitions of `labels` (sorted ascending) into exactly k
/// nonempty blocks, ordered by their minima; calls sink(blocks).
void foreach_partition(const std::vector<int>& labels, int k,
                       const std::function<void(const std::vector<std::vector<int>>&)>& sink) {
  int n = static_cast<int>(labels.size());
  if (k > n || k < 1) return;
  std::vector<int> assign(n, 0);
  std::vector<std::vector<int>> blocks(k);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (n - i < k - used) return;  // cannot fill remaining blocks
    if (i == n) {
      if (used == k) {
        for (auto& b : blocks) b.clear();
        for (int j = 0; j < n; ++j) blocks[assign[j]].push_back(labels[j]);
        sink(blocks);
      }
      return;
    }
    int limit = std::min(used, k - 1);  // may open block `used` (if < k)
    for (int b = 0; b <= limit; ++b) {
      assign[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

/// All subtree nodes on the given label set, each paired with its weight.
std::vector<std::pair<TreeNode, int>> enum_nodes(const GeneratorSet& gens,
                                                 const std::vector<int>& labels,
                                                 std::optional<int> budget) {
  std::vector<std::pair<TreeNode, int>> out;
  if (labels.size() == 1) out.emplace_back(TreeNode::leaf(labels[0]), 0);
  for (int g = 0; g < gens.size(); ++g) {
    int k = gens[g].arity;
    int w = gens[g].weight;
    if (k > static_cast<int>(labels.size())) continue;
    if (k == 1 && labels.size() > 1) continue;  // unary vertex cannot split labels
    if (budget && w > *budget) continue;
    std::optional<int> child_budget;
    if (budget) child_budget = *budget - w;
    foreach_partition(labels, k, [&](const std::vector<std::vector<int>>& blocks) {
      // Cartesian product of child enumerations, pruned by remaining budget.
      std::vector<std::vector<std::pair<TreeNode, int>>> child_lists;
      child_lists.reserve(k);
      for (const auto& b : blocks) {
        child_lists.push_back(enum_nodes(gens, b, child_budget));
        if (child_lists.back().empty()) return;
      }
      std::vector<TreeNode> chosen(k);
      std::function<void(int, int)> combine = [&](int idx, int wsum) {
        if (budget && wsum > *budget) return;
        if (idx == k) {
          std::vector<TreeNode> ch = chosen;
          out.emplace_back(TreeNode::node(g, std::move(ch)), wsum);
          return;
        }
        for (const auto& [node, nw] : child_lists[idx]) {
          chosen[idx] = node;
          combine(idx + 1, wsum + nw);
        }
      };
      combine(0, w);
    });
  }
  return out;
}

}  // namespace

std::vector<ShuffleTree> enumerate_monomials(const GeneratorSet& gens, int arity,
                                             std::optional<int> max_weight) {
  if (arity < 1)
    throw Error(ErrorKind::InvalidTree, "enumerate_monomials: arity must be >= 1");
  for (const Generator& g : gens.list())
    if (g.arity == 1 && !max_weight)
      throw Error(ErrorKind::Unsupported,
                  "enumerate_monomials: unary generator '" + g.name +
                      "' makes the monomial set infinite; pass max_weight");
  for (const Generator& g : gens.list())
    if (g.arity == 1 && g.weight < 1)
      throw Error(ErrorKind::Unsupported,
                  "enumerate_monomials: unary generator '" + g.name +
                      "' must have weight >= 1");
  std::vector<int> labels(arity);
  for (int i = 0; i < arity; ++i) labels[i] = i + 1;
  std::vector<ShuffleTree> out;
  for (auto& [node, w] : enum_nodes(gens, labels, max_weight)) {
    (void)w;
    out.push_back(ShuffleTree::make(std::move(node), gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Left combs and spine
// ---------------------------------------------------------------------------

namespace {

bool left_comb_node(const TreeNode& n) {
  if (n.is_leaf()) return true;
  for (size_t i = 1; i < n.children.size(); ++i)
    if (!n.children[i].is_leaf()) return false;
  return left_comb_node(n.children[0]);
}

}  // namespace

bool is_left_comb(const ShuffleTree& t) { return left_comb_node(t.root()); }

std::vector<const TreeNode*> preorder_nodes(const TreeNode& root) {
  std::vector<const TreeNode*> out;
  std::function<void(const TreeNode&)> rec = [&](const TreeNode& n) {
    out.push_back(&n);
    for (const TreeNode& c : n.children) rec(c);
  };
  rec(root);
  return out;
}

int subtree_min(const TreeNode& n) {
  if (n.is_leaf()) return n.label;
  int m = subtree_min(n.children[0]);
  for (size_t i = 1; i < n.children.size(); ++i)
    m = std::min(m, subtree_min(n.children[i]));
  return m;
}

ColoredView spine_view(const ShuffleTree& t) {
  ColoredView v;
  v.arity = t.arity();
  std::vector<const TreeNode*> nodes = preorder_nodes(t.root());
  v.on_spine.assign(nodes.size(), false);
  std::map<const TreeNode*, int> id;
  for (size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);
  const TreeNode* cur = &t.root();
  int internal_count = 0;
  for (const TreeNode* n : nodes)
    if (!n->is_leaf()) ++internal_count;
  // The subtree containing the minimal leaf is always the first child, so the
  // path to leaf 1 is the leftmost chain of internal vertices.
  while (!cur->is_leaf()) {
    v.spine_vertices.push_back(id[cur]);
    v.on_spine[id[cur]] = true;
    cur = &cur->children[0];
  }
  v.spine_only = static_cast<int>(v.spine_vertices.size()) == internal_count;
  return v;
}

// ---------------------------------------------------------------------------
// Grafting
// ---------------------------------------------------------------------------

ShuffleTree graft(const GeneratorSet& gens, const ShuffleTree& outer, int leaf,
                  const ShuffleTree& inner, const std::vector<int>& inner_labels) {
  int m = outer.arity();
  int k = inner.arity();
  if (leaf < 1 || leaf > m)
    throw Error(ErrorKind::InvalidTree,
                "graft: leaf " + std::to_string(leaf) + " out of range 1.." +
                    std::to_string(m));
  int total = m + k - 1;
  std::vector<int> inner_new = inner_labels;
  if (inner_new.empty()) {
    for (int i = 0; i < k; ++i) inner_new.push_back(leaf + i);
  }
  if (static_cast<int>(inner_new.size()) != k)
    throw Error(ErrorKind::InvalidRelabel,
                "graft: relabel lists " + std::to_string(inner_new.size()) +
                    " labels for an inner tree of arity " + std::to_string(k));
  std::set<int> inner_set(inner_new.begin(), inner_new.end());
  if (static_cast<int>(inner_set.size()) != k || *inner_set.begin() < 1 ||
      *inner_set.rbegin() > total)
    throw Error(ErrorKind::InvalidRelabel,
                "graft: relabel must be k distinct labels within 1.." +
                    std::to_string(total));
  if (!std::is_sorted(inner_new.begin(), inner_new.end()))
    throw Error(ErrorKind::InvalidRelabel, "graft: relabel must be ascending");

  // Remaining labels, assigned to outer's other leaves in label order.
  std::vector<int> remaining;
  for (int x = 1; x <= total; ++x)
    if (!inner_set.count(x)) remaining.push_back(x);
  std::map<int, int> outer_map;  // old outer label -> new label
  int idx = 0;
  for (int j = 1; j <= m; ++j) {
    if (j == leaf) continue;
    outer_map[j] = remaining[idx++];
  }

  std::function<TreeNode(const TreeNode&)> relabel_inner = [&](const TreeNode& n) {
    if (n.is_leaf()) return TreeNode::leaf(inner_new[n.label - 1]);
    TreeNode out = n;
    for (size_t i = 0; i < n.children.size(); ++i)
      out.children[i] = relabel_inner(n.children[i]);
    return out;
  };
  std::function<TreeNode(const TreeNode&)> build = [&](const TreeNode& n) {
    if (n.is_leaf()) {
      if (n.label == leaf) return relabel_inner(inner.root());
      return TreeNode::leaf(outer_map.at(n.label));
    }
    TreeNode out = n;
    for (size_t i = 0; i < n.children.size(); ++i)
      out.children[i] = build(n.children[i]);
    return out;
  };
  TreeNode result = build(outer.root());
  try {
    return ShuffleTree::make(std::move(result), gens);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidRelabel,
                std::string("graft: relabeling yields a non-shuffle tree: ") +
                    e.what());
  }
}

// ---------------------------------------------------------------------------
// Divisors and substitution
// ---------------------------------------------------------------------------

std::vector<Embedding> divisors(const ShuffleTree& m, const ShuffleTree& d) {
  std::vector<Embedding> out;
  if (d.root().is_leaf()) return out;  // the identity is not treated as a divisor
  if (d.weight() > m.weight() || d.arity() > m.arity()) return out;

  std::vector<const TreeNode*> nodes = preorder_nodes(m.root());
  std::map<const TreeNode*, int> id;
  for (size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);

  for (size_t r = 0; r < nodes.size(); ++r) {
    const TreeNode* root = nodes[r];
    if (root->is_leaf()) continue;
    Embedding emb;
    emb.root = static_cast<int>(r);
    emb.bound.assign(d.arity(), -1);
    bool ok = true;
    std::function<void(const TreeNode&, const TreeNode&)> match =
        [&](const TreeNode& dn, const TreeNode& mn) {
          if (!ok) return;
          if (dn.is_leaf()) {
            emb.bound[dn.label - 1] = id[&mn];
            return;
          }
          if (mn.is_leaf() || mn.gen != dn.gen) {
            ok = false;
            return;
          }
          emb.vertices.push_back(id[&mn]);
          for (size_t i = 0; i < dn.children.size(); ++i)
            match(dn.children[i], mn.children[i]);
        };
    match(d.root(), *root);
    if (!ok) continue;
    // Label consistency: bound subtrees, listed by pattern label, must have
    // strictly increasing minima (the pattern relabels stumps by min order).
    int prev = 0;
    for (int l = 0; l < d.arity() && ok; ++l) {
      int mn = subtree_min(*nodes[emb.bound[l]]);
      if (l > 0 && mn <= prev) ok = false;
      prev = mn;
    }
    if (!ok) continue;
    std::sort(emb.vertices.begin(), emb.vertices.end());
    out.push_back(std::move(emb));
  }
  return out;
}

ShuffleTree substitute(const GeneratorSet& gens, const ShuffleTree& m,
                       const Embedding& emb, const ShuffleTree& replacement) {
  if (replacement.arity() != static_cast<int>(emb.bound.size()))
    throw Error(ErrorKind::ArityMismatch,
                "substitute: replacement arity " +
                    std::to_string(replacement.arity()) + " != pattern arity " +
                    std::to_string(emb.bound.size()));
  std::vector<const TreeNode*> nodes = preorder_nodes(m.root());
  std::map<const TreeNode*, int> id;
  for (size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);

  std::function<TreeNode(const TreeNode&)> clone = [&](const TreeNode& n) { return n; };
  std::function<TreeNode(const TreeNode&)> build_repl = [&](const TreeNode& rn) {
    if (rn.is_leaf()) return clone(*nodes[emb.bound[rn.label - 1]]);
    TreeNode out = rn;
    for (size_t i = 0; i < rn.children.size(); ++i)
      out.children[i] = build_repl(rn.children[i]);
    return out;
  };
  std::function<TreeNode(const TreeNode&)> build = [&](const TreeNode& n) {
    if (id.at(&n) == emb.root) return build_repl(replacement.root());
    TreeNode out = n;
    for (size_t i = 0; i < n.children.size(); ++i)
      out.children[i] = build(n.children[i]);
    return out;
  };
  return ShuffleTree::make(build(m.root()), gens);
}

// ---------------------------------------------------------------------------
// Monomial orders
// ---------------------------------------------------------------------------

std::vector<int> generator_ranks(const MonomialOrder& order, const GeneratorSet& gens) {
  std::vector<int> rank(gens.size());
  if (order.generator_order.empty()) {
    for (int i = 0; i < gens.size(); ++i) rank[i] = i;
    return rank;
  }
  std::vector<bool> seen(gens.size(), false);
  int next = 0;
  for (const std::string& name : order.generator_order) {
    int id = gens.index_of(name);
    if (id < 0)
      throw Error(ErrorKind::ParseError,
                  "monomial order names unknown generator '" + name + "'");
    if (seen[id])
      throw Error(ErrorKind::ParseError,
                  "monomial order repeats generator '" + name + "'");
    seen[id] = true;
    rank[id] = next++;
  }
  for (int i = 0; i < gens.size(); ++i)
    if (!seen[i]) rank[i] = next++;
  return rank;
}

namespace {

/// Root-to-leaf generator word for every leaf (index = label - 1).
std::vector<std::vector<int>> path_words(const ShuffleTree& t) {
  std::vector<std::vector<int>> words(t.arity());
  std::vector<int> cur;
  std::function<void(const TreeNode&)> rec = [&](const TreeNode& n) {
    if (n.is_leaf()) {
      words[n.label - 1] = cur;
      return;
    }
    cur.push_back(n.gen);
    for (const TreeNode& c : n.children) rec(c);
    cur.pop_back();
  };
  rec(t.root());
  return words;
}

/// PathLex per-word comparison: word length decides first (the longer word
/// wins iff longer_prefix_wins), then letters, greater letter (higher
/// priority) winning.  Length must dominate: a grafting context appends the
/// same letters to corresponding words of both trees, which preserves a
/// length verdict but can overturn a letter verdict that was reached past
/// the end of the shorter word.
int word_cmp_pathlex(const std::vector<int>& a, const std::vector<int>& b,
                     const std::vector<int>& rank, bool longer_prefix_wins) {
  if (a.size() != b.size()) {
    bool a_longer = a.size() > b.size();
    return a_longer == longer_prefix_wins ? 1 : -1;
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (rank[a[i]] != rank[b[i]]) return rank[a[i]] < rank[b[i]] ? 1 : -1;
  return 0;
}

/// Degree-lex order on words (shorter = smaller; ties letterwise, greater
/// letter = greater word).  Returns the WORD comparison; the opposite order
/// negates it.
int word_cmp_deglex(const std::vector<int>& a, const std::vector<int>& b,
                    const std::vector<int>& rank) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (rank[a[i]] != rank[b[i]]) return rank[a[i]] < rank[b[i]] ? 1 : -1;
  return 0;
}

/// Leaf labels read left to right in the planar embedding.
std::vector<int> planar_labels(const ShuffleTree& t) {
  std::vector<int> out;
  out.reserve(t.arity());
  std::function<void(const TreeNode&)> rec = [&](const TreeNode& n) {
    if (n.is_leaf()) {
      out.push_back(n.label);
      return;
    }
    for (const TreeNode& c : n.children) rec(c);
  };
  rec(t.root());
  return out;
}

}  // namespace

int compare(const MonomialOrder& order, const GeneratorSet& gens,
            const ShuffleTree& a, const ShuffleTree& b) {
  if (a.arity() != b.arity())
    throw Error(ErrorKind::ArityMismatch,
                "compare: arity " + std::to_string(a.arity()) + " vs " +
                    std::to_string(b.arity()));
  if (a == b) return 0;
  std::vector<int> rank = generator_ranks(order, gens);
  std::vector<std::vector<int>> wa = path_words(a);
  std::vector<std::vector<int>> wb = path_words(b);
  for (int i = 0; i < a.arity(); ++i) {
    int c = 0;
    switch (order.kind) {
      case OrderKind::PathLex:
        c = word_cmp_pathlex(wa[i], wb[i], rank, order.longer_prefix_wins);
        break;
      case OrderKind::PathOppositeDegLex:
        c = -word_cmp_deglex(wa[i], wb[i], rank);
        break;
    }
    if (c != 0) return c;
  }
  // Identical path sequences: break the tie by the planar leaf permutation,
  // the lexicographically smaller permutation giving the smaller monomial.
  // Grafting relabels leaves order-preservingly, so this stays stable under
  // composition; a serialization fallback keeps the order total regardless.
  std::vector<int> pa = planar_labels(a);
  std::vector<int> pb = planar_labels(b);
  for (int i = 0; i < a.arity(); ++i)
    if (pa[i] != pb[i]) return pa[i] < pb[i] ? -1 : 1;
  return a.text() < b.text() ? -1 : 1;
}

}  // namespace opbw
