#include "opbw/dual.hpp"

#include <map>
#include <string>
#include <utility>

#include "opbw/error.hpp"

namespace opbw {

namespace {

Rat eps_of(Shape3 shape) {
  switch (shape) {
    case Shape3::LL: return Rat(1);
    case Shape3::LR: return Rat(-1);
    case Shape3::RR: return Rat(-1);
  }
  throw Error(ErrorKind::Unsupported, "unknown shape");
}

/// η alternates +1, −1 along the generator list.
Rat eta_of(int gen_index) { return gen_index % 2 == 0 ? Rat(1) : Rat(-1); }

constexpr Shape3 kShapes[] = {Shape3::LL, Shape3::LR, Shape3::RR};

}  // namespace

int quadratic_index(int g, Shape3 shape, int outer, int inner) {
  return (static_cast<int>(shape) * g + outer) * g + inner;
}

ShuffleTree shape_monomial(const GeneratorSet& gens, Shape3 shape, int outer,
                           int inner) {
  TreeNode in_node, root;
  switch (shape) {
    case Shape3::LL:
      in_node = TreeNode::node(inner, {TreeNode::leaf(1), TreeNode::leaf(2)});
      root = TreeNode::node(outer, {std::move(in_node), TreeNode::leaf(3)});
      break;
    case Shape3::LR:
      in_node = TreeNode::node(inner, {TreeNode::leaf(1), TreeNode::leaf(3)});
      root = TreeNode::node(outer, {std::move(in_node), TreeNode::leaf(2)});
      break;
    case Shape3::RR:
      in_node = TreeNode::node(inner, {TreeNode::leaf(2), TreeNode::leaf(3)});
      root = TreeNode::node(outer, {TreeNode::leaf(1), std::move(in_node)});
      break;
  }
  return ShuffleTree::make(std::move(root), gens);
}

void classify_quadratic(const ShuffleTree& m, Shape3* shape, int* outer,
                        int* inner) {
  if (m.arity() != 3 || m.weight() != 2)
    throw Error(ErrorKind::Unsupported,
                "not a weight-2 arity-3 monomial: " + m.text());
  const TreeNode& r = m.root();
  if (r.children.size() != 2)
    throw Error(ErrorKind::Unsupported,
                "quadratic classification needs binary vertices: " + m.text());
  *outer = r.gen;
  if (!r.children[0].is_leaf()) {
    const TreeNode& in_node = r.children[0];
    *inner = in_node.gen;
    *shape = in_node.children[1].label == 2 ? Shape3::LL : Shape3::LR;
  } else {
    *shape = Shape3::RR;
    *inner = r.children[1].gen;
  }
}

QuadraticData quadratic_data(const Presentation& p) {
  const int g = p.gens.size();
  if (g == 0)
    throw Error(ErrorKind::Unsupported,
                "quadratic duality needs at least one generator");
  for (const Generator& gen : p.gens.list())
    if (gen.arity != 2)
      throw Error(ErrorKind::Unsupported,
                  "quadratic duality needs binary generators; '" + gen.name +
                      "' has arity " + std::to_string(gen.arity));

  QuadraticData qd;
  qd.gens = p.gens;
  qd.basis.reserve(static_cast<size_t>(3) * g * g);
  qd.pairing_signs.reserve(static_cast<size_t>(3) * g * g);
  std::map<std::string, int> index;
  for (Shape3 shape : kShapes)
    for (int o = 0; o < g; ++o)
      for (int i = 0; i < g; ++i) {
        ShuffleTree m = shape_monomial(p.gens, shape, o, i);
        index[m.text()] = static_cast<int>(qd.basis.size());
        qd.basis.push_back(std::move(m));
        qd.pairing_signs.push_back(eps_of(shape) * eta_of(o) * eta_of(i));
      }

  for (const Element& rel : p.relations) {
    if (rel.is_zero())
      throw Error(ErrorKind::ZeroElement, "zero relation in quadratic data");
    if (rel.arity != 3 || rel.weight() != std::optional<int>(2))
      throw Error(ErrorKind::Unsupported,
                  "quadratic duality needs weight-2 relations");
    Vec row(qd.basis.size(), Rat(0));
    for (const auto& [m, c] : rel.terms) row[index.at(m.text())] = c;
    qd.relation_rows.push_back(std::move(row));
  }
  return qd;
}

Presentation quadratic_dual(const Presentation& p) {
  QuadraticData qd = quadratic_data(p);
  const int g = qd.gens.size();

  std::vector<Generator> dual_list;
  for (const Generator& gen : qd.gens.list())
    dual_list.push_back({gen.name + "_d", 2, 1});
  GeneratorSet dual_gens(std::move(dual_list));

  // The annihilator of the relation span under the diagonal signed pairing
  // is the nullspace of the sign-scaled relation rows.
  Mat scaled = qd.relation_rows;
  for (Vec& row : scaled)
    for (size_t m = 0; m < row.size(); ++m) row[m] *= qd.pairing_signs[m];

  Presentation out;
  out.gens = dual_gens;
  for (const Vec& w : nullspace(scaled, 3 * g * g)) {
    Element e;
    int idx = 0;
    for (Shape3 shape : kShapes)
      for (int o = 0; o < g; ++o)
        for (int i = 0; i < g; ++i, ++idx)
          if (w[idx] != 0)
            e.add(shape_monomial(dual_gens, shape, o, i), w[idx]);
    out.relations.push_back(std::move(e));
  }
  return out;
}

}  // namespace opbw
