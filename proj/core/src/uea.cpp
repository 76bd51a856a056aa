#include "opbw/uea.hpp"

#include <algorithm>
#include <array>

#include "opbw/error.hpp"

namespace opbw {

namespace {

int k_of(const SymmetricPresentation& sp) {
  return static_cast<int>(sp.gen_names.size());
}

void require_square(const Mat& m, int k, const char* what) {
  if (static_cast<int>(m.size()) != k)
    throw Error(ErrorKind::ParseError, std::string(what) + ": expected " +
                                           std::to_string(k) + " rows");
  for (const Vec& row : m)
    if (static_cast<int>(row.size()) != k)
      throw Error(ErrorKind::ParseError, std::string(what) + ": expected " +
                                             std::to_string(k) + " columns");
}

// Shape coordinates for arity-3 elements: ll = γ_i(γ_j(x1,x2),x3),
// lr = γ_i(γ_j(x1,x3),x2), rr = γ_i(x1,γ_j(x2,x3)).
enum Shape { LL = 0, LR = 1, RR = 2 };

int coord(int shape, int i, int j, int k) { return shape * k * k + i * k + j; }

struct Canonicalizer {
  const Mat& M;  // transposition action
  int k;
  Vec& out;

  // γ_i(γ_j(x_u, x_v), x_w) with {u,v,w} = {1,2,3}.
  void left(int i, int j, int u, int v, int w, const Rat& q) {
    if (q == 0) return;
    if (u > v) {
      for (int j2 = 0; j2 < k; ++j2) left(i, j2, v, u, w, q * M[j][j2]);
      return;
    }
    if (u < w) {
      out[coord(v == 2 ? LL : LR, i, j, k)] += q;
      return;
    }
    // u > w: move x_w to the first slot through the transposition.
    for (int i2 = 0; i2 < k; ++i2) right(i2, j, w, u, v, q * M[i][i2]);
  }

  // γ_i(x_w, γ_j(x_u, x_v)) with {u,v,w} = {1,2,3}.
  void right(int i, int j, int w, int u, int v, const Rat& q) {
    if (q == 0) return;
    if (u > v) {
      for (int j2 = 0; j2 < k; ++j2) right(i, j2, w, v, u, q * M[j][j2]);
      return;
    }
    if (w < u) {
      out[coord(RR, i, j, k)] += q;
      return;
    }
    for (int i2 = 0; i2 < k; ++i2) left(i2, j, u, v, w, q * M[i][i2]);
  }
};

/// The relation with x_l renamed to x_{perm[l-1]}, as a 3k² coordinate vector.
Vec relabeled_vector(const SymmetricPresentation& sp, const SymmetricRelation& r,
                     const std::array<int, 3>& perm) {
  int k = k_of(sp);
  Vec out(3 * k * k, Rat(0));
  Canonicalizer canon{sp.transposition, k, out};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      canon.left(i, j, perm[0], perm[1], perm[2], r.a[i][j]);
      canon.left(i, j, perm[0], perm[2], perm[1], r.b[i][j]);
      canon.right(i, j, perm[0], perm[1], perm[2], r.c[i][j]);
    }
  return out;
}

Mat zero_mat(int k) { return Mat(k, Vec(k, Rat(0))); }

}  // namespace

void validate_symmetric(const SymmetricPresentation& sp) {
  int k = k_of(sp);
  if (k == 0) throw Error(ErrorKind::ParseError, "no binary operations listed");
  require_square(sp.transposition, k, "transposition");
  // Involution: applying the transposition twice is the identity.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat s(0);
      for (int l = 0; l < k; ++l)
        s += sp.transposition[i][l] * sp.transposition[l][j];
      if (s != Rat(i == j ? 1 : 0))
        throw Error(ErrorKind::ParseError, "transposition is not an involution");
    }
  for (const SymmetricRelation& r : sp.relations) {
    require_square(r.a, k, "relation matrix a");
    require_square(r.b, k, "relation matrix b");
    require_square(r.c, k, "relation matrix c");
  }
}

std::vector<SymmetricRelation> saturate_relations(const SymmetricPresentation& sp) {
  validate_symmetric(sp);
  int k = k_of(sp);
  static const std::array<std::array<int, 3>, 6> perms = {
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  Mat rows;
  for (const SymmetricRelation& r : sp.relations)
    for (const auto& perm : perms) {
      Vec v = relabeled_vector(sp, r, perm);
      if (std::any_of(v.begin(), v.end(), [](const Rat& q) { return q != 0; }))
        rows.push_back(std::move(v));
    }
  Mat basis = rref(std::move(rows));
  std::vector<SymmetricRelation> out;
  for (const Vec& row : basis) {
    SymmetricRelation r{zero_mat(k), zero_mat(k), zero_mat(k)};
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        r.a[i][j] = row[coord(LL, i, j, k)];
        r.b[i][j] = row[coord(LR, i, j, k)];
        r.c[i][j] = row[coord(RR, i, j, k)];
      }
    out.push_back(std::move(r));
  }
  return out;
}

Presentation shuffle_expand(const SymmetricPresentation& sp) {
  std::vector<SymmetricRelation> sat = saturate_relations(sp);
  std::vector<Generator> gens;
  for (const std::string& name : sp.gen_names) gens.push_back({name, 2, 1});
  GeneratorSet gset(gens);

  int k = k_of(sp);
  auto tree = [&](int shape, int i, int j) {
    TreeNode l1 = TreeNode::leaf(1), l2 = TreeNode::leaf(2), l3 = TreeNode::leaf(3);
    TreeNode n;
    switch (shape) {
      case LL: n = TreeNode::node(i, {TreeNode::node(j, {l1, l2}), l3}); break;
      case LR: n = TreeNode::node(i, {TreeNode::node(j, {l1, l3}), l2}); break;
      default: n = TreeNode::node(i, {l1, TreeNode::node(j, {l2, l3})}); break;
    }
    return ShuffleTree::make(std::move(n), gset);
  };

  Presentation p{gset, {}};
  for (const SymmetricRelation& r : sat) {
    Element e;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (r.a[i][j] != 0) e.add(tree(LL, i, j), r.a[i][j]);
        if (r.b[i][j] != 0) e.add(tree(LR, i, j), r.b[i][j]);
        if (r.c[i][j] != 0) e.add(tree(RR, i, j), r.c[i][j]);
      }
    if (!e.is_zero()) p.relations.push_back(std::move(e));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

void validate_algebra_shapes(const SymmetricPresentation& sp, const AlgebraData& V) {
  int k = k_of(sp);
  int d = V.dim;
  if (d < 0) throw Error(ErrorKind::ParseError, "negative algebra dimension");
  if (!V.basis.empty() && static_cast<int>(V.basis.size()) != d)
    throw Error(ErrorKind::ParseError, "basis name count does not match dim");
  if (static_cast<int>(V.structure.size()) != k)
    throw Error(ErrorKind::ParseError,
                "expected one structure table per binary operation");
  for (const auto& table : V.structure) {
    if (static_cast<int>(table.size()) != d)
      throw Error(ErrorKind::ParseError, "structure table has wrong row count");
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != d)
        throw Error(ErrorKind::ParseError, "structure table has wrong column count");
      for (const Vec& entry : row)
        if (static_cast<int>(entry.size()) != d)
          throw Error(ErrorKind::ParseError, "structure vector has wrong length");
    }
  }
}

namespace {

/// γ_i applied to coordinate vectors by bilinear extension.
Vec apply_op(const AlgebraData& V, int i, const Vec& x, const Vec& y) {
  Vec out(V.dim, Rat(0));
  for (int a = 0; a < V.dim; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < V.dim; ++b) {
      if (y[b] == 0) continue;
      Rat f = x[a] * y[b];
      const Vec& s = V.structure[i][a][b];
      for (int t = 0; t < V.dim; ++t) out[t] += f * s[t];
    }
  }
  return out;
}

Vec basis_vec(int d, int a) {
  Vec v(d, Rat(0));
  v[a] = 1;
  return v;
}

}  // namespace

bool algebra_satisfies_relations(const SymmetricPresentation& sp,
                                 const AlgebraData& V) {
  validate_symmetric(sp);
  validate_algebra_shapes(sp, V);
  int k = k_of(sp);
  int d = V.dim;
  // Transposition equivariance: γ_i(e_y, e_x) = Σ_j M[i][j] γ_j(e_x, e_y).
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int t = 0; t < d; ++t) {
          Rat rhs(0);
          for (int j = 0; j < k; ++j)
            rhs += sp.transposition[i][j] * V.structure[j][x][y][t];
          if (V.structure[i][y][x][t] != rhs) return false;
        }
  // Listed relations vanish on all basis triples (relabelings follow).
  for (const SymmetricRelation& r : sp.relations)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          Vec ex = basis_vec(d, x), ey = basis_vec(d, y), ez = basis_vec(d, z);
          Vec acc(d, Rat(0));
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
              if (r.a[i][j] != 0) {
                Vec inner = V.structure[j][x][y];
                Vec outer = apply_op(V, i, inner, ez);
                for (int t = 0; t < d; ++t) acc[t] += r.a[i][j] * outer[t];
              }
              if (r.b[i][j] != 0) {
                Vec inner = V.structure[j][x][z];
                Vec outer = apply_op(V, i, inner, ey);
                for (int t = 0; t < d; ++t) acc[t] += r.b[i][j] * outer[t];
              }
              if (r.c[i][j] != 0) {
                Vec inner = V.structure[j][y][z];
                Vec outer = apply_op(V, i, ex, inner);
                for (int t = 0; t < d; ++t) acc[t] += r.c[i][j] * outer[t];
              }
            }
          for (int t = 0; t < d; ++t)
            if (acc[t] != 0) return false;
        }
  return true;
}

AlgebraData trivial_algebra(const AlgebraData& V) {
  AlgebraData z = V;
  for (auto& table : z.structure)
    for (auto& row : table)
      for (Vec& entry : row) std::fill(entry.begin(), entry.end(), Rat(0));
  return z;
}

// ---------------------------------------------------------------------------
// Enveloping presentation
// ---------------------------------------------------------------------------

AssocPresentation enveloping_presentation(const SymmetricPresentation& sp,
                                          const AlgebraData& V) {
  validate_symmetric(sp);
  validate_algebra_shapes(sp, V);
  int k = k_of(sp);
  int d = V.dim;
  auto id = [d](int i, int a) { return i * d + a; };

  AssocPresentation ap;
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < d; ++a) {
      std::string base = V.basis.empty() ? "e" + std::to_string(a + 1) : V.basis[a];
      ap.generators.push_back({i, a, "d" + sp.gen_names[i] + "_" + base});
    }

  std::vector<SymmetricRelation> sat = saturate_relations(sp);
  for (const SymmetricRelation& r : sat)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        NCPoly poly;
        auto add = [&poly](Word w, const Rat& q) {
          if (q == 0) return;
          Rat& slot = poly[std::move(w)];
          slot += q;
          // Zero entries are cleaned up below.
        };
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            // v = e_a, w = e_b.
            add({id(i, b), id(j, a)}, r.a[i][j]);
            add({id(i, a), id(j, b)}, r.b[i][j]);
            if (r.c[i][j] != 0)
              for (int x = 0; x < d; ++x)
                add({id(i, x)}, r.c[i][j] * V.structure[j][a][b][x]);
          }
        for (auto it = poly.begin(); it != poly.end();)
          it = (it->second == 0) ? poly.erase(it) : std::next(it);
        if (!poly.empty()) ap.relations.push_back(std::move(poly));
      }
  return ap;
}

// ---------------------------------------------------------------------------
// Filtered dimensions
// ---------------------------------------------------------------------------

namespace {

void enumerate_words(int letters, int length, Word& cur, std::vector<Word>& out) {
  if (length == 0) {
    out.push_back(cur);
    return;
  }
  for (int l = 0; l < letters; ++l) {
    cur.push_back(l);
    enumerate_words(letters, length - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<long long> filtered_dims(const AssocPresentation& ap, int D,
                                     long long max_words) {
  if (D < 0) throw Error(ErrorKind::ParseError, "negative truncation degree");
  int m = static_cast<int>(ap.generators.size());
  std::vector<long long> dims;
  for (int n = 0; n <= D; ++n) {
    // Word space of length <= n.
    long long total = 0, pw = 1;
    bool overflow = false;
    for (int j = 0; j <= n; ++j) {
      total += pw;
      if (total > max_words) {
        overflow = true;
        break;
      }
      pw *= m;
    }
    if (overflow) break;  // partial report

    std::vector<Word> words;
    std::map<Word, int> index;
    {
      Word cur;
      for (int j = 0; j <= n; ++j) enumerate_words(m, j, cur, words);
      for (size_t w = 0; w < words.size(); ++w) index[words[w]] = static_cast<int>(w);
    }

    // Consequences u · r · v whose top-degree terms have length <= n; the
    // context budget depends on the top degree of r (relations whose
    // quadratic part cancels act with a longer context allowance).
    Mat rows;
    for (const NCPoly& r : ap.relations) {
      size_t deg = 0;
      for (const auto& [w, q] : r) deg = std::max(deg, w.size());
      std::vector<Word> contexts;
      Word cur;
      for (int j = 0; j + static_cast<int>(deg) <= n; ++j)
        enumerate_words(m, j, cur, contexts);
      for (const Word& ctx : contexts)
        for (size_t cut = 0; cut <= ctx.size(); ++cut) {
          Vec row(words.size(), Rat(0));
          for (const auto& [w, q] : r) {
            Word full(ctx.begin(), ctx.begin() + cut);
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), ctx.begin() + cut, ctx.end());
            row[index.at(full)] += q;
          }
          rows.push_back(std::move(row));
        }
    }
    dims.push_back(total - rank(rows));
  }
  return dims;
}

DimReport pbw_compare(const SymmetricPresentation& sp, const AlgebraData& V, int D) {
  AssocPresentation ap = enveloping_presentation(sp, V);
  AssocPresentation ap0 = enveloping_presentation(sp, trivial_algebra(V));
  DimReport rep;
  rep.filtered = filtered_dims(ap, D);
  rep.reference = filtered_dims(ap0, D);
  size_t checked = std::min(rep.filtered.size(), rep.reference.size());
  rep.checked_to = static_cast<int>(checked) - 1;
  for (size_t n = 0; n < checked; ++n) {
    rep.graded.push_back(rep.filtered[n] - (n == 0 ? 0 : rep.filtered[n - 1]));
    if (rep.match && rep.filtered[n] != rep.reference[n]) {
      rep.match = false;
      rep.mismatch_at = static_cast<int>(n);
    }
  }
  return rep;
}

}  // namespace opbw
