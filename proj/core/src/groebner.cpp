#include "opbw/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace opbw {

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

void Element::add(const ShuffleTree& m, const Rat& c) {
  if (c == 0) return;
  if (terms.empty()) {
    arity = m.arity();
  } else if (m.arity() != arity) {
    throw Error(ErrorKind::ArityMismatch,
                "element mixes arities " + std::to_string(arity) + " and " +
                    std::to_string(m.arity()));
  }
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  if (terms.empty()) arity = 0;
}

std::optional<int> Element::weight() const {
  if (terms.empty()) return std::nullopt;
  int w = terms.begin()->first.weight();
  for (const auto& [m, c] : terms)
    if (m.weight() != w) return std::nullopt;
  return w;
}

int Element::top_weight() const {
  int w = 0;
  for (const auto& [m, c] : terms) w = std::max(w, m.weight());
  return w;
}

Element Element::scaled(const Rat& c) const {
  Element out;
  if (c == 0) return out;
  out.arity = arity;
  for (const auto& [m, v] : terms) out.terms.emplace(m, v * c);
  return out;
}

Element Element::minus(const Element& other) const {
  Element out = *this;
  for (const auto& [m, v] : other.terms) out.add(m, -v);
  return out;
}

const ShuffleTree& leading_monomial(const Element& e, const MonomialOrder& order,
                                    const GeneratorSet& gens) {
  if (e.is_zero())
    throw Error(ErrorKind::ZeroElement, "leading monomial of the zero element");
  int top = e.top_weight();
  const ShuffleTree* best = nullptr;
  for (const auto& [m, c] : e.terms) {
    if (m.weight() != top) continue;
    if (!best || compare(order, gens, m, *best) > 0) best = &m;
  }
  return *best;
}

Rat leading_coefficient(const Element& e, const MonomialOrder& order,
                        const GeneratorSet& gens) {
  return e.terms.at(leading_monomial(e, order, gens));
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace {

/// First divisor occurrence of any basis leading monomial inside T.
/// Returns (basis index, embedding) or basis index -1.
std::pair<int, Embedding> find_divisor(const ShuffleTree& T,
                                       const std::vector<const ShuffleTree*>& lms) {
  for (size_t i = 0; i < lms.size(); ++i) {
    if (lms[i]->arity() > T.arity() || lms[i]->weight() > T.weight()) continue;
    std::vector<Embedding> embs = divisors(T, *lms[i]);
    if (!embs.empty()) return {static_cast<int>(i), embs.front()};
  }
  return {-1, {}};
}

Element make_monic(const Element& e, const MonomialOrder& order,
                   const GeneratorSet& gens) {
  Rat lc = leading_coefficient(e, order, gens);
  return e.scaled(Rat(1) / lc);
}

}  // namespace

Element reduce(const Element& e, const std::vector<Element>& basis,
               const MonomialOrder& order, const GeneratorSet& gens) {
  std::vector<const ShuffleTree*> lms;
  std::vector<Rat> lcs;
  lms.reserve(basis.size());
  for (const Element& g : basis) {
    lms.push_back(&leading_monomial(g, order, gens));
    lcs.push_back(g.terms.at(*lms.back()));
  }
  Element work = e;
  Element result;
  while (!work.is_zero()) {
    const ShuffleTree T = leading_monomial(work, order, gens);
    Rat c = work.terms.at(T);
    auto [gi, emb] = find_divisor(T, lms);
    if (gi < 0) {
      result.add(T, c);
      work.terms.erase(T);
      if (work.terms.empty()) work.arity = 0;
      continue;
    }
    Rat factor = c / lcs[gi];
    for (const auto& [m, cm] : basis[gi].terms) {
      ShuffleTree img = substitute(gens, T, emb, m);
      work.add(img, -factor * cm);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Overlaps (small common multiples)
// ---------------------------------------------------------------------------

namespace {

void require_no_unary(const GeneratorSet& gens, const char* who) {
  for (const Generator& g : gens.list())
    if (g.arity < 2)
      throw Error(ErrorKind::Unsupported,
                  std::string(who) + ": unary generator '" + g.name +
                      "' not supported (monomial sets per arity become infinite)");
}

/// One-step rewriting of T by the monic scaling of g at the embedding:
/// the element (1/lc) * (image of every term of g in the context).
Element rewrite_at(const ShuffleTree& T, const Element& g, const Embedding& emb,
                   const MonomialOrder& order, const GeneratorSet& gens) {
  Rat lc = leading_coefficient(g, order, gens);
  Element out;
  for (const auto& [m, c] : g.terms)
    out.add(substitute(gens, T, emb, m), c / lc);
  return out;
}

/// S-elements of (g1, g2) over common multiples of one fixed arity.
/// `monomials` must be the full monomial list of that arity.
std::vector<Element> overlaps_at_arity(const Element& g1, const Element& g2,
                                       const MonomialOrder& order,
                                       const GeneratorSet& gens,
                                       const std::vector<ShuffleTree>& monomials) {
  const ShuffleTree& lm1 = leading_monomial(g1, order, gens);
  const ShuffleTree& lm2 = leading_monomial(g2, order, gens);
  bool same = g1.terms == g2.terms;
  int wbound = lm1.weight() + lm2.weight() - 1;
  std::vector<Element> out;
  for (const ShuffleTree& T : monomials) {
    if (T.weight() > wbound) continue;
    std::vector<Embedding> E1 = divisors(T, lm1);
    if (E1.empty()) continue;
    std::vector<Embedding> E2 = divisors(T, lm2);
    if (E2.empty()) continue;
    int internal = 0;
    for (const TreeNode* n : preorder_nodes(T.root()))
      if (!n->is_leaf()) ++internal;
    for (const Embedding& e1 : E1) {
      for (const Embedding& e2 : E2) {
        if (same && e1.root == e2.root) continue;     // identical occurrence
        if (same && e2.root < e1.root) continue;      // mirror duplicate
        std::vector<int> uni, inter;
        std::set_union(e1.vertices.begin(), e1.vertices.end(),
                       e2.vertices.begin(), e2.vertices.end(),
                       std::back_inserter(uni));
        if (static_cast<int>(uni.size()) != internal) continue;  // not a small common multiple
        std::set_intersection(e1.vertices.begin(), e1.vertices.end(),
                              e2.vertices.begin(), e2.vertices.end(),
                              std::back_inserter(inter));
        if (inter.empty()) continue;  // disjoint occurrences resolve trivially
        Element s = rewrite_at(T, g1, e1, order, gens)
                        .minus(rewrite_at(T, g2, e2, order, gens));
        if (!s.is_zero()) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Element> overlaps(const Element& g1, const Element& g2,
                              const MonomialOrder& order, const GeneratorSet& gens,
                              int max_arity) {
  require_no_unary(gens, "overlaps");
  const ShuffleTree& lm1 = leading_monomial(g1, order, gens);
  const ShuffleTree& lm2 = leading_monomial(g2, order, gens);
  int lo = std::max(lm1.arity(), lm2.arity());
  int hi = std::min(max_arity, lm1.arity() + lm2.arity() - 1);
  std::vector<Element> out;
  for (int a = lo; a <= hi; ++a) {
    std::vector<ShuffleTree> monomials = enumerate_monomials(gens, a);
    std::vector<Element> part = overlaps_at_arity(g1, g2, order, gens, monomials);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Completion
// ---------------------------------------------------------------------------

namespace {

/// Ascending (arity, leading monomial) comparison.
bool element_before(const Element& a, const Element& b, const MonomialOrder& order,
                    const GeneratorSet& gens) {
  if (a.arity != b.arity) return a.arity < b.arity;
  return compare(order, gens, leading_monomial(a, order, gens),
                 leading_monomial(b, order, gens)) < 0;
}

/// Minimalize + tail-reduce: drop elements whose lead is divisible by another
/// lead, then totally reduce each tail against the rest.  Output is the
/// canonical reduced basis for the given leading-monomial set.
void interreduce(std::vector<Element>* basis, const MonomialOrder& order,
                 const GeneratorSet& gens) {
  // Phase 1: minimal leading set.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis->size() && !changed; ++i) {
      const ShuffleTree& lmi = leading_monomial((*basis)[i], order, gens);
      for (size_t j = 0; j < basis->size(); ++j) {
        if (i == j) continue;
        const ShuffleTree& lmj = leading_monomial((*basis)[j], order, gens);
        if (lmj.weight() > lmi.weight() || lmj.arity() > lmi.arity()) continue;
        if (lmj == lmi && j > i) continue;  // keep the earlier of equal leads
        if (!divisors(lmi, lmj).empty()) {
          basis->erase(basis->begin() + i);
          changed = true;
          break;
        }
      }
    }
  }
  // Phase 2: tail reduction (leads are now pairwise non-divisible, so total
  // reduction against the others preserves each lead).
  for (size_t i = 0; i < basis->size(); ++i) {
    std::vector<Element> others;
    others.reserve(basis->size() - 1);
    for (size_t j = 0; j < basis->size(); ++j)
      if (j != i) others.push_back((*basis)[j]);
    Element r = reduce((*basis)[i], others, order, gens);
    (*basis)[i] = make_monic(r, order, gens);
  }
}

}  // namespace

GroebnerBasis complete(const Presentation& p, const MonomialOrder& order,
                       const CompletionOptions& opts) {
  require_no_unary(p.gens, "complete");
  const GeneratorSet& gens = p.gens;
  std::vector<Element> basis;
  for (const Element& r : p.relations) {
    if (r.is_zero())
      throw Error(ErrorKind::ZeroElement, "complete: zero relation in presentation");
    basis.push_back(make_monic(r, order, gens));
  }
  std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
    return element_before(a, b, order, gens);
  });

  auto start = std::chrono::steady_clock::now();
  auto out_of_budget = [&]() {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return elapsed > opts.budget_seconds;
  };

  bool budget_hit = false;
  int last_completed = 1;
  for (int a = 2; a <= opts.max_arity && !budget_hit; ++a) {
    std::vector<ShuffleTree> monomials = enumerate_monomials(gens, a);
    std::set<std::pair<size_t, size_t>> done;
    bool stable = false;
    while (!stable && !budget_hit) {
      stable = true;
      size_t n = basis.size();
      for (size_t i = 0; i < n && !budget_hit; ++i) {
        for (size_t j = i; j < n && !budget_hit; ++j) {
          if (done.count({i, j})) continue;
          done.insert({i, j});
          if (out_of_budget()) {
            budget_hit = true;
            break;
          }
          const ShuffleTree& lmi = leading_monomial(basis[i], order, gens);
          const ShuffleTree& lmj = leading_monomial(basis[j], order, gens);
          if (std::max(lmi.arity(), lmj.arity()) > a) continue;
          if (lmi.arity() + lmj.arity() - 1 < a) continue;
          std::vector<Element> ss =
              overlaps_at_arity(basis[i], basis[j], order, gens, monomials);
          for (Element& s : ss) {
            Element r = reduce(s, basis, order, gens);
            if (!r.is_zero()) {
              basis.push_back(make_monic(r, order, gens));
              stable = false;
            }
          }
        }
      }
    }
    if (!budget_hit) last_completed = a;
  }

  interreduce(&basis, order, gens);
  std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
    return element_before(a, b, order, gens);
  });

  GroebnerBasis out;
  out.gens = gens;
  out.order = order;
  out.elements = std::move(basis);
  out.certified = !budget_hit;
  out.certified_arity = budget_hit ? last_completed : opts.max_arity;
  return out;
}

bool verify(const GroebnerBasis& basis, int max_arity) {
  require_no_unary(basis.gens, "verify");
  for (int a = 2; a <= max_arity; ++a) {
    std::vector<ShuffleTree> monomials = enumerate_monomials(basis.gens, a);
    for (size_t i = 0; i < basis.elements.size(); ++i) {
      for (size_t j = i; j < basis.elements.size(); ++j) {
        std::vector<Element> ss = overlaps_at_arity(
            basis.elements[i], basis.elements[j], basis.order, basis.gens, monomials);
        for (const Element& s : ss) {
          Element r = reduce(s, basis.elements, basis.order, basis.gens);
          if (!r.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Normal monomials
// ---------------------------------------------------------------------------

std::vector<ShuffleTree> normal_monomials(const GroebnerBasis& basis, int arity) {
  require_no_unary(basis.gens, "normal_monomials");
  std::vector<const ShuffleTree*> lms;
  for (const Element& g : basis.elements)
    lms.push_back(&leading_monomial(g, basis.order, basis.gens));
  std::vector<ShuffleTree> out;
  for (ShuffleTree& T : enumerate_monomials(basis.gens, arity)) {
    bool normal = true;
    for (const ShuffleTree* lm : lms) {
      if (lm->arity() > T.arity() || lm->weight() > T.weight()) continue;
      if (!divisors(T, *lm).empty()) {
        normal = false;
        break;
      }
    }
    if (normal) out.push_back(std::move(T));
  }
  return out;
}

std::vector<long long> normal_monomial_counts(const GroebnerBasis& basis,
                                              int max_arity) {
  std::vector<long long> counts;
  for (int a = 1; a <= max_arity; ++a)
    counts.push_back(static_cast<long long>(normal_monomials(basis, a).size()));
  return counts;
}

}  // namespace opbw
