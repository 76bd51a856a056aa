#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

/**
 * Enveloping-algebra tests: saturation ranks, algebra validation, the
 * presentation of U_P(V), exact filtered dimensions, and the per-algebra PBW
 * comparison.  The sl2 case is cross-checked against an independent matrix
 * oracle (operator ranks on a direct sum of irreducible representations),
 * which never touches the operadic code paths.
 */

#include <string>
#include <vector>

#include "opbw/linalg.hpp"
#include "opbw/uea.hpp"
#include "operad_samples.hpp"

using namespace opbw;

namespace {

using Matrix = Mat;

Matrix matmul(const Matrix& A, const Matrix& B) {
  size_t n = A.size();
  Matrix C(n, Vec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (A[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

Vec flatten(const Matrix& A) {
  Vec out;
  for (const Vec& row : A) out.insert(out.end(), row.begin(), row.end());
  return out;
}

/// Block-diagonal action of (e, f, h) on the direct sum of the irreducible
/// sl2 representations of highest weight 0..max_weight.
std::vector<Matrix> sl2_rep(int max_weight, int* total_dim) {
  int N = 0;
  for (int w = 0; w <= max_weight; ++w) N += w + 1;
  *total_dim = N;
  std::vector<Matrix> rho(3, Matrix(N, Vec(N, Rat(0))));
  int off = 0;
  for (int w = 0; w <= max_weight; ++w) {
    for (int k = 0; k <= w; ++k) {
      if (k > 0) rho[0][off + k - 1][off + k] = Rat(k * (w - k + 1));  // e
      if (k < w) rho[1][off + k + 1][off + k] = Rat(1);                // f
      rho[2][off + k][off + k] = Rat(w - 2 * k);                       // h
    }
    off += w + 1;
  }
  return rho;
}

}  // namespace

TEST_CASE("saturation ranks across the bundled presentations") {
  auto count = [](const SymmetricPresentation& sp) {
    return saturate_relations(sp).size();
  };
  CHECK(count(samples::lie()) == 1);
  CHECK(count(samples::com()) == 2);
  CHECK(count(samples::as()) == 6);
  CHECK(count(samples::prelie()) == 3);
  CHECK(count(samples::perm()) == 9);
  CHECK(count(samples::leib()) == 6);
  CHECK(count(samples::zinb()) == 6);
  CHECK(count(samples::pois()) == 6);
  CHECK(count(samples::lie2()) == 3);
}

TEST_CASE("algebra validation") {
  SymmetricPresentation lie = samples::lie();
  AlgebraData V = samples::sl2();
  CHECK_NOTHROW(validate_algebra_shapes(lie, V));
  CHECK(algebra_satisfies_relations(lie, V));
  CHECK(algebra_satisfies_relations(lie, trivial_algebra(V)));
  CHECK(algebra_satisfies_relations(samples::leib(), samples::leib_xy()));
  CHECK(algebra_satisfies_relations(samples::as(), samples::as_idempotent()));

  // Rescaling one bracket breaks the Jacobi identity.
  AlgebraData bad = samples::sl2();
  bad.structure[0][2][0][0] = Rat(3);
  bad.structure[0][0][2][0] = Rat(-3);
  CHECK(!algebra_satisfies_relations(lie, bad));

  // A symmetric table is not equivariant for an antisymmetric operation.
  AlgebraData sym = samples::sl2();
  sym.structure[0][1][0] = sym.structure[0][0][1];
  CHECK(!algebra_satisfies_relations(lie, sym));

  // Shape violations throw.
  AlgebraData short_table = samples::sl2();
  short_table.structure[0].pop_back();
  CHECK_THROWS_AS(validate_algebra_shapes(lie, short_table), Error);
  SymmetricPresentation broken = samples::lie();
  broken.transposition = {{Rat(2)}};
  CHECK_THROWS_AS(validate_symmetric(broken), Error);
}

TEST_CASE("enveloping presentation of sl2") {
  AssocPresentation ap = enveloping_presentation(samples::lie(), samples::sl2());
  REQUIRE(ap.generators.size() == 3);
  CHECK(ap.generators[0].name == "db_e");
  CHECK(ap.generators[1].name == "db_f");
  CHECK(ap.generators[2].name == "db_h");
  // One relation per ordered basis pair, except the three identically zero
  // diagonal ones.
  CHECK(ap.relations.size() == 6);
  for (const NCPoly& r : ap.relations) {
    CHECK(!r.empty());
    for (const auto& [w, q] : r) {
      CHECK(w.size() <= 2);
      CHECK(q != 0);
    }
  }
}

TEST_CASE("abelian three-dimensional algebra gives the polynomial ring") {
  AssocPresentation ap =
      enveloping_presentation(samples::lie(), samples::zero_algebra(1, 3));
  CHECK(filtered_dims(ap, 3) == std::vector<long long>{1, 4, 10, 20});
}

TEST_CASE("sl2: filtered dimensions match the abelian reference") {
  DimReport rep = pbw_compare(samples::lie(), samples::sl2(), 3);
  CHECK(rep.filtered == std::vector<long long>{1, 4, 10, 20});
  CHECK(rep.reference == std::vector<long long>{1, 4, 10, 20});
  CHECK(rep.graded == std::vector<long long>{1, 3, 6, 10});
  CHECK(rep.match);
  CHECK(rep.mismatch_at == -1);
  CHECK(rep.checked_to == 3);
}

TEST_CASE("sl2: independent representation-theoretic oracle") {
  int N = 0;
  std::vector<Matrix> rho = sl2_rep(6, &N);
  REQUIRE(N == 28);
  // The matrices genuinely represent the bracket table.
  Matrix ef = matmul(rho[0], rho[1]), fe = matmul(rho[1], rho[0]);
  Matrix he = matmul(rho[2], rho[0]), eh = matmul(rho[0], rho[2]);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      CHECK(ef[i][j] - fe[i][j] == rho[2][i][j]);
      CHECK(he[i][j] - eh[i][j] == 2 * rho[0][i][j]);
    }

  // Rank of the span of all word images of length <= n is a lower bound for
  // dim F_n of U(sl2); meeting the filtered computation certifies both.
  std::vector<Matrix> layer = {Matrix(N, Vec(N, Rat(0)))};
  for (int i = 0; i < N; ++i) layer[0][i][i] = Rat(1);
  Mat span;
  span.push_back(flatten(layer[0]));
  std::vector<long long> ranks = {rank(span)};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Matrix> next;
    for (const Matrix& w : layer)
      for (const Matrix& g : rho) next.push_back(matmul(w, g));
    for (const Matrix& w : next) span.push_back(flatten(w));
    ranks.push_back(rank(span));
    layer = std::move(next);
  }
  CHECK(ranks == std::vector<long long>{1, 4, 10, 20});
}

TEST_CASE("associative envelope of a one-dimensional idempotent algebra") {
  DimReport rep = pbw_compare(samples::as(), samples::as_idempotent(), 3);
  // Left and right multiplication by the idempotent generate {1, L, R, LR}.
  CHECK(rep.filtered == std::vector<long long>{1, 3, 4, 4});
  CHECK(rep.reference == std::vector<long long>{1, 3, 4, 4});
  CHECK(rep.match);
}

TEST_CASE("commutative envelopes truncate at degree two") {
  AssocPresentation one =
      enveloping_presentation(samples::com(), samples::zero_algebra(1, 1));
  CHECK(filtered_dims(one, 3) == std::vector<long long>{1, 2, 2, 2});
  AssocPresentation three =
      enveloping_presentation(samples::com(), samples::zero_algebra(1, 3));
  CHECK(filtered_dims(three, 3) == std::vector<long long>{1, 4, 4, 4});
}

TEST_CASE("leibniz witness: the square refutes the PBW property") {
  // [x,x] = y makes the relation for the pair (x,x) collapse to the linear
  // constraint that the bracket-by-y generator vanishes, so degree one drops
  // from 5 to 4 while the zero-structure reference keeps all generators.
  DimReport rep = pbw_compare(samples::leib(), samples::leib_xy(), 2);
  REQUIRE(rep.checked_to == 2);
  CHECK(rep.filtered[0] == 1);
  CHECK(rep.filtered[1] == 4);
  CHECK(rep.reference[1] == 5);
  CHECK(!rep.match);
  CHECK(rep.mismatch_at == 1);
}

TEST_CASE("word-budget overflow yields a shorter report, not an error") {
  AssocPresentation ap = enveloping_presentation(samples::lie(), samples::sl2());
  std::vector<long long> dims = filtered_dims(ap, 5, 50);
  // Lengths up to three fit (40 words); length four (121) exceeds the budget.
  CHECK(dims == std::vector<long long>{1, 4, 10, 20});
}

TEST_CASE("degenerate inputs") {
  AssocPresentation empty =
      enveloping_presentation(samples::lie(), samples::zero_algebra(1, 0));
  CHECK(empty.generators.empty());
  CHECK(filtered_dims(empty, 2) == std::vector<long long>{1, 1, 1});
  CHECK_THROWS_AS(filtered_dims(empty, -1), Error);
}
