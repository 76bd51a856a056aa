#pragma once
/**
 * Small exact linear algebra over the rationals: reduced row echelon form,
 * rank, span comparison, nullspace.  Deterministic output (canonical RREF) so
 * that span comparisons and serialized bases are byte-stable.
 */

#include <vector>

#include "opbw/rational.hpp"

namespace opbw {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

/// Reduced row echelon form: pivots 1, pivot columns cleared, zero rows
/// dropped, rows ordered by pivot column.  Canonical for the row span.
Mat rref(Mat rows);

/// Rank of the row span.
int rank(const Mat& rows);

/// Row spans equal?
bool spans_equal(const Mat& a, const Mat& b);

/// Is v in the row span of `echelon` (must already be in RREF)?
bool in_span(const Mat& echelon, Vec v);

/// Canonical basis of {x : rows * x = 0} (each row of the result is one
/// basis vector of length = #columns).
Mat nullspace(const Mat& rows, int cols);

}  // namespace opbw
