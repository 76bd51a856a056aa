#pragma once
/**
 * JSON serialization for every file payload the tools exchange:
 * presentations (shuffle or symmetric form), monomial orders, Groebner bases,
 * algebra structure constants, power series, symmetric functions, and the
 * report types of the pbw / series / uea modules.
 *
 * Conventions:
 *  - all rationals travel as strings ("7", "-3/2"); no floating point anywhere;
 *  - emission uses nlohmann::ordered_json with a fixed key order, so a fixed
 *    value always renders to the same bytes (the CLI's json mode relies on it);
 *  - every reader names the offending file/key in its Error(ParseError).
 *
 * Presentation files accept either explicit shuffle data
 *     {"generators": [{"name","arity","weight"}...], "relations": [[{"coeff","tree"}...]...]}
 * or a symmetric binary block
 *     {"symmetric": {"gen_names", "transposition", "relations": [{"a","b","c"}...]}}
 * which is shuffle-expanded on load; supplying both is an error.  Files may
 * carry a suggested "order" block ({"kind", "generator_order", "longer_prefix_wins"}).
 */

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opbw/groebner.hpp"
#include "opbw/pbw.hpp"
#include "opbw/series.hpp"
#include "opbw/trees.hpp"
#include "opbw/uea.hpp"

namespace opbw {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Generic plumbing
// ---------------------------------------------------------------------------

/// Parses JSON text; `where` (a path or argument name) prefixes diagnostics.
/// Throws Error(ParseError) on malformed input.
Json json_parse(const std::string& text, const std::string& where);

/// Reads and parses a file.  Throws Error(ParseError) if unreadable.
Json load_json_file(const std::string& path);

/// Renders with 2-space indentation plus a trailing newline (byte-stable).
std::string json_dump(const Json& j);

/// Writes json_dump(j) to `path`.  Throws Error(ParseError) if unwritable.
void save_json_file(const std::string& path, const Json& j);

// ---------------------------------------------------------------------------
// Rationals and Laurent polynomials
// ---------------------------------------------------------------------------

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);

/// Parses the textual form produced by QPoly::text(), e.g. "1 - 1/6*q^2",
/// "2*q^-1", "0".  Throws Error(ParseError) on malformed input.
QPoly qpoly_from_string(const std::string& text, const std::string& where);

// ---------------------------------------------------------------------------
// Presentations and orders
// ---------------------------------------------------------------------------

/// A presentation file as loaded from disk: the shuffle presentation (always
/// populated; symmetric input is expanded), the raw symmetric block when one
/// was given (needed by the enveloping-algebra commands), and the suggested
/// order if the file carries one.
struct PresentationFile {
  Presentation shuffle;
  std::optional<SymmetricPresentation> symmetric;
  std::optional<MonomialOrder> order;
};

Json generators_to_json(const GeneratorSet& gens);
GeneratorSet generators_from_json(const Json& j, const std::string& where);

Json element_to_json(const Element& el);
Element element_from_json(const Json& j, const GeneratorSet& gens,
                          const std::string& where);

Json order_to_json(const MonomialOrder& ord);
MonomialOrder order_from_json(const Json& j, const std::string& where);

Json symmetric_to_json(const SymmetricPresentation& sp);
SymmetricPresentation symmetric_from_json(const Json& j, const std::string& where);

Json presentation_file_to_json(const PresentationFile& pf);
PresentationFile presentation_file_from_json(const Json& j, const std::string& where);
PresentationFile load_presentation(const std::string& path);

// ---------------------------------------------------------------------------
// Groebner bases
// ---------------------------------------------------------------------------

/// {"generators", "order", "elements", "certified_arity", "certified"}.
Json basis_to_json(const GroebnerBasis& gb);
GroebnerBasis basis_from_json(const Json& j, const std::string& where);
GroebnerBasis load_basis(const std::string& path);

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

/// {"dim", "basis": [names], "ops": [{"gen", "table": [[[rational]...]...]}]};
/// table[x][y] is the coordinate vector of gen(e_x, e_y).  Ops are matched to
/// `gen_names` by name; missing ops mean the zero operation.
Json algebra_to_json(const AlgebraData& V, const std::vector<std::string>& gen_names);
AlgebraData algebra_from_json(const Json& j, const std::vector<std::string>& gen_names,
                              const std::string& where);
AlgebraData load_algebra(const std::string& path,
                         const std::vector<std::string>& gen_names);

// ---------------------------------------------------------------------------
// Series and symmetric functions
// ---------------------------------------------------------------------------

/// {"truncation", "coeffs": [{"degree", "value", "q_poly"?}...]}; "value" is
/// the q-free value (or the q⁰ coefficient when q appears), "q_poly" is the
/// full Laurent text and is present only when the coefficient involves q.
Json series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const Json& j, const std::string& where);

/// {"truncation", "coeffs": [{"partition": [..], "value"}...]} in the
/// power-sum basis, sorted by degree then by the partition generator order.
Json sym_to_json(const SymFun& f);
SymFun sym_from_json(const Json& j, const std::string& where);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

Json dim_report_to_json(const DimReport& r);
Json numeric_check_to_json(const NumericCheck& c);
Json pbw_verdict_to_json(const PbwVerdict& v);
Json series_report_to_json(const SeriesReport& r);

}  // namespace opbw
