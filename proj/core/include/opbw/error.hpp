#pragma once
/**
 * Structured errors for the opbw library.
 *
 * Every precondition violation surfaces as an Error carrying a machine-readable
 * kind plus a human-readable message that names the offending object (vertex
 * path, monomial text, truncation order, ...).  The CLI maps Error to exit
 * code 1; library callers can switch on kind().
 */

#include <stdexcept>
#include <string>

namespace opbw {

enum class ErrorKind {
  InvalidTree,        // shuffle condition violated, bad labels, bad arity
  InvalidRelabel,     // graft relabeling produces a non-shuffle tree
  ArityMismatch,      // comparing/operating on incompatible arities
  ZeroElement,        // leading monomial of the zero element requested
  BadSeries,          // series precondition (composition/inversion) violated
  Unsupported,        // operation outside the implemented fragment
  Uncertified,        // a certified Groebner basis was required
  ParseError,         // malformed text / JSON input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidTree: return "invalid_tree";
    case ErrorKind::InvalidRelabel: return "invalid_relabel";
    case ErrorKind::ArityMismatch: return "arity_mismatch";
    case ErrorKind::ZeroElement: return "zero_element";
    case ErrorKind::BadSeries: return "bad_series";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Uncertified: return "uncertified";
    case ErrorKind::ParseError: return "parse_error";
  }
  return "unknown";
}

}  // namespace opbw
