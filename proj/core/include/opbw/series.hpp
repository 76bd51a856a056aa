#pragma once
/**
 * Truncated exact power series and symmetric functions in the power-sum
 * basis, with the generating-series necessary condition for the PBW property.
 *
 * Coefficients of power series live in the Laurent polynomial ring ℚ[q, q⁻¹]
 * (plain rationals are the q-free case; the parameter is needed only for the
 * weight-graded Poisson computation).  Symmetric functions are stored as
 * rational combinations of p_λ, truncated by total degree.
 *
 * The necessary condition: if the enveloping functor of P has the PBW
 * property, the collection U⁰ = U_P(0-algebra on one generator) satisfies
 *
 *     f_{U⁰}(t) = −(∂f_{P!}(−t)/∂t)⁻¹        (exponential series), and
 *     χ_{U⁰}   = −(∂/∂p₁ χ_{P!}(−p₁,−p₂,…))⁻¹ (full characters),
 *
 * so any negative dimension coefficient — or failure of Schur positivity in
 * the character version — refutes PBW.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opbw/rational.hpp"

namespace opbw {

// ---------------------------------------------------------------------------
// Laurent polynomials in q
// ---------------------------------------------------------------------------

/// Exact Laurent polynomial in the formal parameter q; terms keyed by
/// exponent (negative allowed), zero coefficients never stored.
struct QPoly {
  std::map<int, Rat> terms;

  QPoly() = default;
  /*implicit*/ QPoly(const Rat& r);
  /*implicit*/ QPoly(long long n) : QPoly(Rat(n)) {}
  static QPoly monomial(const Rat& c, int exp);

  bool is_zero() const { return terms.empty(); }
  /// True when no nonzero term involves q (exponent != 0).
  bool is_rational() const;
  /// The q-free value; throws Error(BadSeries) unless is_rational().
  Rat rational_value() const;
  /// Coefficient of q^exp.
  Rat coeff(int exp) const;
  /// True iff every q-monomial coefficient is >= 0.
  bool nonnegative() const;
  /// Single-term Laurent polynomials are the units of the ring.
  bool invertible() const { return terms.size() == 1; }
  QPoly inverse() const;  ///< throws Error(BadSeries) if not invertible

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.terms == b.terms;
  }

  /// Human-readable form like "1 - 1/6*q^2"; "0" for zero.
  std::string text() const;
};

// ---------------------------------------------------------------------------
// Power series
// ---------------------------------------------------------------------------

/// Truncated power series in t: coefficients for degrees 0..trunc are known
/// exactly; nothing is asserted beyond the truncation.
struct PowerSeries {
  int trunc = 0;
  std::vector<QPoly> c;  ///< size trunc + 1

  static PowerSeries zero(int trunc);
  const QPoly& coeff(int degree) const;  ///< throws beyond the truncation
  bool uses_q() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.trunc == b.trunc && a.c == b.c;
  }
};

PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_sub(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_scale(const QPoly& c, const PowerSeries& f);

/// f(g(t)) to the smaller truncation.  Throws Error(BadSeries) if g has a
/// nonzero constant term.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// Multiplicative inverse to the truncation of f.  Throws Error(BadSeries)
/// if the constant term is not a unit.
PowerSeries ps_invert(const PowerSeries& f);

/// Compositional inverse: the unique g with f(g(t)) = g(f(t)) = t up to the
/// truncation.  Requires f(0) = 0 and an invertible linear coefficient;
/// throws Error(BadSeries) otherwise.
PowerSeries ps_reverse(const PowerSeries& f);

/// d/dt (truncation drops by one).
PowerSeries ps_derivative(const PowerSeries& f);

/// f(-t).
PowerSeries ps_negate_arg(const PowerSeries& f);

/// t -> a*t for a Laurent monomial scale (used for f_Lie(qt)/q).
PowerSeries ps_scale_arg(const QPoly& a, const PowerSeries& f);

// --- named exponential series (exact to the requested truncation) ----------

PowerSeries ps_t(int trunc);          ///< t
PowerSeries ps_exp(int trunc);        ///< e^t
PowerSeries ps_log(int trunc);        ///< ln(1+t)
PowerSeries ps_geometric(int trunc);  ///< 1/(1-t)
PowerSeries ps_com(int trunc);        ///< e^t - 1
PowerSeries ps_lie(int trunc);        ///< -ln(1-t)
PowerSeries ps_as(int trunc);         ///< t/(1-t)
/// f_Pois(t,q) = f_Com(t) ∘ (f_Lie(qt)/q): the bracket-weighted Poisson
/// dimension series (coefficient of tⁿ is Π_{j<n}(1+jq)/n!).
PowerSeries ps_pois(int trunc);
/// t·e^t, the dimension series of the dual of the two-compatible-brackets
/// operad.
PowerSeries ps_lie2_dual(int trunc);

// ---------------------------------------------------------------------------
// Symmetric functions in the power-sum basis
// ---------------------------------------------------------------------------

/// Integer partition, weakly decreasing positive parts; {} is the empty
/// partition (degree 0).
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
/// All partitions of n in the canonical (decreasing-lex) order.
std::vector<Partition> partitions_of(int n);
/// The centralizer order z_λ = Π k^{m_k} m_k!.
Rat z_of(const Partition& p);

/// Truncated symmetric function Σ c_λ p_λ, |λ| <= trunc; zero coefficients
/// never stored.
struct SymFun {
  int trunc = 0;
  std::map<Partition, Rat> c;

  static SymFun zero(int trunc);
  Rat coeff(const Partition& p) const;
  void add(const Partition& p, const Rat& v);  ///< drops |p| > trunc

  friend bool operator==(const SymFun& a, const SymFun& b) {
    return a.trunc == b.trunc && a.c == b.c;
  }
};

SymFun sym_add(const SymFun& a, const SymFun& b);
SymFun sym_sub(const SymFun& a, const SymFun& b);
SymFun sym_mul(const SymFun& a, const SymFun& b);
SymFun sym_scale(const Rat& r, const SymFun& a);

/// Plethystic substitution outer[inner]: p_k[inner] replaces every p_j of
/// inner by p_{jk}, extended multiplicatively and linearly.  Throws
/// Error(BadSeries) if inner has a nonzero constant term.
SymFun plethysm(const SymFun& outer, const SymFun& inner);

/// The involution p_i -> -p_i (coefficient of p_λ times (-1)^{ℓ(λ)}).
SymFun epsilon(const SymFun& chi);

/// Formal partial derivative in p₁.
SymFun d_dp1(const SymFun& chi);

/// Multiplicative inverse (constant term must be nonzero).
SymFun sym_invert(const SymFun& chi);

/// Specialization p₁ = t, p_k = 0 for k > 1: the exponential dimension
/// series of the collection with character chi.
PowerSeries egf_of(const SymFun& chi);

// --- named characters -------------------------------------------------------

SymFun sym_p(int k, int trunc);    ///< the power sum p_k
SymFun chi_com(int trunc);         ///< Σ_{n>=1} h_n = exp(Σ p_k/k) - 1
SymFun chi_lie(int trunc);         ///< Σ_n (1/n) Σ_{d|n} μ(d) p_d^{n/d}
SymFun chi_lie2_dual(int trunc);   ///< (Σ p_k) · exp(Σ p_k/k)

// ---------------------------------------------------------------------------
// Schur expansion
// ---------------------------------------------------------------------------

/// Symmetric-group character value χ^μ(λ) by the Murnaghan–Nakayama rule
/// (border-strip recursion, memoized).  |μ| must equal |λ|.
long long sn_character(const Partition& mu, const Partition& lambda);

/// Expansion of chi in the Schur basis for all degrees <= min(trunc,
/// max_degree): coefficient of s_μ equals Σ_λ c_λ χ^μ(λ).
std::map<Partition, Rat> schur_expand(const SymFun& chi, int max_degree = 6);

// ---------------------------------------------------------------------------
// The necessary condition
// ---------------------------------------------------------------------------

struct SeriesReport {
  std::optional<PowerSeries> series;  ///< exponential route
  std::optional<SymFun> sym;          ///< character route
  bool nonnegative = true;  ///< all dimension coefficients >= 0 (for the
                            ///< character route: of the EGF specialization)
  std::optional<bool> schur_positive;  ///< character route only
  std::optional<int> violation_degree;
  std::optional<Partition> violation_partition;
  std::string violation_value;  ///< the offending coefficient, as text
};

/// f_{U⁰} = −(∂f_dual(−t)/∂t)⁻¹ with negativity detection.  Requires
/// f_dual(0) = 0 and an invertible linear coefficient; the result is exact to
/// trunc − 1.  A negative coefficient (for q-polynomials: any negative
/// q-monomial) refutes PBW for the operad whose dual has series f_dual.
SeriesReport necessary_condition_egf(const PowerSeries& f_dual);

/// χ_{U⁰} = −(∂/∂p₁ ε(χ_dual))⁻¹ with Schur-positivity detection (expansion
/// capped at degree schur_cap).  Requires zero constant term and a nonzero
/// p₁ coefficient, except that the derivative may itself be a nonzero
/// constant (degenerate one-dimensional case).
SeriesReport necessary_condition_sym(const SymFun& chi_dual, int schur_cap = 6);

}  // namespace opbw
