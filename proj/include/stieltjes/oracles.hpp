#pragma once

// Independent reference values for the Stieltjes constants.
//
// gamma_israilov is the production reference: Euler-Maclaurin applied to
// sum ln^m k / k with exact symbolic derivatives. gamma_jensen_franel is a
// quadrature cross-check with disjoint failure modes. The classical
// rational series for gamma are slow and serve as consistency checks.

#include "stieltjes/exactnum.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace stieltjes {

/// f(x) = x^{-power} sum_j coeffs[j] ln^j x.
struct LogPolyOverX {
  std::size_t power = 1;
  std::vector<BigRational> coeffs;

  /// ln^m x / x.
  static LogPolyOverX log_power_over_x(std::size_t m);
  BigFloat evaluate(const BigFloat& x) const;
  friend bool operator==(const LogPolyOverX&, const LogPolyOverX&) = default;
};

/// Exact derivative of the given order: (p, c) -> (p+1, c'),
/// c'_j = (j+1) c_{j+1} - p c_j.
LogPolyOverX logpoly_derivative(const LogPolyOverX& f, std::size_t order);

struct IsrailovResult {
  BigFloat value;
  /// Magnitude of the first omitted correction term.
  BigFloat remainder;
  /// remainder <= tolerance (true when no tolerance was requested).
  bool within_tolerance = true;
};

/// sum_{k<=n} ln^m k/k - ln^{m+1} n/(m+1) - ln^m n/(2n)
///   - sum_{k=1}^{N-1} B_{2k}/(2k)! [ln^m x / x]^{(2k-1)}_{x=n}.
/// Requires n >= 1 and N >= 1. If tolerance is positive, within_tolerance
/// reports whether the remainder estimate meets it.
IsrailovResult gamma_israilov(std::size_t m, std::size_t n, std::size_t N, const PrecisionContext& ctx,
                              double tolerance = 0.0);

/// gamma_m with error below 2^{-bits} |gamma_m| (up to rounding), from the
/// Israilov series with n and N chosen automatically. Result carries `bits`
/// of precision.
BigFloat reference_stieltjes(std::size_t m, long bits);

struct QuadratureSpec {
  std::string rule = "tanh-sinh";
  /// Node spacing h = 2^{-level} in the tanh-sinh variable.
  int level = 0;
  /// Integration range [0, truncation], split into unit panels.
  int truncation = 0;
  PrecisionContext ctx;

  /// Level and truncation derived from the precision: the tail beyond T is
  /// below e^{-2 pi T} < 2^{-(precision+guard)}.
  static QuadratureSpec for_context(const PrecisionContext& ctx);
  /// Total number of integrand evaluations.
  std::size_t node_count() const;
};

/// delta_{m,0}/2 + int_0^inf 2 Im[ln^m(1-ix)/(1-ix)] / (e^{2 pi x} - 1) dx.
/// The integral is recomputed at precision + guard bits with one more
/// level; throws NumericalAlarm if the two disagree in the first
/// precision_bits - 8 bits.
BigFloat gamma_jensen_franel(std::size_t m, const QuadratureSpec& spec);

/// Same integral with the given spec only (no validation rerun).
BigFloat jensen_franel_integral(std::size_t m, const QuadratureSpec& spec, bool parallel = true);

/// sum_{n=1}^{N} |G_n| / n.
BigRational gamma_fontana_mascheroni(std::size_t N);

/// 1 - sum_{n=1}^{N} C_{2,n} / (n (n+1)!).
BigRational gamma_binet_norlund(std::size_t N);

/// n-th block sum_{k=2^{n-1}}^{2^n - 1} n / ((2k+1)(2k+2)).
BigRational jacobsthal_block(std::size_t n);

/// 1 - sum_{n=1}^{N_outer} jacobsthal_block(n).
BigRational gamma_jacobsthal(std::size_t N_outer);

/// sum_{n=0}^{N} |G_{n+1}| sum_{k=0}^{n} (-1)^k C(n,k) ln^m(k+1)/(k+1).
/// The inner sum is evaluated with n + guard_bits extra bits; a
/// NumericalAlarm is raised if it loses more than that. Requires N <= 40
/// and m <= 3.
BigFloat gamma_m_coppo_ser(std::size_t m, std::size_t N, const PrecisionContext& ctx);

}  // namespace stieltjes
