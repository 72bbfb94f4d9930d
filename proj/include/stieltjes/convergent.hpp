#pragma once

// Convergent series for the Stieltjes constants:
//
//   gamma_m = delta_{m,0}/2 + sum_{n>=1} sum_k r_{m,n,k} pi^{-(2k+2)},
//
//   r_{m,n,k} = (-1)^{m+k} m! |S1(2k+2, m+1)| |S1(n, 2k+1)| / (n n! 2^{2k+1}).
//
// Each summand is a polynomial in 1/pi^2 with rational coefficients.

#include "stieltjes/exactnum.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace stieltjes {

/// sum_k coeffs[k] * pi^{-(2k+2)}.
class PiPolynomial {
 public:
  PiPolynomial() = default;
  explicit PiPolynomial(std::vector<BigRational> coeffs);

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  PiPolynomial& operator+=(const PiPolynomial& rhs);
  PiPolynomial operator*(const BigRational& s) const;
  friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Value using precomputed inverse_pi_squared = pi^{-2}.
  BigFloat evaluate(const BigFloat& inverse_pi_squared) const;
  BigFloat evaluate(const PrecisionContext& ctx) const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Exact n-th summand for gamma_m.
PiPolynomial term_pi_polynomial(std::size_t m, std::size_t n);

/// Partial sums built from materialized exact terms. Suited to small N;
/// gamma_convergent uses the streaming evaluator for large N.
class ConvergentSeriesState {
 public:
  ConvergentSeriesState(std::size_t m, const PrecisionContext& ctx);

  /// Appends the term for n_next() and returns it.
  const PiPolynomial& step();

  std::size_t m() const { return m_; }
  std::size_t n_next() const { return n_next_; }
  const std::vector<PiPolynomial>& terms() const { return terms_; }
  /// delta_{m,0}/2 plus the emitted terms, at the context precision.
  BigFloat partial_value() const;

 private:
  std::size_t m_;
  PrecisionContext ctx_;
  BigFloat inverse_pi_squared_;
  BigFloat partial_;
  std::size_t n_next_ = 1;
  std::vector<PiPolynomial> terms_;
};

/// Streams Stirling rows once and accumulates the partial sums for several
/// orders m at a time. Terms are evaluated from the exact integers at
/// precision_bits + guard_bits + 32 and summed in ascending n.
class ConvergentEvaluator {
 public:
  ConvergentEvaluator(std::vector<std::size_t> orders, const PrecisionContext& ctx, bool parallel = true);

  /// Adds the term for n = n_done() + 1.
  void advance();
  void advance_to(std::size_t N);
  std::size_t n_done() const { return stream_n_; }

  const std::vector<std::size_t>& orders() const { return orders_; }
  /// Partial sum for orders()[i], rounded to the context precision.
  BigFloat partial(std::size_t i) const;
  /// Last term added for orders()[i], at working precision.
  const BigFloat& last_term(std::size_t i) const { return last_terms_[i]; }

 private:
  void extend_weights(std::size_t k_count);

  std::vector<std::size_t> orders_;
  PrecisionContext ctx_;
  bool parallel_;
  mpfr_prec_t wp_;
  BigFloat pi_;
  std::vector<std::vector<BigFloat>> weights_;  // weights_[i][k]
  std::vector<BigInt> columns_;                 // |S1(columns_row_, l)|, l <= max order + 1
  std::size_t columns_row_ = 0;
  BigFloat weight_scale_;                       // (2 pi)^{2k+1} pi for the next k
  std::vector<BigFloat> partials_;
  std::vector<BigFloat> last_terms_;
  std::vector<BigInt> row_;  // |S1(n, .)| for n = stream_n_
  std::vector<BigInt> scratch_;
  std::size_t stream_n_ = 0;
  BigInt n_factorial_ = 1;
};

/// delta_{m,0}/2 + sum_{n=1}^{N} term(m,n). Throws for m > 8.
BigFloat gamma_convergent(std::size_t m, std::size_t N, const PrecisionContext& ctx);

/// |(reference - partial(N)) / reference| for each N in N_list (ascending
/// order not required). The reference must carry at least
/// ctx.precision_bits + 32 bits.
std::vector<std::pair<std::size_t, BigFloat>> error_trace(std::size_t m, const std::vector<std::size_t>& N_list,
                                                          const BigFloat& reference, const PrecisionContext& ctx);

/// Model magnitude (2 pi / m!) ln^m(ln n) / (n^2 ln^2 n) of the n-th term. n >= 3.
BigFloat rate_diagnostic(std::size_t m, std::size_t n, const PrecisionContext& ctx);

}  // namespace stieltjes
