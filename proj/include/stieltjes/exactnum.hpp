#pragma once

// Exact integer/rational arithmetic, the floating-point precision context,
// and the combinatorial generators (Bernoulli, harmonic, factorial,
// binomial) shared by every other module.

#include "stieltjes/bigfloat.hpp"

#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace stieltjes {

/// Raised when a computation detects that its own result cannot be trusted
/// at the requested precision (two-precision disagreement, cancellation).
class NumericalAlarm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds p/q in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& p, const BigInt& q);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& n);

/// Working precision for BigFloat evaluation.
///
/// Every BigFloat result under a context is rounded to `precision_bits`.
/// Digit claims are validated by recomputing at
/// `precision_bits + guard_bits` and comparing.
struct PrecisionContext {
  long precision_bits = 128;
  long guard_bits = 32;

  PrecisionContext() = default;
  PrecisionContext(long precision, long guard);

  mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(precision_bits); }
  /// The validation-rerun context.
  PrecisionContext guarded() const { return {precision_bits + guard_bits, guard_bits}; }
  PrecisionContext widened(long extra) const { return {precision_bits + extra, guard_bits}; }

  /// ⌊precision_bits·log10(2)⌋ − 4: the digits printed for validated output.
  int printable_digits() const;
};

BigFloat pi(const PrecisionContext& ctx);
BigFloat rational_to_float(const BigRational& q, const PrecisionContext& ctx);

// --- Bernoulli numbers --------------------------------------------------

/// Exact Bernoulli numbers with B_1 = -1/2 and B_2 = +1/6.
///
/// Values are produced by the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0
/// and cached up to the largest index requested. Thread-safe.
class BernoulliCache {
 public:
  BigRational get(std::size_t n);

 private:
  void extend_to(std::size_t n);

  std::shared_mutex mutex_;
  std::deque<BigRational> values_;
};

BigRational bernoulli(std::size_t n);

// --- Harmonic numbers ---------------------------------------------------

/// Generalized harmonic numbers H_n^{(s)} = sum_{k=1}^{n} k^{-s}.
class HarmonicCache {
 public:
  BigRational get(std::size_t n, unsigned s);

 private:
  std::shared_mutex mutex_;
  std::vector<std::deque<BigRational>> by_order_;  // by_order_[s][n]
};

BigRational harmonic(std::size_t n, unsigned s = 1);

// --- Factorials and binomials -------------------------------------------

class FactorialCache {
 public:
  BigInt get(std::size_t n);

 private:
  std::shared_mutex mutex_;
  std::deque<BigInt> values_;
};

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

}  // namespace stieltjes
