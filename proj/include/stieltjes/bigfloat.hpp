#pragma once

// RAII wrapper around an MPFR value with an explicit precision.
//
// Binary operations produce a result at the larger of the two operand
// precisions and round to nearest. Mixed operations with integers or
// rationals keep the precision of the BigFloat operand.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace stieltjes {

using BigInt = mpz_class;
using BigRational = mpq_class;

class BigFloat {
 public:
  /// Zero at the given precision.
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(long value, mpfr_prec_t bits);
  BigFloat(const BigInt& value, mpfr_prec_t bits);
  BigFloat(const BigRational& value, mpfr_prec_t bits);
  /// Parses a decimal string such as "-0.0728158454836767".
  BigFloat(const std::string& decimal, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  /// Same value rounded to a different precision.
  BigFloat rounded(mpfr_prec_t bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e such that 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  /// Decimal string with the given number of significant digits,
  /// formatted as [-]d.ddd...e[+-]XX (or "0" for zero).
  std::string to_scientific(int digits) const;
  /// Decimal string with the given number of significant digits in
  /// positional notation when the exponent is moderate.
  std::string to_decimal(int digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);

  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat ldexp(const BigFloat& x, long e);

/// Exact comparison against an integer.
int compare(const BigFloat& x, const BigInt& n);

/// |a - b| / |b|; returns |a| when b is zero.
BigFloat relative_difference(const BigFloat& a, const BigFloat& b);

/// Number of leading bits on which a and b agree, measured as
/// -log2(|a - b| / |b|). Returns the larger precision when they are equal.
long agreeing_bits(const BigFloat& a, const BigFloat& b);

}  // namespace stieltjes
