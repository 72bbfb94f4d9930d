#include "stieltjes/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace stieltjes {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

template <typename Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat out(x.precision());
  fn(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs and leave `other` as a valid minimal-precision zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(mpfr_prec_t bits) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_scientific(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> mantissa(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN),
      mpfr_free_str);
  std::string m = mantissa.get();
  std::string out;
  if (!m.empty() && m.front() == '-') {
    out.push_back('-');
    m.erase(m.begin());
  }
  out.push_back(m.front());
  if (m.size() > 1) {
    out.push_back('.');
    out.append(m.begin() + 1, m.end());
  }
  long e = static_cast<long>(exp10) - 1;
  out.push_back('e');
  out.push_back(e < 0 ? '-' : '+');
  std::string es = std::to_string(std::labs(e));
  if (es.size() < 2) es.insert(es.begin(), '0');
  out += es;
  return out;
}

std::string BigFloat::to_decimal(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  if (!mpfr_number_p(value_)) return to_scientific(digits);
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> mantissa(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN),
      mpfr_free_str);
  std::string m = mantissa.get();
  bool negative = !m.empty() && m.front() == '-';
  if (negative) m.erase(m.begin());
  // Positional notation only for |x| in [1e-6, 1e+digits).
  if (exp10 < -5 || exp10 > digits) return to_scientific(digits);
  std::string out = negative ? "-" : "";
  if (exp10 <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-exp10), '0');
    out += m;
  } else {
    auto int_digits = static_cast<size_t>(exp10);
    out += m.substr(0, int_digits);
    if (m.size() > int_digits) {
      out.push_back('.');
      out += m.substr(int_digits);
    }
  }
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat out(a.precision());
  mpfr_mul_si(out.raw(), a.raw(), b, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, long b) {
  BigFloat out(a.precision());
  mpfr_div_si(out.raw(), a.raw(), b, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.raw(), b.raw());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat tanh(const BigFloat& x) { return unary(x, mpfr_tanh); }
BigFloat atan(const BigFloat& x) { return unary(x, mpfr_atan); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat out(wider(y, x));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat out(x.precision());
  mpfr_pow_si(out.raw(), x.raw(), n, MPFR_RNDN);
  return out;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat out(x.precision());
  if (e >= 0) {
    mpfr_mul_2ui(out.raw(), x.raw(), static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    mpfr_div_2ui(out.raw(), x.raw(), static_cast<unsigned long>(-e), MPFR_RNDN);
  }
  return out;
}

int compare(const BigFloat& x, const BigInt& n) { return mpfr_cmp_z(x.raw(), n.get_mpz_t()); }

BigFloat relative_difference(const BigFloat& a, const BigFloat& b) {
  BigFloat diff = abs(a - b);
  if (b.is_zero()) return diff;
  return diff / abs(b);
}

long agreeing_bits(const BigFloat& a, const BigFloat& b) {
  if (a == b) return std::max(a.precision(), b.precision());
  BigFloat rel = relative_difference(a, b);
  if (rel.is_zero()) return std::max(a.precision(), b.precision());
  // rel = f * 2^e with f in [0.5, 1): -log2(rel) is within 1 of -e.
  return -rel.exponent();
}

}  // namespace stieltjes
