#pragma once

// Minimal complex arithmetic on pairs of BigFloats. Logarithms use the
// principal branch.

#include "stieltjes/bigfloat.hpp"

namespace stieltjes {

struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(mpfr_prec_t bits) : re(bits), im(bits) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  /// e^{i·phi}
  static Complex unit(const BigFloat& phi) { return {cos(phi), sin(phi)}; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Complex operator*(const Complex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

/// Principal logarithm: ln|z| + i·arg z with arg in (-pi, pi].
inline Complex log(const Complex& z) {
  BigFloat modulus_sq = z.re * z.re + z.im * z.im;
  return {log(modulus_sq) / 2, atan2(z.im, z.re)};
}

inline Complex pow(const Complex& z, unsigned long n) {
  Complex result(BigFloat(1, z.re.precision()), BigFloat(z.re.precision()));
  Complex base = z;
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

}  // namespace stieltjes
