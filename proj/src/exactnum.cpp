#include "stieltjes/exactnum.hpp"

#include <cmath>

namespace stieltjes {

BigRational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

PrecisionContext::PrecisionContext(long precision, long guard)
    : precision_bits(precision), guard_bits(guard) {
  if (precision < 64) throw std::invalid_argument("precision_bits must be >= 64");
  if (guard < 16) throw std::invalid_argument("guard_bits must be >= 16");
}

int PrecisionContext::printable_digits() const {
  return static_cast<int>(std::floor(static_cast<double>(precision_bits) * std::log10(2.0))) - 4;
}

BigFloat pi(const PrecisionContext& ctx) {
  BigFloat out(ctx.bits());
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigFloat rational_to_float(const BigRational& q, const PrecisionContext& ctx) {
  return BigFloat(q, ctx.bits());
}

// --- Bernoulli ----------------------------------------------------------

BigRational BernoulliCache::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  extend_to(n);
  return values_[n];
}

void BernoulliCache::extend_to(std::size_t n) {
  if (values_.empty()) {
    values_.emplace_back(1);
    values_.push_back(make_rational(-1, 2));
  }
  for (std::size_t k = values_.size(); k <= n; ++k) {
    if (k % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j, skipping the zero odd terms.
    BigRational sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j >= 3 && j % 2 == 1) continue;
      sum += BigRational(binomial(k + 1, j)) * values_[j];
    }
    BigRational bk = -sum / BigRational(static_cast<long>(k + 1));
    bk.canonicalize();
    values_.push_back(bk);
  }
}

namespace {
BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}
HarmonicCache& harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}
FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}
}  // namespace

BigRational bernoulli(std::size_t n) { return bernoulli_cache().get(n); }

// --- Harmonic -----------------------------------------------------------

BigRational HarmonicCache::get(std::size_t n, unsigned s) {
  if (s == 0) throw std::invalid_argument("harmonic order must be >= 1");
  {
    std::shared_lock lock(mutex_);
    if (s < by_order_.size() && n < by_order_[s].size()) return by_order_[s][n];
  }
  std::unique_lock lock(mutex_);
  if (by_order_.size() <= s) by_order_.resize(s + 1);
  auto& table = by_order_[s];
  if (table.empty()) table.emplace_back(0);
  for (std::size_t k = table.size(); k <= n; ++k) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, s);
    BigRational next = table.back() + BigRational(BigInt(1), power);
    next.canonicalize();
    table.push_back(next);
  }
  return table[n];
}

BigRational harmonic(std::size_t n, unsigned s) { return harmonic_cache().get(n, s); }

// --- Factorial / binomial -----------------------------------------------

BigInt FactorialCache::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  if (values_.empty()) values_.emplace_back(1);
  for (std::size_t k = values_.size(); k <= n; ++k) {
    values_.push_back(values_.back() * static_cast<unsigned long>(k));
  }
  return values_[n];
}

BigInt factorial(std::size_t n) { return factorial_cache().get(n); }

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace stieltjes
