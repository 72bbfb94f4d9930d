#include "stieltjes/stirling.hpp"

#include "stieltjes/complex.hpp"
#include "stieltjes/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stieltjes {

// --- StirlingTable ------------------------------------------------------

BigInt StirlingTable::get(std::size_t n, std::size_t l) {
  if (l > n) return 0;
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return rows_[n][l];
  }
  std::unique_lock lock(mutex_);
  extend_to(n);
  return rows_[n][l];
}

std::vector<BigInt> StirlingTable::row(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return rows_[n];
  }
  std::unique_lock lock(mutex_);
  extend_to(n);
  return rows_[n];
}

std::size_t StirlingTable::rows_cached() {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void StirlingTable::extend_to(std::size_t n) {
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() <= n) {
    std::vector<BigInt> next;
    kernels::stirling_next_row(rows_.back(), rows_.size() - 1, next);
    rows_.push_back(std::move(next));
  }
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

void StirlingRowStream::advance() {
  kernels::stirling_next_row(row_, n_, scratch_);
  row_.swap(scratch_);
  ++n_;
}

std::vector<std::vector<BigInt>> stirling1_columns(std::size_t n_max, std::size_t columns) {
  std::vector<std::vector<BigInt>> out(n_max + 1, std::vector<BigInt>(columns));
  if (columns == 0) return out;
  out[0][0] = 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t l = 0; l < columns; ++l) {
      BigInt v = out[n][l] * static_cast<unsigned long>(n);
      if (l >= 1) v += out[n][l - 1];
      out[n + 1][l] = std::move(v);
    }
  }
  return out;
}

BigInt stirling1_unsigned(std::size_t n, std::size_t l) { return stirling_table().get(n, l); }

BigInt stirling1_signed(std::size_t n, std::size_t l) {
  BigInt v = stirling1_unsigned(n, l);
  return ((n - l) % 2 == 0) ? v : BigInt(-v);
}

// --- explicit formula ---------------------------------------------------

BigInt stirling1_explicit(std::size_t n, std::size_t l) {
  if (l < 1 || l > n) {
    throw std::invalid_argument("stirling1_explicit requires 1 <= l <= n (got n=" + std::to_string(n) +
                                ", l=" + std::to_string(l) + ")");
  }
  const std::size_t d = n - l;
  BigRational outer = 0;
  for (std::size_t k = 0; k <= d; ++k) {
    // k! * inner = sum_r (-1)^r C(k,r) r^{d+k}
    BigInt inner = 0;
    for (std::size_t r = 0; r <= k; ++r) {
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), r, d + k);
      BigInt t = binomial(k, r) * power;
      if (r % 2 == 0) {
        inner += t;
      } else {
        inner -= t;
      }
    }
    BigInt denom = BigInt(static_cast<unsigned long>(n + k)) * factorial(d - k) * factorial(d + k) * factorial(k);
    outer += BigRational(inner, denom);
  }
  outer.canonicalize();
  BigRational value = outer * BigRational(factorial(2 * n - l), factorial(l - 1));
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("explicit Stirling formula produced a non-integer");
  return value.get_num();
}

// --- contour quadratures ------------------------------------------------

namespace {

void require_power_of_two(std::size_t nodes) {
  if (nodes < 64 || (nodes & (nodes - 1)) != 0) {
    throw std::invalid_argument("nodes must be a power of two >= 64 (got " + std::to_string(nodes) + ")");
  }
}

void require_index(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("contour formulas require 1 <= k <= n (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
}

// Mean over all nodes and over the even nodes (the N/2 rule).
QuadratureEstimate trapezoid_pair(const std::vector<BigFloat>& samples, const PrecisionContext& ctx,
                                  mpfr_prec_t wp) {
  const std::size_t count = samples.size();
  BigFloat full = kernels::ordered_sum(samples, wp) / static_cast<long>(count);
  std::vector<BigFloat> even;
  even.reserve(count / 2);
  for (std::size_t j = 0; j < count; j += 2) even.push_back(samples[j]);
  BigFloat half = kernels::ordered_sum(even, wp) / static_cast<long>(count / 2);
  BigFloat err = abs(full - half);
  return {full.rounded(ctx.bits()), err.rounded(ctx.bits())};
}

}  // namespace

QuadratureEstimate stirling1_contour(std::size_t n, std::size_t k, const BigFloat& r, std::size_t nodes,
                                     const PrecisionContext& ctx) {
  require_index(n, k);
  require_power_of_two(nodes);
  if (!(r.sign() > 0) || !(compare(r, BigInt(1)) < 0)) {
    throw std::invalid_argument("contour radius must satisfy 0 < r < 1");
  }
  // r^{-n} must stay inside the exponent range with room to spare.
  double log2_inv_r = -std::log2(r.to_double());
  if (!std::isfinite(log2_inv_r) || log2_inv_r * static_cast<double>(n) > 0.25 * static_cast<double>(mpfr_get_emax())) {
    throw std::invalid_argument("contour radius too small: r^-n overflows the exponent range");
  }
  const auto wp = static_cast<mpfr_prec_t>(ctx.precision_bits + ctx.guard_bits + 16 +
                                           static_cast<long>(std::ceil(log2_inv_r * static_cast<double>(n))) +
                                           static_cast<long>(std::log2(static_cast<double>(nodes))));
  const BigFloat two_pi = ldexp(pi(PrecisionContext(wp, ctx.guard_bits)), 1);
  const BigFloat radius = r.rounded(wp);
  const BigFloat scale = pow(radius, -static_cast<long>(n));

  auto sample = [&](std::size_t j) {
    BigFloat phi = two_pi * static_cast<long>(j) / static_cast<long>(nodes);
    Complex z = Complex::unit(phi);
    Complex w(BigFloat(1, wp) - radius * z.re, -(radius * z.im));  // 1 - r e^{i phi}
    Complex lk = pow(log(w), k);
    BigFloat n_phi = phi * static_cast<long>(n);
    // Re[lk * e^{-i n phi}]
    BigFloat re = lk.re * cos(n_phi) + lk.im * sin(n_phi);
    return re * scale;
  };
  std::vector<BigFloat> samples = kernels::map(nodes, sample);
  QuadratureEstimate q = trapezoid_pair(samples, PrecisionContext(wp, ctx.guard_bits), wp);
  BigFloat factor(BigRational(factorial(n), factorial(k)), wp);
  if (k % 2 == 1) factor = -factor;
  BigFloat value = q.value * factor;
  BigFloat err = q.error_estimate * abs(factor);
  return {value.rounded(ctx.bits()), err.rounded(ctx.bits())};
}

QuadratureEstimate stirling1_pochhammer_contour(std::size_t n, std::size_t k, std::size_t nodes,
                                                const PrecisionContext& ctx) {
  require_index(n, k);
  if (nodes < 64) throw std::invalid_argument("nodes must be >= 64");
  const long fact_bits = static_cast<long>(mpz_sizeinbase(factorial(n).get_mpz_t(), 2));
  const auto wp = static_cast<mpfr_prec_t>(ctx.precision_bits + ctx.guard_bits + 16 + fact_bits +
                                           static_cast<long>(std::log2(static_cast<double>(nodes))));
  const BigFloat two_pi = ldexp(pi(PrecisionContext(wp, ctx.guard_bits)), 1);

  auto sample = [&](std::size_t j) {
    BigFloat phi = two_pi * static_cast<long>(j) / static_cast<long>(nodes);
    Complex z = Complex::unit(phi);
    Complex rising = z;
    for (std::size_t i = 1; i < n; ++i) {
      rising = rising * Complex(z.re + BigFloat(static_cast<long>(i), wp), z.im);
    }
    BigFloat k_phi = phi * static_cast<long>(k);
    // Re[(z)_n e^{-i k phi}]
    return rising.re * cos(k_phi) + rising.im * sin(k_phi);
  };
  std::vector<BigFloat> samples = kernels::map(nodes, sample);
  if (nodes % 2 != 0) {
    BigFloat full = kernels::ordered_sum(samples, wp) / static_cast<long>(nodes);
    return {full.rounded(ctx.bits()), BigFloat(ctx.bits())};
  }
  return trapezoid_pair(samples, ctx, wp);
}

StirlingBound stirling1_bound(std::size_t n, std::size_t k, const PrecisionContext& ctx) {
  require_index(n, k);
  const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits);
  BigFloat base = -expm1(BigFloat(-1, wp));  // 1 - e^{-1}
  BigFloat bound = BigFloat(BigRational(factorial(n), factorial(k)), wp) / pow(base, static_cast<long>(n));
  bool holds = compare(bound, stirling1_unsigned(n, k)) >= 0;
  return {bound.rounded(ctx.bits()), holds};
}

// --- Gregory, Cauchy, zeta ----------------------------------------------

BigRational gregory(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gregory requires n >= 1");
  std::vector<BigInt> row = stirling_table().row(n);
  BigRational sum = 0;
  for (std::size_t l = 1; l <= n; ++l) {
    BigRational t(row[l], BigInt(static_cast<unsigned long>(l + 1)));
    if ((n - l) % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
  }
  BigRational g = sum / BigRational(factorial(n));
  g.canonicalize();
  return g;
}

BigRational cauchy2(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cauchy2 requires n >= 1");
  std::vector<BigInt> row = stirling_table().row(n);
  BigRational sum = 0;
  for (std::size_t l = 1; l <= n; ++l) sum += BigRational(row[l], BigInt(static_cast<unsigned long>(l + 1)));
  sum.canonicalize();
  return sum;
}

BigFloat zeta_by_stirling(std::size_t k, std::size_t N, const PrecisionContext& ctx) {
  if (k < 1) throw std::invalid_argument("zeta_by_stirling requires k >= 1");
  const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits) +
                         static_cast<mpfr_prec_t>(std::log2(static_cast<double>(N + 2)) + 1);
  // a[j] = |S1(n,j)| / n!, advanced column by column for j <= k.
  std::vector<BigFloat> a(k + 1, BigFloat(wp));
  a[0] = BigFloat(1, wp);
  BigFloat sum(wp);
  BigFloat tmp(wp);
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t j = k; j >= 1; --j) {
      mpfr_mul_ui(tmp.raw(), a[j].raw(), n, MPFR_RNDN);
      mpfr_add(tmp.raw(), tmp.raw(), a[j - 1].raw(), MPFR_RNDN);
      mpfr_div_ui(a[j].raw(), tmp.raw(), n + 1, MPFR_RNDN);
    }
    mpfr_mul_ui(a[0].raw(), a[0].raw(), n, MPFR_RNDN);  // |S1(n+1,0)| = 0 for n >= 0
    if (n + 1 >= k) {
      mpfr_div_ui(tmp.raw(), a[k].raw(), n + 1, MPFR_RNDN);
      mpfr_add(sum.raw(), sum.raw(), tmp.raw(), MPFR_RNDN);
    }
  }
  return sum.rounded(ctx.bits());
}

}  // namespace stieltjes
