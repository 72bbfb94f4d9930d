#include "stieltjes/oracles.hpp"

#include "stieltjes/complex.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stieltjes {

// --- LogPolyOverX -------------------------------------------------------

LogPolyOverX LogPolyOverX::log_power_over_x(std::size_t m) {
  LogPolyOverX f;
  f.power = 1;
  f.coeffs.assign(m + 1, BigRational(0));
  f.coeffs[m] = 1;
  return f;
}

BigFloat LogPolyOverX::evaluate(const BigFloat& x) const {
  const mpfr_prec_t bits = x.precision();
  BigFloat ln_x = log(x);
  BigFloat acc(bits);
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    acc *= ln_x;
    acc += BigFloat(coeffs[j], bits);
  }
  return acc / pow(x, static_cast<long>(power));
}

LogPolyOverX logpoly_derivative(const LogPolyOverX& f, std::size_t order) {
  LogPolyOverX g = f;
  for (std::size_t step = 0; step < order; ++step) {
    const BigRational p(static_cast<long>(g.power));
    std::vector<BigRational> next(g.coeffs.size());
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      BigRational c = -p * g.coeffs[j];
      if (j + 1 < g.coeffs.size()) c += BigRational(static_cast<long>(j + 1)) * g.coeffs[j + 1];
      next[j] = c;
    }
    g.coeffs = std::move(next);
    g.power += 1;
  }
  return g;
}

// --- Israilov -----------------------------------------------------------

namespace {

struct IsrailovCore {
  BigFloat value;
  BigFloat remainder;
  std::size_t corrections;
};

// N == 0 selects the number of corrections automatically: terms are added
// while they exceed stop (relative to the value of the leading part) and
// keep decreasing.
IsrailovCore israilov_core(std::size_t m, std::size_t n, std::size_t N, mpfr_prec_t wp, long stop_bits) {
  const BigFloat x(static_cast<long>(n), wp);
  const BigFloat ln_n = log(x);
  const long ml = static_cast<long>(m);

  BigFloat lead = kernels::map_sum(
      n,
      [&](std::size_t i) {
        BigFloat k(static_cast<long>(i + 1), wp);
        return pow(log(k), ml) / k;
      },
      wp);
  lead -= pow(ln_n, ml + 1) / (ml + 1);
  lead -= pow(ln_n, ml) / (2 * static_cast<long>(n));

  LogPolyOverX d = LogPolyOverX::log_power_over_x(m);
  std::size_t order = 0;
  auto correction = [&](std::size_t k) {
    d = logpoly_derivative(d, 2 * k - 1 - order);
    order = 2 * k - 1;
    BigFloat coef(BigRational(bernoulli(2 * k) / BigRational(factorial(2 * k))), wp);
    return coef * d.evaluate(x);
  };

  const std::size_t cap = (N == 0) ? 4 * n + 8 : N - 1;
  BigFloat previous_magnitude(wp);
  BigFloat remainder(wp);
  std::size_t used = 0;
  for (std::size_t k = 1;; ++k) {
    BigFloat term = correction(k);
    BigFloat magnitude = abs(term);
    if (k > cap) {
      remainder = magnitude;
      break;
    }
    if (N == 0) {
      bool small = !lead.is_zero() && !magnitude.is_zero() &&
                   magnitude.exponent() < lead.exponent() - stop_bits;
      // Terms shrink roughly like (2k)^2 / (2 pi n)^2 per step until k ~ pi n;
      // single terms can dip below the trend, so only growth past that point
      // counts as divergence.
      bool diverging = static_cast<double>(k) > std::numbers::pi * static_cast<double>(n) &&
                       magnitude > previous_magnitude;
      if (small || magnitude.is_zero()) {
        remainder = magnitude;
        break;
      }
      if (diverging) {
        throw NumericalAlarm("Euler-Maclaurin corrections started growing before reaching the target accuracy");
      }
    }
    lead -= term;
    previous_magnitude = magnitude;
    used = k;
  }
  return {lead, remainder, used};
}

mpfr_prec_t israilov_precision(std::size_t m, std::size_t n, long bits) {
  double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  double growth = static_cast<double>(m + 1) * std::log2(ln_n + 1.0) + std::log2(static_cast<double>(n) + 1.0);
  return static_cast<mpfr_prec_t>(bits + 48 + static_cast<long>(std::ceil(growth)) + 4 * static_cast<long>(m));
}

}  // namespace

IsrailovResult gamma_israilov(std::size_t m, std::size_t n, std::size_t N, const PrecisionContext& ctx,
                              double tolerance) {
  if (n < 1 || N < 1) throw std::invalid_argument("gamma_israilov requires n >= 1 and N >= 1");
  const mpfr_prec_t wp = israilov_precision(m, n, ctx.precision_bits + ctx.guard_bits);
  IsrailovCore core = israilov_core(m, n, N, wp, 0);
  IsrailovResult r{core.value.rounded(ctx.bits()), core.remainder.rounded(ctx.bits()), true};
  if (tolerance > 0.0) r.within_tolerance = r.remainder.to_double() <= tolerance;
  return r;
}

BigFloat reference_stieltjes(std::size_t m, long bits) {
  if (bits < 64) throw std::invalid_argument("reference precision must be >= 64 bits");
  // The smallest correction is about e^{-2 pi n}; pick n with room for
  // the (ln n)^m m! growth of the derivatives and a small gamma_m.
  const long target = bits + 64 + 4 * static_cast<long>(m);
  const auto n = static_cast<std::size_t>(std::ceil(static_cast<double>(target) * std::log(2.0) / (2.0 * std::numbers::pi))) + 12;
  const mpfr_prec_t wp = israilov_precision(m, n, target);
  IsrailovCore core = israilov_core(m, n, 0, wp, target);
  return core.value.rounded(static_cast<mpfr_prec_t>(bits));
}

// --- Jensen-Franel ------------------------------------------------------

QuadratureSpec QuadratureSpec::for_context(const PrecisionContext& ctx) {
  QuadratureSpec spec;
  spec.ctx = ctx;
  const double total = static_cast<double>(ctx.precision_bits + ctx.guard_bits);
  spec.truncation = static_cast<int>(std::ceil(total * std::log(2.0) / (2.0 * std::numbers::pi))) + 2;
  spec.level = std::max(3, static_cast<int>(std::ceil(std::log2(total / 8.0))));
  return spec;
}

namespace {

struct TanhSinhLayout {
  double h;
  long half_count;  // nodes at t = i h for |i| <= half_count
};

TanhSinhLayout layout_for(const QuadratureSpec& spec, mpfr_prec_t wp) {
  const double h = std::ldexp(1.0, -spec.level);
  // beyond t_max the weights fall below 2^{-(wp+8)}
  const double t_max = std::asinh((static_cast<double>(wp) + 8.0) * std::log(2.0) / std::numbers::pi);
  return {h, static_cast<long>(std::ceil(t_max / h))};
}

mpfr_prec_t jensen_franel_precision(const QuadratureSpec& spec) {
  return spec.ctx.bits() + static_cast<mpfr_prec_t>(spec.ctx.guard_bits) + 16;
}

}  // namespace

std::size_t QuadratureSpec::node_count() const {
  TanhSinhLayout layout = layout_for(*this, jensen_franel_precision(*this));
  return static_cast<std::size_t>(truncation) * static_cast<std::size_t>(2 * layout.half_count + 1);
}

BigFloat jensen_franel_integral(std::size_t m, const QuadratureSpec& spec, bool parallel) {
  if (spec.rule != "tanh-sinh") throw std::invalid_argument("unsupported quadrature rule: " + spec.rule);
  if (spec.level < 1 || spec.truncation < 1) throw std::invalid_argument("quadrature level and truncation must be >= 1");
  const mpfr_prec_t wp = jensen_franel_precision(spec);
  const TanhSinhLayout layout = layout_for(spec, wp);
  const std::size_t per_panel = static_cast<std::size_t>(2 * layout.half_count + 1);
  const std::size_t total = per_panel * static_cast<std::size_t>(spec.truncation);
  const BigFloat p = pi(PrecisionContext(wp, spec.ctx.guard_bits));
  const BigFloat half_pi = ldexp(p, -1);
  const BigFloat two_pi = ldexp(p, 1);
  const BigFloat h(BigRational(1, BigInt(1) << spec.level), wp);
  const long ml = static_cast<long>(m);

  auto sample = [&](std::size_t idx) {
    const long panel = static_cast<long>(idx / per_panel);
    const long i = static_cast<long>(idx % per_panel) - layout.half_count;
    BigFloat t = h * i;
    BigFloat u = half_pi * sinh(t);  // (pi/2) sinh t
    // offset = 1/(1 + e^{-2u}) in (0,1), accurate near both ends
    BigFloat offset = BigFloat(1, wp) / (BigFloat(1, wp) + exp(ldexp(-u, 1)));
    BigFloat x = offset + BigFloat(panel, wp);
    BigFloat ch = cosh(u);
    BigFloat weight = ldexp(half_pi * cosh(t) / (ch * ch), -1);  // (pi/4) cosh t / cosh^2 u

    // w = ln(1 - ix) = ln(1+x^2)/2 - i atan x
    BigFloat x_sq = x * x;
    Complex w(ldexp(log1p(x_sq), -1), -atan(x));
    Complex wm = pow(w, static_cast<unsigned long>(ml));
    // Im[w^m (1 + ix)] / (1 + x^2)
    BigFloat im = (wm.im + x * wm.re) / (BigFloat(1, wp) + x_sq);
    BigFloat f = ldexp(im, 1) / expm1(two_pi * x);
    return f * weight;
  };
  BigFloat sum = parallel ? kernels::map_sum(total, sample, wp) : kernels::serial::map_sum(total, sample, wp);
  sum *= h;
  if (m == 0) sum += BigFloat(BigRational(1, 2), wp);
  return sum.rounded(spec.ctx.bits());
}

BigFloat gamma_jensen_franel(std::size_t m, const QuadratureSpec& spec) {
  BigFloat first = jensen_franel_integral(m, spec);
  QuadratureSpec check = spec;
  check.ctx = spec.ctx.guarded();
  check.level = spec.level + 1;
  check.truncation = QuadratureSpec::for_context(check.ctx).truncation;
  BigFloat second = jensen_franel_integral(m, check);
  long agree = agreeing_bits(first, second);
  if (agree < spec.ctx.precision_bits - 8) {
    throw NumericalAlarm("Jensen-Franel quadrature agrees on only " + std::to_string(agree) + " of " +
                         std::to_string(spec.ctx.precision_bits) + " bits; raise the level or truncation");
  }
  return second.rounded(spec.ctx.bits());
}

// --- classical series ---------------------------------------------------

BigRational gamma_fontana_mascheroni(std::size_t N) {
  if (N < 1) throw std::invalid_argument("gamma_fontana_mascheroni requires N >= 1");
  BigRational sum = 0;
  for (std::size_t n = 1; n <= N; ++n) sum += abs(gregory(n)) / BigRational(static_cast<long>(n));
  sum.canonicalize();
  return sum;
}

BigRational gamma_binet_norlund(std::size_t N) {
  if (N < 1) throw std::invalid_argument("gamma_binet_norlund requires N >= 1");
  BigRational sum = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    sum -= cauchy2(n) / BigRational(BigInt(static_cast<unsigned long>(n)) * factorial(n + 1));
  }
  sum.canonicalize();
  return sum;
}

BigRational jacobsthal_block(std::size_t n) {
  if (n < 1 || n > 40) throw std::invalid_argument("jacobsthal_block requires 1 <= n <= 40");
  const unsigned long first = 1UL << (n - 1);
  const unsigned long last = (1UL << n) - 1;
  BigRational sum = 0;
  for (unsigned long k = first; k <= last; ++k) {
    sum += BigRational(BigInt(1), BigInt(2 * k + 1) * BigInt(2 * k + 2));
  }
  sum *= BigRational(static_cast<long>(n));
  sum.canonicalize();
  return sum;
}

BigRational gamma_jacobsthal(std::size_t N_outer) {
  if (N_outer < 1) throw std::invalid_argument("gamma_jacobsthal requires N_outer >= 1");
  BigRational sum = 1;
  for (std::size_t n = 1; n <= N_outer; ++n) sum -= jacobsthal_block(n);
  sum.canonicalize();
  return sum;
}

BigFloat gamma_m_coppo_ser(std::size_t m, std::size_t N, const PrecisionContext& ctx) {
  if (N > 40) throw std::invalid_argument("gamma_m_coppo_ser requires N <= 40");
  if (m > 3) throw std::invalid_argument("gamma_m_coppo_ser requires m <= 3");
  const long guard = ctx.guard_bits;
  const mpfr_prec_t top = ctx.bits() + static_cast<mpfr_prec_t>(guard + static_cast<long>(N) + 16);
  const long ml = static_cast<long>(m);
  // ln^m(k+1)/(k+1) at the highest precision needed
  std::vector<BigFloat> g;
  for (std::size_t k = 0; k <= N; ++k) {
    BigFloat kp1(static_cast<long>(k + 1), top);
    g.push_back(pow(log(kp1), ml) / kp1);
  }
  const mpfr_prec_t out_wp = ctx.bits() + static_cast<mpfr_prec_t>(guard);
  BigFloat total(out_wp);
  for (std::size_t n = 0; n <= N; ++n) {
    const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(guard + static_cast<long>(n) + 16);
    BigFloat inner(wp);
    BigFloat largest(wp);
    for (std::size_t k = 0; k <= n; ++k) {
      BigFloat t = BigFloat(binomial(n, k), wp) * g[k].rounded(wp);
      if (abs(t) > largest) largest = abs(t);
      if (k % 2 == 0) {
        inner += t;
      } else {
        inner -= t;
      }
    }
    if (inner.is_zero()) {
      if (!largest.is_zero()) throw NumericalAlarm("Coppo-Ser inner sum cancelled completely");
      continue;
    }
    long lost = largest.exponent() - inner.exponent();
    if (lost > static_cast<long>(n) + guard) {
      throw NumericalAlarm("Coppo-Ser inner sum lost " + std::to_string(lost) + " bits at n=" + std::to_string(n));
    }
    BigFloat weight(abs(gregory(n + 1)), out_wp);
    total += weight * inner.rounded(out_wp);
  }
  return total.rounded(ctx.bits());
}

}  // namespace stieltjes
