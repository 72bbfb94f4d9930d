#include "stieltjes/enveloping.hpp"

#include "stieltjes/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stieltjes {

namespace {

BigRational abs_q(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

BigRational half_if_zero(std::size_t m) { return m == 0 ? BigRational(1, 2) : BigRational(0); }

// |S1(2n, m+1)| B_{2n} / (2n)!
BigRational base_term(std::size_t m, std::size_t n) {
  BigRational t = BigRational(stirling1_unsigned(2 * n, m + 1)) * bernoulli(2 * n) / BigRational(factorial(2 * n));
  t.canonicalize();
  return t;
}

BigRational signed_factorial(std::size_t m) {
  BigRational f(factorial(m));
  return (m % 2 == 0) ? f : BigRational(-f);
}

}  // namespace

BigRational enveloping_term(std::size_t m, std::size_t k) {
  if (k < 1) throw std::invalid_argument("enveloping_term requires k >= 1");
  BigRational t = signed_factorial(m) * base_term(m, k);
  t.canonicalize();
  return t;
}

BigRational enveloping_term_harmonic(std::size_t m, std::size_t k) {
  if (k < 1) throw std::invalid_argument("enveloping_term_harmonic requires k >= 1");
  if (m > 3) throw std::invalid_argument("harmonic form is available for m <= 3 only");
  const std::size_t j = 2 * k - 1;
  BigRational h1 = harmonic(j, 1);
  BigRational poly;
  switch (m) {
    case 0: poly = 1; break;
    case 1: poly = -h1; break;
    case 2: poly = h1 * h1 - harmonic(j, 2); break;
    default: poly = -(h1 * h1 * h1 - 3 * h1 * harmonic(j, 2) + 2 * harmonic(j, 3)); break;
  }
  BigRational t = bernoulli(2 * k) * poly / BigRational(static_cast<long>(2 * k));
  t.canonicalize();
  return t;
}

EnvelopingResult gamma_enveloping(std::size_t m, std::size_t N_max, const BigFloat* reference) {
  if (N_max < 2) throw std::invalid_argument("gamma_enveloping requires N_max >= 2");
  EnvelopingResult r;
  r.m = m;
  r.partial_sums.push_back(half_if_zero(m));
  for (std::size_t k = 1; k <= N_max; ++k) {
    r.terms.push_back(enveloping_term(m, k));
    BigRational next = r.partial_sums.back() + r.terms.back();
    next.canonicalize();
    r.partial_sums.push_back(next);
  }
  for (std::size_t k = 1; k <= N_max; ++k) {
    const BigRational& t = r.terms[k - 1];
    if (t == 0) continue;
    if (r.first_nonzero == 0) r.first_nonzero = k;
    const BigRational& a = r.partial_sums[k - 1];
    const BigRational& b = r.partial_sums[k];
    r.brackets.push_back({k - 1, std::min(a, b), std::max(a, b)});
    if (r.optimal_N == 0 || abs_q(t) < abs_q(r.terms[r.optimal_N - 1])) r.optimal_N = k;
  }
  if (r.optimal_N == 0) throw std::logic_error("no nonzero enveloping term up to N_max");
  r.remainder_bound = abs_q(r.terms[r.optimal_N - 1]);
  if (reference != nullptr) {
    bool inside = true;
    for (const Bracket& br : r.brackets) {
      if (br.N + 1 > r.optimal_N) break;
      RationalInterval iv{br.lower, br.upper};
      inside = inside && iv.contains(*reference);
    }
    r.reference_bracketed = inside;
  }
  return r;
}

std::vector<BigRational> euler_transform_terms(std::size_t m, std::size_t N) {
  if (N < 1) throw std::invalid_argument("euler_transform requires N >= 1");
  std::vector<BigRational> base;
  for (std::size_t n = 1; n <= N; ++n) base.push_back(base_term(m, n));
  std::vector<BigRational> out{half_if_zero(m)};
  const BigRational sign = signed_factorial(m);
  for (std::size_t k = 1; k <= N; ++k) {
    BigRational s = 0;
    for (std::size_t n = 1; n <= k; ++n) s += BigRational(binomial(k - 1, n - 1)) * base[n - 1];
    BigInt two_k = 1;
    mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), k);
    BigRational t = sign * s / BigRational(two_k);
    t.canonicalize();
    out.push_back(t);
  }
  return out;
}

BigRational euler_transform(std::size_t m, std::size_t N) {
  BigRational sum = 0;
  for (const auto& t : euler_transform_terms(m, N)) sum += t;
  sum.canonicalize();
  return sum;
}

// --- bounds -------------------------------------------------------------

bool RationalInterval::contains(const BigFloat& x) const {
  // Compare exactly: x is a dyadic rational.
  BigRational xq;
  mpfr_get_q(xq.get_mpq_t(), x.raw());
  return lower < xq && xq < upper;
}

int RationalInterval::sign() const {
  if (lower > 0) return 1;
  if (upper < 0) return -1;
  return 0;
}

RationalInterval stieltjes_bounds(std::size_t m) {
  auto b = [](std::size_t n) { return abs_q(bernoulli(n)); };
  const BigRational mq(static_cast<long>(m));
  RationalInterval iv;
  switch (m % 4) {
    case 1: {
      BigRational first = b(m + 1) / (mq + 1);
      iv = {-first, (3 * mq + 8) * b(m + 3) / 24 - first};
      break;
    }
    case 3: {
      BigRational first = b(m + 1) / (mq + 1);
      iv = {first - (3 * mq + 8) * b(m + 3) / 24, first};
      break;
    }
    case 2: {
      BigRational first = b(m + 2) / 2;
      iv = {-first, (mq + 3) * (mq + 4) * b(m + 4) / 48 - first};
      break;
    }
    default: {
      BigRational first = b(m + 2) / 2;
      iv = {first - (mq + 3) * (mq + 4) * b(m + 4) / 48, first};
      break;
    }
  }
  if (m == 0) {
    iv.lower += BigRational(1, 2);
    iv.upper += BigRational(1, 2);
  }
  iv.lower.canonicalize();
  iv.upper.canonicalize();
  return iv;
}

std::vector<CompetitorBound> BoundsReport::competitors() const {
  BigRational w = this_bound.width();
  auto entry = [&](const char* name, const BigFloat& mag) {
    BigFloat sym = mag * 2;
    BigRational sq;
    mpfr_get_q(sq.get_mpq_t(), sym.raw());
    return CompetitorBound{name, mag, w < sq};
  };
  std::vector<CompetitorBound> out;
  out.push_back(entry("berndt", berndt));
  out.push_back(entry("lavrik", lavrik));
  out.push_back(entry("israilov_k1", israilov[0]));
  out.push_back(entry("israilov_k2", israilov[1]));
  out.push_back(entry("israilov_k3", israilov[2]));
  out.push_back(entry("nan_you_williams", nan_you_williams));
  if (matsuoka) out.push_back(entry("matsuoka", *matsuoka));
  return out;
}

BoundsReport competitor_bounds(std::size_t m, const PrecisionContext& ctx) {
  if (m < 1) throw std::invalid_argument("competitor bounds require m >= 1");
  const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits);
  const BigFloat p = pi(PrecisionContext(wp, ctx.guard_bits));
  const long ml = static_cast<long>(m);
  const long parity_factor = (m % 2 == 1) ? 2 : 4;
  auto round = [&](const BigFloat& x) { return x.rounded(ctx.bits()); };

  BoundsReport r{.m = m,
                 .this_bound = stieltjes_bounds(m),
                 .berndt = round(BigFloat(BigInt(factorial(m - 1) * parity_factor), wp) / pow(p, ml)),
                 .lavrik = round(ldexp(BigFloat(factorial(m), wp), -(ml + 1))),
                 .israilov = {},
                 .nan_you_williams = BigFloat(ctx.bits()),
                 .matsuoka = std::nullopt};
  const BigRational c[3] = {BigRational(1, 2), BigRational(7, 12), BigRational(11, 3)};
  for (int k = 1; k <= 3; ++k) {
    BigFloat v(BigRational(BigRational(factorial(m)) * c[k - 1]), wp);
    v /= pow(BigFloat(2L * k, wp), ml);
    r.israilov.push_back(round(v));
  }
  BigInt m_pow;
  mpz_ui_pow_ui(m_pow.get_mpz_t(), m, m + 1);
  BigFloat nyw(BigRational(BigInt(factorial(2 * m) * parity_factor), m_pow), wp);
  nyw /= pow(ldexp(p, 1), ml);
  r.nan_you_williams = round(nyw);
  if (m >= 5) {
    BigFloat lm = pow(log(BigFloat(ml, wp)), ml);
    r.matsuoka = round(lm / 10000);
  }
  return r;
}

}  // namespace stieltjes
