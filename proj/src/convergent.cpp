#include "stieltjes/convergent.hpp"

#include "stieltjes/kernels.hpp"
#include "stieltjes/stirling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stieltjes {

namespace {

constexpr std::size_t kMaxOrder = 8;

}  // namespace

// --- PiPolynomial -------------------------------------------------------

PiPolynomial::PiPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void PiPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

PiPolynomial PiPolynomial::operator*(const BigRational& s) const {
  std::vector<BigRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * s);
  return PiPolynomial(std::move(out));
}

BigFloat PiPolynomial::evaluate(const BigFloat& inverse_pi_squared) const {
  // Horner in x = pi^{-2}: x * (c0 + x (c1 + x (c2 + ...)))
  const mpfr_prec_t bits = inverse_pi_squared.precision();
  BigFloat acc(bits);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= inverse_pi_squared;
    acc += BigFloat(coeffs_[k], bits);
  }
  acc *= inverse_pi_squared;
  return acc;
}

BigFloat PiPolynomial::evaluate(const PrecisionContext& ctx) const {
  const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits);
  BigFloat p = pi(PrecisionContext(wp, ctx.guard_bits));
  BigFloat x = BigFloat(1, wp) / (p * p);
  return evaluate(x).rounded(ctx.bits());
}

PiPolynomial term_pi_polynomial(std::size_t m, std::size_t n) {
  if (n < 1) throw std::invalid_argument("term_pi_polynomial requires n >= 1");
  std::vector<BigInt> row = stirling_table().row(n);
  const BigInt m_fact = factorial(m);
  const BigInt base_den = BigInt(static_cast<unsigned long>(n)) * factorial(n);
  std::vector<BigRational> coeffs;
  for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
    BigInt num = m_fact * stirling1_unsigned(2 * k + 2, m + 1) * row[2 * k + 1];
    if ((m + k) % 2 == 1) num = -num;
    BigInt den = base_den;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * k + 1);
    coeffs.emplace_back(num, den);
  }
  return PiPolynomial(std::move(coeffs));
}

// --- ConvergentSeriesState ----------------------------------------------

ConvergentSeriesState::ConvergentSeriesState(std::size_t m, const PrecisionContext& ctx)
    : m_(m),
      ctx_(ctx),
      inverse_pi_squared_(ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits)),
      partial_(ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits)) {
  const mpfr_prec_t wp = partial_.precision();
  BigFloat p = pi(PrecisionContext(wp, ctx.guard_bits));
  inverse_pi_squared_ = BigFloat(1, wp) / (p * p);
  if (m == 0) partial_ = BigFloat(BigRational(1, 2), wp);
}

const PiPolynomial& ConvergentSeriesState::step() {
  terms_.push_back(term_pi_polynomial(m_, n_next_));
  partial_ += terms_.back().evaluate(inverse_pi_squared_);
  ++n_next_;
  return terms_.back();
}

BigFloat ConvergentSeriesState::partial_value() const { return partial_.rounded(ctx_.bits()); }

// --- ConvergentEvaluator ------------------------------------------------

ConvergentEvaluator::ConvergentEvaluator(std::vector<std::size_t> orders, const PrecisionContext& ctx,
                                         bool parallel)
    : orders_(std::move(orders)),
      ctx_(ctx),
      parallel_(parallel),
      wp_(ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits) + 32),
      pi_(pi(PrecisionContext(wp_, ctx.guard_bits))),
      weights_(orders_.size()),
      weight_scale_(ldexp(pi_, 1) * pi_),
      row_{BigInt(1)} {
  std::size_t max_order = orders_.empty() ? 0 : *std::max_element(orders_.begin(), orders_.end());
  columns_.assign(max_order + 2, BigInt(0));
  columns_[0] = 1;
  for (std::size_t m : orders_) {
    if (m > kMaxOrder) throw std::invalid_argument("convergent series supports m <= 8");
    partials_.push_back(m == 0 ? BigFloat(BigRational(1, 2), wp_) : BigFloat(wp_));
    last_terms_.emplace_back(wp_);
  }
}

void ConvergentEvaluator::extend_weights(std::size_t k_count) {
  if (orders_.empty()) return;
  const BigFloat two_pi = ldexp(pi_, 1);
  const BigFloat step = two_pi * two_pi;
  for (std::size_t k = weights_[0].size(); k < k_count; ++k) {
    // advance the column cursor to row 2k+2
    while (columns_row_ < 2 * k + 2) {
      for (std::size_t l = columns_.size(); l-- > 0;) {
        columns_[l] *= static_cast<unsigned long>(columns_row_);
        if (l >= 1) columns_[l] += columns_[l - 1];
      }
      ++columns_row_;
    }
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::size_t m = orders_[i];
      BigFloat w(BigInt(factorial(m) * columns_[m + 1]), wp_);
      w /= weight_scale_;
      if ((m + k) % 2 == 1) w = -w;
      weights_[i].push_back(std::move(w));
    }
    weight_scale_ *= step;
  }
}

void ConvergentEvaluator::advance() {
  if (parallel_) {
    kernels::stirling_next_row(row_, stream_n_, scratch_);
  } else {
    kernels::serial::stirling_next_row(row_, stream_n_, scratch_);
  }
  row_.swap(scratch_);
  ++stream_n_;
  const std::size_t n = stream_n_;
  n_factorial_ *= static_cast<unsigned long>(n);
  extend_weights((n + 1) / 2);

  std::vector<BigFloat> sums = parallel_ ? kernels::odd_column_sums(row_, weights_, wp_)
                                         : kernels::serial::odd_column_sums(row_, weights_, wp_);
  BigFloat denom(n_factorial_, wp_);
  denom *= static_cast<long>(n);
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    last_terms_[i] = sums[i] / denom;
    partials_[i] += last_terms_[i];
  }
}

void ConvergentEvaluator::advance_to(std::size_t N) {
  while (stream_n_ < N) advance();
}

BigFloat ConvergentEvaluator::partial(std::size_t i) const { return partials_[i].rounded(ctx_.bits()); }

BigFloat gamma_convergent(std::size_t m, std::size_t N, const PrecisionContext& ctx) {
  if (N < 1) throw std::invalid_argument("gamma_convergent requires N >= 1");
  ConvergentEvaluator eval({m}, ctx);
  eval.advance_to(N);
  return eval.partial(0);
}

std::vector<std::pair<std::size_t, BigFloat>> error_trace(std::size_t m, const std::vector<std::size_t>& N_list,
                                                          const BigFloat& reference, const PrecisionContext& ctx) {
  if (reference.precision() < ctx.bits() + 32) {
    throw std::invalid_argument("reference must carry at least " + std::to_string(ctx.precision_bits + 32) +
                                " bits (got " + std::to_string(reference.precision()) + ")");
  }
  std::vector<std::size_t> order = N_list;
  std::sort(order.begin(), order.end());
  ConvergentEvaluator eval({m}, ctx);
  std::vector<std::pair<std::size_t, BigFloat>> by_n;
  for (std::size_t N : order) {
    if (N < 1) throw std::invalid_argument("error_trace requires N >= 1");
    eval.advance_to(N);
    BigFloat err = relative_difference(eval.partial(0), reference.rounded(ctx.bits() + 32));
    by_n.emplace_back(N, err.rounded(ctx.bits()));
  }
  std::vector<std::pair<std::size_t, BigFloat>> out;
  out.reserve(N_list.size());
  for (std::size_t N : N_list) {
    auto it = std::lower_bound(by_n.begin(), by_n.end(), N,
                               [](const auto& entry, std::size_t key) { return entry.first < key; });
    out.push_back(*it);
  }
  return out;
}

BigFloat rate_diagnostic(std::size_t m, std::size_t n, const PrecisionContext& ctx) {
  if (n < 3) throw std::invalid_argument("rate_diagnostic requires n >= 3");
  const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits);
  BigFloat ln_n = log(BigFloat(static_cast<long>(n), wp));
  BigFloat ln_ln_n = log(ln_n);
  BigFloat two_pi = ldexp(pi(PrecisionContext(wp, ctx.guard_bits)), 1);
  BigFloat value = two_pi / BigFloat(factorial(m), wp) * pow(ln_ln_n, static_cast<long>(m));
  BigFloat n_sq(static_cast<long>(n), wp);
  n_sq *= n_sq;
  value /= n_sq * ln_n * ln_n;
  return value.rounded(ctx.bits());
}

}  // namespace stieltjes
