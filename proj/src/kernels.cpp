#include "stieltjes/kernels.hpp"

#include <algorithm>

namespace stieltjes::kernels {

namespace {

void next_row_entry(const std::vector<BigInt>& row, unsigned long n, std::vector<BigInt>& next,
                    std::size_t l) {
  // |S1(n+1, l)| = |S1(n, l-1)| + n |S1(n, l)|
  BigInt& out = next[l];
  if (l < row.size()) {
    mpz_mul_ui(out.get_mpz_t(), row[l].get_mpz_t(), n);
  } else {
    out = 0;
  }
  if (l >= 1) out += row[l - 1];
}

BigFloat chunk_sum(const std::vector<BigFloat>& values, std::size_t chunk, mpfr_prec_t bits) {
  BigFloat acc(bits);
  std::size_t end = std::min(values.size(), (chunk + 1) * kChunk);
  for (std::size_t i = chunk * kChunk; i < end; ++i) mpfr_add(acc.raw(), acc.raw(), values[i].raw(), MPFR_RNDN);
  return acc;
}

// Partial of weights[i] . row[odd] restricted to k in [chunk*kChunk, ...).
void odd_chunk(const std::vector<BigInt>& row, const std::vector<std::vector<BigFloat>>& weights,
               std::size_t chunk, mpfr_prec_t bits, std::vector<BigFloat>& out) {
  std::size_t k_rows = row.size() / 2;  // k with 2k+1 <= row.size()-1
  std::size_t begin = chunk * kChunk;
  std::size_t end = std::min(k_rows, begin + kChunk);
  BigFloat entry(bits);
  BigFloat product(bits);
  for (std::size_t i = 0; i < weights.size(); ++i) mpfr_set_zero(out[i].raw(), 1);
  for (std::size_t k = begin; k < end; ++k) {
    mpfr_set_z(entry.raw(), row[2 * k + 1].get_mpz_t(), MPFR_RNDN);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (k >= weights[i].size()) continue;
      mpfr_mul(product.raw(), entry.raw(), weights[i][k].raw(), MPFR_RNDN);
      mpfr_add(out[i].raw(), out[i].raw(), product.raw(), MPFR_RNDN);
    }
  }
}

std::vector<BigFloat> combine(const std::vector<std::vector<BigFloat>>& partials, std::size_t width,
                              mpfr_prec_t bits) {
  std::vector<BigFloat> out(width, BigFloat(bits));
  for (const auto& chunk : partials) {
    for (std::size_t i = 0; i < width; ++i) mpfr_add(out[i].raw(), out[i].raw(), chunk[i].raw(), MPFR_RNDN);
  }
  return out;
}

}  // namespace

void stirling_next_row(const std::vector<BigInt>& row, unsigned long n, std::vector<BigInt>& next) {
  next.resize(row.size() + 1);
  const long size = static_cast<long>(next.size());
#pragma omp parallel for schedule(static)
  for (long l = 0; l < size; ++l) next_row_entry(row, n, next, static_cast<std::size_t>(l));
}

std::vector<BigFloat> odd_column_sums(const std::vector<BigInt>& row,
                                      const std::vector<std::vector<BigFloat>>& weights,
                                      mpfr_prec_t bits) {
  std::size_t chunks = chunk_count(row.size() / 2);
  std::vector<std::vector<BigFloat>> partials(chunks, std::vector<BigFloat>(weights.size(), BigFloat(bits)));
  const long n = static_cast<long>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < n; ++c) {
    odd_chunk(row, weights, static_cast<std::size_t>(c), bits, partials[static_cast<std::size_t>(c)]);
  }
  return combine(partials, weights.size(), bits);
}

BigFloat ordered_sum(const std::vector<BigFloat>& values, mpfr_prec_t bits) {
  std::size_t chunks = chunk_count(values.size());
  std::vector<BigFloat> sums(chunks, BigFloat(bits));
  const long n = static_cast<long>(chunks);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < n; ++c) sums[static_cast<std::size_t>(c)] = chunk_sum(values, static_cast<std::size_t>(c), bits);
  BigFloat total(bits);
  for (const auto& s : sums) mpfr_add(total.raw(), total.raw(), s.raw(), MPFR_RNDN);
  return total;
}

namespace serial {

void stirling_next_row(const std::vector<BigInt>& row, unsigned long n, std::vector<BigInt>& next) {
  next.resize(row.size() + 1);
  for (std::size_t l = 0; l < next.size(); ++l) next_row_entry(row, n, next, l);
}

std::vector<BigFloat> odd_column_sums(const std::vector<BigInt>& row,
                                      const std::vector<std::vector<BigFloat>>& weights,
                                      mpfr_prec_t bits) {
  std::size_t chunks = chunk_count(row.size() / 2);
  std::vector<std::vector<BigFloat>> partials(chunks, std::vector<BigFloat>(weights.size(), BigFloat(bits)));
  for (std::size_t c = 0; c < chunks; ++c) odd_chunk(row, weights, c, bits, partials[c]);
  return combine(partials, weights.size(), bits);
}

BigFloat ordered_sum(const std::vector<BigFloat>& values, mpfr_prec_t bits) {
  BigFloat total(bits);
  for (std::size_t c = 0; c < chunk_count(values.size()); ++c) {
    BigFloat s = chunk_sum(values, c, bits);
    mpfr_add(total.raw(), total.raw(), s.raw(), MPFR_RNDN);
  }
  return total;
}

}  // namespace serial

}  // namespace stieltjes::kernels
