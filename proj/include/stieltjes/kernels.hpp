#pragma once

// Hot loops shared by the series and quadrature code.
//
// Every kernel exists twice: an OpenMP version in `kernels` and a plain
// loop in `kernels::serial`. Floating-point reductions use a fixed layout
// (consecutive chunks of kChunk entries summed left to right, then the chunk
// sums added left to right), so both versions give bit-identical results
// independent of the thread count.

#include "stieltjes/bigfloat.hpp"

#include <cstddef>
#include <exception>
#include <vector>

namespace stieltjes::kernels {

inline constexpr std::size_t kChunk = 64;

inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

/// row = |S1(n, 0..n)|  ->  next = |S1(n+1, 0..n+1)|.
void stirling_next_row(const std::vector<BigInt>& row, unsigned long n, std::vector<BigInt>& next);

/// out[i] = sum_k weights[i][k] * row[2k+1] over the k with 2k+1 < row.size().
std::vector<BigFloat> odd_column_sums(const std::vector<BigInt>& row,
                                      const std::vector<std::vector<BigFloat>>& weights,
                                      mpfr_prec_t bits);

BigFloat ordered_sum(const std::vector<BigFloat>& values, mpfr_prec_t bits);

namespace serial {

void stirling_next_row(const std::vector<BigInt>& row, unsigned long n, std::vector<BigInt>& next);

std::vector<BigFloat> odd_column_sums(const std::vector<BigInt>& row,
                                      const std::vector<std::vector<BigFloat>>& weights,
                                      mpfr_prec_t bits);

BigFloat ordered_sum(const std::vector<BigFloat>& values, mpfr_prec_t bits);

template <typename Fn>
std::vector<BigFloat> map(std::size_t count, Fn&& fn) {
  std::vector<BigFloat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

/// sum_{i<count} fn(i) with the chunked reduction layout.
template <typename Fn>
BigFloat map_sum(std::size_t count, Fn&& fn, mpfr_prec_t bits) {
  return ordered_sum(map(count, fn), bits);
}

}  // namespace serial

/// Evaluates fn(0..count-1) in parallel. fn must be safe to call
/// concurrently. The first exception thrown by any call is rethrown.
template <typename Fn>
std::vector<BigFloat> map(std::size_t count, Fn&& fn) {
  std::vector<BigFloat> out(count, BigFloat(MPFR_PREC_MIN));
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(stieltjes_kernels_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <typename Fn>
BigFloat map_sum(std::size_t count, Fn&& fn, mpfr_prec_t bits) {
  return ordered_sum(map(count, fn), bits);
}

}  // namespace stieltjes::kernels
