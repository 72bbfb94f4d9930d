#pragma once

// Stirling numbers of the first kind and the quantities built from them:
// Gregory coefficients, Cauchy numbers of the second kind and the zeta
// identity sum_{n>=k} |S1(n,k)| / (n n!) = zeta(k+1).
//
// The recurrence |S1(n+1,l)| = |S1(n,l-1)| + n |S1(n,l)| is authoritative.
// The explicit double sum and the two contour quadratures are validators.

#include "stieltjes/exactnum.hpp"

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <vector>

namespace stieltjes {

/// Triangle of |S1(n,l)|, 0 <= l <= n, grown on demand to the largest row
/// requested. Concurrent readers are safe; growth takes an exclusive lock.
class StirlingTable {
 public:
  BigInt get(std::size_t n, std::size_t l);
  /// Copy of row n (size n+1).
  std::vector<BigInt> row(std::size_t n);
  std::size_t rows_cached();

 private:
  void extend_to(std::size_t n);

  std::shared_mutex mutex_;
  std::deque<std::vector<BigInt>> rows_;
};

StirlingTable& stirling_table();

/// Rows |S1(n, .)| for n = 0, 1, 2, ... without keeping earlier rows.
class StirlingRowStream {
 public:
  StirlingRowStream() : row_{1} {}
  std::size_t n() const { return n_; }
  const std::vector<BigInt>& row() const { return row_; }
  void advance();

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> row_;
  std::vector<BigInt> scratch_;
};

/// |S1(n, l)| for n = 0..n_max and l = 0..columns-1 (entries with l > n
/// are zero). Cost is O(n_max * columns).
std::vector<std::vector<BigInt>> stirling1_columns(std::size_t n_max, std::size_t columns);

/// |S1(n,l)|; zero outside 1 <= l <= n except |S1(0,0)| = 1.
BigInt stirling1_unsigned(std::size_t n, std::size_t l);

/// Signed S1(n,l) = (-1)^{n-l} |S1(n,l)|.
BigInt stirling1_signed(std::size_t n, std::size_t l);

/// Signed S1(n,l) from the explicit double sum
///   (2n-l)!/(l-1)! sum_{k=0}^{n-l} 1/((n+k)(n-l-k)!(n-l+k)!)
///                  sum_{r=0}^{k} (-1)^r r^{n-l+k} / (r!(k-r)!),
/// in exact rational arithmetic. Throws std::invalid_argument unless 1 <= l <= n.
BigInt stirling1_explicit(std::size_t n, std::size_t l);

struct QuadratureEstimate {
  BigFloat value;
  /// |Q(nodes) - Q(nodes/2)|.
  BigFloat error_estimate;
};

/// |S1(n,k)| from the trapezoidal rule applied to
///   (-1)^k (n!/k!) (1/2pi) int_0^{2pi} ln^k(1 - r e^{i phi}) r^{-n} e^{-i n phi} dphi.
/// r must lie in (0,1); nodes must be a power of two >= 64.
QuadratureEstimate stirling1_contour(std::size_t n, std::size_t k, const BigFloat& r, std::size_t nodes,
                                     const PrecisionContext& ctx);

/// |S1(n,k)| from the trapezoidal rule applied to
///   (1/2pi) int_0^{2pi} (z)_n z^{-k} dphi,  z = e^{i phi},
/// with the rising factorial (z)_n evaluated as a product. nodes >= 64.
QuadratureEstimate stirling1_pochhammer_contour(std::size_t n, std::size_t k, std::size_t nodes,
                                                const PrecisionContext& ctx);

struct StirlingBound {
  /// n! / ((1 - e^{-1})^n k!)
  BigFloat bound;
  /// |S1(n,k)| <= bound, decided by exact comparison.
  bool holds;
};

StirlingBound stirling1_bound(std::size_t n, std::size_t k, const PrecisionContext& ctx = {});

/// G_n = (1/n!) sum_l S1(n,l)/(l+1); G_1 = 1/2, G_2 = -1/12, ...
BigRational gregory(std::size_t n);

/// C_{2,n} = sum_l |S1(n,l)|/(l+1) = int_0^1 (x)_n dx.
BigRational cauchy2(std::size_t n);

/// sum_{n=k}^{N} |S1(n,k)| / (n n!), which tends to zeta(k+1).
/// Returns zero when N < k (the sum is empty).
BigFloat zeta_by_stirling(std::size_t k, std::size_t N, const PrecisionContext& ctx);

}  // namespace stieltjes
