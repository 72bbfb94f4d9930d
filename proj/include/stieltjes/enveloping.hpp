#pragma once

// Semi-convergent rational series for the Stieltjes constants
//
//   gamma_m ~ delta_{m,0}/2 + (-1)^m m! sum_{k>=1} |S1(2k, m+1)| B_{2k} / (2k)!,
//
// its Euler transformation, and the two-sided rational bounds that follow
// from the enveloping property, together with published magnitude bounds
// for comparison.

#include "stieltjes/exactnum.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stieltjes {

/// (-1)^m m! |S1(2k, m+1)| B_{2k} / (2k)!, k >= 1.
BigRational enveloping_term(std::size_t m, std::size_t k);

/// The same term written with harmonic numbers of index 2k-1 (m <= 3):
///   m=0:  B_{2k}/(2k)
///   m=1: -B_{2k} H/(2k)
///   m=2:  B_{2k} (H^2 - H^(2))/(2k)
///   m=3: -B_{2k} (H^3 - 3 H H^(2) + 2 H^(3))/(2k)
/// Throws std::invalid_argument for m > 3.
BigRational enveloping_term_harmonic(std::size_t m, std::size_t k);

struct Bracket {
  /// The bracket is formed by partial_sums[N] and partial_sums[N+1].
  std::size_t N;
  BigRational lower;
  BigRational upper;
};

struct EnvelopingResult {
  std::size_t m = 0;
  /// terms[k-1] = enveloping_term(m, k), k = 1..N_max.
  std::vector<BigRational> terms;
  /// partial_sums[N] = delta_{m,0}/2 + sum_{k<=N} terms; N = 0..N_max.
  std::vector<BigRational> partial_sums;
  /// Consecutive partial sums separated by a nonzero term.
  std::vector<Bracket> brackets;
  /// Smallest k with a nonzero term.
  std::size_t first_nonzero = 0;
  /// k minimizing |term(k)| over nonzero terms, ties to the smaller k.
  std::size_t optimal_N = 0;
  /// |term(optimal_N)|: bound on |gamma_m - partial_sums[optimal_N - 1]|.
  BigRational remainder_bound;
  /// Reference inside every bracket N = first_nonzero-1 .. optimal_N-1.
  /// Empty when no reference was supplied.
  std::optional<bool> reference_bracketed;

  const BigRational& optimal_estimate() const { return partial_sums[optimal_N - 1]; }
};

/// Requires N_max >= 2.
EnvelopingResult gamma_enveloping(std::size_t m, std::size_t N_max, const BigFloat* reference = nullptr);

/// Terms of the Euler-transformed series: entry 0 is delta_{m,0}/2, entry k
/// (k = 1..N) is (-1)^m m! 2^{-k} sum_{n=1}^{k} C(k-1, n-1) |S1(2n, m+1)| B_{2n} / (2n)!.
std::vector<BigRational> euler_transform_terms(std::size_t m, std::size_t N);

/// Sum of euler_transform_terms(m, N).
BigRational euler_transform(std::size_t m, std::size_t N);

struct RationalInterval {
  BigRational lower;
  BigRational upper;

  bool contains(const BigFloat& x) const;
  BigRational width() const { return upper - lower; }
  /// +1 or -1 when the interval excludes zero, otherwise 0.
  int sign() const;
};

/// Bounds from two neighbouring partial sums, by residue of m mod 4:
///   1: (-|B_{m+1}|/(m+1), (3m+8)|B_{m+3}|/24 - |B_{m+1}|/(m+1))
///   3: (|B_{m+1}|/(m+1) - (3m+8)|B_{m+3}|/24, |B_{m+1}|/(m+1))
///   2: (-|B_{m+2}|/2, (m+3)(m+4)|B_{m+4}|/48 - |B_{m+2}|/2)
///   0: (|B_{m+2}|/2 - (m+3)(m+4)|B_{m+4}|/48, |B_{m+2}|/2)
/// For m = 0 the result is shifted by 1/2, giving 23/40 < gamma < 7/12.
RationalInterval stieltjes_bounds(std::size_t m);

struct CompetitorBound {
  const char* name;
  BigFloat magnitude;
  /// Our interval width is smaller than 2 * magnitude.
  bool ours_tighter;
};

struct BoundsReport {
  std::size_t m = 0;
  RationalInterval this_bound;
  BigFloat berndt;              // 2(m-1)!/pi^m (odd m), 4(m-1)!/pi^m (even m)
  BigFloat lavrik;              // m! / 2^{m+1}
  std::vector<BigFloat> israilov;  // m! C(k) / (2k)^m, k = 1, 2, 3
  BigFloat nan_you_williams;    // 2 or 4 times (2m)! / (m^{m+1} (2 pi)^m)
  std::optional<BigFloat> matsuoka;  // 1e-4 ln^m m, m >= 5

  /// All competitor entries in a fixed order.
  std::vector<CompetitorBound> competitors() const;
};

/// Requires m >= 1.
BoundsReport competitor_bounds(std::size_t m, const PrecisionContext& ctx = {});

}  // namespace stieltjes
