#pragma once

// Data tables behind the four diagnostic plots, emitted as CSV.

#include "stieltjes/exactnum.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace stieltjes {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Comma-separated, LF line endings, header first.
  void write_csv(std::ostream& out) const;
};

/// Fixed-digit rendering used by every emitter.
std::string format_value(const BigFloat& x, int digits);
std::string format_value(const BigRational& q, const PrecisionContext& ctx);

/// Significant digits for diagnostic error columns.
inline constexpr int kErrorDigits = 8;

/// N, err_m0, err_m1, err_m2: relative error of the convergent series
/// partial sums, N = 1..N_max.
Table figure_convergent_errors(const PrecisionContext& ctx, std::size_t N_max = 2000);

/// n, rel_m0..rel_m3: (C/n^2 - a_m(n)) / a_m(n) with C = 1/(2 pi), where
/// a_m(n) = pi |term(m,n)| / m! is the normalized magnitude of the n-th term.
Table figure_term_bound(const PrecisionContext& ctx, std::size_t n_max = 3000);

/// N, sum_m0, sum_m1: partial sums of the enveloping series, N = 1..10.
Table figure_enveloping_sums(const PrecisionContext& ctx, std::size_t N_max = 10);

/// k, exact, bound, rel_err for |S1(n,k)| against n!/((1-e^{-1})^n k!).
Table figure_stirling_bound(const PrecisionContext& ctx, std::size_t n = 80);

/// Dispatch by figure id 1..4 with default sizes.
Table figure_by_id(int id, const PrecisionContext& ctx);

}  // namespace stieltjes
