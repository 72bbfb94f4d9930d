#include "stieltjes/figures.hpp"

#include "stieltjes/convergent.hpp"
#include "stieltjes/enveloping.hpp"
#include "stieltjes/oracles.hpp"
#include "stieltjes/stirling.hpp"

#include <stdexcept>

namespace stieltjes {

void Table::write_csv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string format_value(const BigFloat& x, int digits) { return x.to_decimal(digits); }

std::string format_value(const BigRational& q, const PrecisionContext& ctx) {
  return rational_to_float(q, ctx).to_decimal(ctx.printable_digits());
}

Table figure_convergent_errors(const PrecisionContext& ctx, std::size_t N_max) {
  Table t{{"N", "err_m0", "err_m1", "err_m2"}, {}};
  const long ref_bits = ctx.precision_bits + 64;
  std::vector<BigFloat> refs;
  for (std::size_t m = 0; m < 3; ++m) refs.push_back(reference_stieltjes(m, ref_bits));
  ConvergentEvaluator eval({0, 1, 2}, ctx);
  for (std::size_t N = 1; N <= N_max; ++N) {
    eval.advance();
    std::vector<std::string> row{std::to_string(N)};
    for (std::size_t i = 0; i < 3; ++i) {
      row.push_back(relative_difference(eval.partial(i), refs[i]).to_scientific(kErrorDigits));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure_term_bound(const PrecisionContext& ctx, std::size_t n_max) {
  Table t{{"n", "rel_m0", "rel_m1", "rel_m2", "rel_m3"}, {}};
  ConvergentEvaluator eval({0, 1, 2, 3}, ctx);
  const mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(ctx.guard_bits);
  const BigFloat p = pi(PrecisionContext(wp, ctx.guard_bits));
  const BigFloat c = BigFloat(1, wp) / ldexp(p, 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    eval.advance();
    BigFloat n_sq(static_cast<long>(n), wp);
    n_sq *= n_sq;
    const BigFloat bound = c / n_sq;
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t i = 0; i < 4; ++i) {
      BigFloat a = abs(eval.last_term(i)) * p / BigFloat(factorial(i), wp);
      if (a.is_zero()) {
        row.push_back("inf");
        continue;
      }
      row.push_back(((bound - a) / a).to_scientific(kErrorDigits));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure_enveloping_sums(const PrecisionContext& ctx, std::size_t N_max) {
  Table t{{"N", "sum_m0", "sum_m1"}, {}};
  EnvelopingResult e0 = gamma_enveloping(0, N_max);
  EnvelopingResult e1 = gamma_enveloping(1, N_max);
  for (std::size_t N = 1; N <= N_max; ++N) {
    t.rows.push_back({std::to_string(N), format_value(e0.partial_sums[N], ctx), format_value(e1.partial_sums[N], ctx)});
  }
  return t;
}

Table figure_stirling_bound(const PrecisionContext& ctx, std::size_t n) {
  Table t{{"k", "exact", "bound", "rel_err"}, {}};
  const int digits = ctx.printable_digits();
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt exact = stirling1_unsigned(n, k);
    StirlingBound b = stirling1_bound(n, k, ctx);
    BigFloat ex(exact, b.bound.precision());
    BigFloat rel = (b.bound - ex) / ex;
    t.rows.push_back({std::to_string(k), exact.get_str(), b.bound.to_scientific(digits), rel.to_scientific(kErrorDigits)});
  }
  return t;
}

Table figure_by_id(int id, const PrecisionContext& ctx) {
  switch (id) {
    case 1: return figure_convergent_errors(ctx);
    case 2: return figure_term_bound(ctx);
    case 3: return figure_enveloping_sums(ctx);
    case 4: return figure_stirling_bound(ctx);
    default: throw std::invalid_argument("figure id must be 1, 2, 3 or 4");
  }
}

}  // namespace stieltjes
