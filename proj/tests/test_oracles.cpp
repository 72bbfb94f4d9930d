#include <doctest.h>

#include "reference_values.hpp"
#include "stieltjes/oracles.hpp"
#include "stieltjes/stirling.hpp"

using namespace stieltjes;
using stieltjes::testing::gamma_ref;
using Q = BigRational;

namespace {

double abs_err(const BigFloat& a, const BigFloat& b) { return abs(a - b).to_double(); }

double abs_err(const Q& a, const BigFloat& b) { return abs_err(BigFloat(a, b.precision()), b); }

// Centered k-th difference of f at x with step h; error O(h^2).
BigFloat central_difference(const LogPolyOverX& f, const BigFloat& x, const BigFloat& h, std::size_t k) {
  BigFloat sum(x.precision());
  for (std::size_t j = 0; j <= k; ++j) {
    BigFloat offset = h * (static_cast<long>(k) - 2 * static_cast<long>(j));
    offset /= 2;
    BigFloat term = f.evaluate(x + offset) * BigFloat(binomial(k, j), x.precision());
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum / pow(h, static_cast<long>(k));
}

}  // namespace

TEST_CASE("log-polynomial derivatives") {
  LogPolyOverX f = LogPolyOverX::log_power_over_x(1);
  CHECK(f.power == 1);
  CHECK(f.coeffs == std::vector<Q>{Q(0), Q(1)});
  CHECK(logpoly_derivative(f, 0) == f);
  LogPolyOverX d = logpoly_derivative(f, 1);
  CHECK(d.power == 2);
  CHECK(d.coeffs == std::vector<Q>{Q(1), Q(-1)});
  CHECK(logpoly_derivative(logpoly_derivative(f, 2), 3) == logpoly_derivative(f, 5));
}

TEST_CASE("derivative at x = 1 is m! S1(n+1, m+1)") {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 8; ++n) {
      LogPolyOverX d = logpoly_derivative(LogPolyOverX::log_power_over_x(m), n);
      // ln 1 = 0: only the constant coefficient survives.
      CHECK(d.coeffs[0] == Q(factorial(m) * stirling1_signed(n + 1, m + 1)));
    }
  }
}

TEST_CASE("symbolic derivatives match finite differences") {
  const mpfr_prec_t bits = 400;
  const BigFloat h(std::string("1e-12"), bits);
  const BigFloat points[3] = {BigFloat(2, bits), exp(BigFloat(1, bits)), BigFloat(5, bits)};
  for (std::size_t m = 0; m <= 3; ++m) {
    LogPolyOverX f = LogPolyOverX::log_power_over_x(m);
    for (std::size_t order = 1; order <= 5; ++order) {
      LogPolyOverX d = logpoly_derivative(f, order);
      for (const BigFloat& x : points) {
        BigFloat exact = d.evaluate(x);
        BigFloat approx = central_difference(f, x, h, order);
        CHECK(abs_err(exact, approx) < 1e-18);
      }
    }
  }
}

TEST_CASE("euler-maclaurin series for the constants") {
  PrecisionContext ctx;
  IsrailovResult r0 = gamma_israilov(0, 50, 8, ctx);
  CHECK(abs_err(r0.value, gamma_ref(0)) < 1e-15);
  IsrailovResult r1 = gamma_israilov(1, 50, 8, ctx, 1e-10);
  CHECK(abs_err(r1.value, gamma_ref(1)) < 1e-10);
  CHECK(r1.within_tolerance);
  CHECK(abs_err(r1.value, gamma_ref(1)) < r1.remainder.to_double());
  CHECK_FALSE(gamma_israilov(1, 5, 2, ctx, 1e-30).within_tolerance);
  CHECK_THROWS_AS(gamma_israilov(0, 0, 3, ctx), std::invalid_argument);
}

TEST_CASE("at n = 1 the series collapses to the enveloping partial sums") {
  PrecisionContext ctx;
  // -B_2/2! * 1 - B_4/4! * 11 = -1/12 + 11/720
  IsrailovResult r = gamma_israilov(1, 1, 3, ctx);
  CHECK(agreeing_bits(r.value, BigFloat(Q(-49, 720), 128)) >= 124);
}

TEST_CASE("automatic reference values") {
  for (std::size_t m = 0; m <= 12; ++m) {
    BigFloat ref = reference_stieltjes(m, 140);
    CHECK(ref.precision() == 140);
    CHECK(agreeing_bits(ref, gamma_ref(m)) >= 138);
  }
  CHECK_THROWS_AS(reference_stieltjes(0, 32), std::invalid_argument);
}

TEST_CASE("jensen-franel quadrature") {
  PrecisionContext ctx;
  QuadratureSpec spec = QuadratureSpec::for_context(ctx);
  CHECK(spec.rule == "tanh-sinh");
  CHECK(spec.level >= 3);
  CHECK(spec.truncation >= 20);
  CHECK(spec.node_count() > 0);
  for (std::size_t m = 0; m <= 3; ++m) {
    BigFloat jf = gamma_jensen_franel(m, spec);
    CHECK(jf.precision() == 128);
    // Two independent oracles: quadrature and Euler-Maclaurin.
    CHECK(agreeing_bits(jf, reference_stieltjes(m, 160)) >= 120);
  }
  QuadratureSpec bad = spec;
  bad.rule = "gauss";
  CHECK_THROWS_AS(jensen_franel_integral(0, bad), std::invalid_argument);
}

TEST_CASE("jensen-franel raises an alarm when the rule is too coarse") {
  QuadratureSpec spec = QuadratureSpec::for_context(PrecisionContext(256, 32));
  spec.level = 2;
  spec.truncation = 4;
  CHECK_THROWS_AS(gamma_jensen_franel(1, spec), NumericalAlarm);
}

TEST_CASE("Fontana-Mascheroni series") {
  CHECK(gamma_fontana_mascheroni(2) == Q(1, 2) + Q(1, 24));
  CHECK(gamma_fontana_mascheroni(4) == Q(1, 2) + Q(1, 24) + Q(1, 72) + Q(19, 2880));
  CHECK(gamma_fontana_mascheroni(6) - gamma_fontana_mascheroni(5) == Q(863, 362880));
  CHECK(abs_err(gamma_fontana_mascheroni(50), gamma_ref(0)) < 2e-3);
}

TEST_CASE("Binet-Norlund series") {
  CHECK(gamma_binet_norlund(1) == Q(3, 4));
  CHECK(gamma_binet_norlund(3) == Q(3, 4) - Q(5, 72) - Q(1, 32));
  CHECK(gamma_binet_norlund(4) - gamma_binet_norlund(3) == Q(-251, 14400));
  // Independent exact-rational evaluation: gamma_N - gamma = 2.764122159067e-3 at N = 60.
  BigFloat e60 = BigFloat(gamma_binet_norlund(60), 160) - gamma_ref(0);
  CHECK(e60.to_double() == doctest::Approx(2.764122159067052784e-3).epsilon(1e-12));
}

TEST_CASE("Jacobsthal series") {
  CHECK(jacobsthal_block(1) == Q(1, 12));
  CHECK(jacobsthal_block(2) == Q(43, 420));
  CHECK(jacobsthal_block(3) == Q(20431, 240240));
  CHECK(gamma_jacobsthal(1) == Q(11, 12));
  CHECK_THROWS_AS(jacobsthal_block(41), std::invalid_argument);
}

TEST_CASE("classical series improve monotonically") {
  const BigFloat g = gamma_ref(0);
  double fm = 1, bn = 1, jb = 1;
  for (std::size_t N = 1; N <= 40; ++N) {
    const double e_fm = abs_err(gamma_fontana_mascheroni(N), g);
    const double e_bn = abs_err(gamma_binet_norlund(N), g);
    CHECK(e_fm < fm);
    CHECK(e_bn < bn);
    fm = e_fm;
    bn = e_bn;
  }
  for (std::size_t N = 1; N <= 16; ++N) {
    const double e = abs_err(gamma_jacobsthal(N), g);
    CHECK(e < jb);
    jb = e;
  }
}

TEST_CASE("Coppo-Ser series") {
  PrecisionContext ctx;
  CHECK(agreeing_bits(gamma_m_coppo_ser(0, 0, ctx), BigFloat(Q(1, 2), 128)) >= 127);
  for (std::size_t N : {1UL, 5UL, 20UL}) {
    BigFloat fm(gamma_fontana_mascheroni(N + 1), 128);
    CHECK(agreeing_bits(gamma_m_coppo_ser(0, N, ctx), fm) >= 120);
  }
  // Independent mpmath evaluation at 40 digits; its alternating inner sums
  // lose up to ~9 digits, so it is good to about 100 bits.
  BigFloat c30 = gamma_m_coppo_ser(1, 30, ctx);
  CHECK(agreeing_bits(c30, BigFloat(std::string("-0.0706223553154765115063976743417984616048"), 160)) >= 100);
  CHECK(abs_err(c30, gamma_ref(1)) < 3e-3);
  CHECK_THROWS_AS(gamma_m_coppo_ser(1, 41, ctx), std::invalid_argument);
  CHECK_THROWS_AS(gamma_m_coppo_ser(4, 10, ctx), std::invalid_argument);
}
