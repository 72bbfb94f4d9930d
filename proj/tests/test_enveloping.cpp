#include <doctest.h>

#include "reference_values.hpp"
#include "stieltjes/enveloping.hpp"

#include <cmath>

using namespace stieltjes;
using stieltjes::testing::gamma_ref;
using Q = BigRational;

namespace {

std::vector<Q> nonzero_terms(std::size_t m, std::size_t count) {
  std::vector<Q> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    Q t = enveloping_term(m, k);
    if (t != 0) out.push_back(t);
  }
  return out;
}

std::vector<Q> nonzero_euler_terms(std::size_t m, std::size_t count) {
  auto all = euler_transform_terms(m, count + 2);
  std::vector<Q> out;
  for (std::size_t k = 1; k < all.size() && out.size() < count; ++k) {
    if (all[k] != 0) out.push_back(all[k]);
  }
  return out;
}

Q to_rational(const BigFloat& x) {
  Q q;
  mpfr_get_q(q.get_mpq_t(), x.raw());
  return q;
}

}  // namespace

TEST_CASE("enveloping terms: printed rows") {
  CHECK(nonzero_terms(0, 5) == std::vector<Q>{Q(1, 12), Q(-1, 120), Q(1, 252), Q(-1, 240), Q(1, 132)});
  CHECK(nonzero_terms(1, 6) ==
        std::vector<Q>{Q(-1, 12), Q(11, 720), Q(-137, 15120), Q(121, 11200), Q(-7129, 332640), Q(57844301, 908107200)});
  CHECK(enveloping_term(2, 1) == 0);
  CHECK(nonzero_terms(2, 6) == std::vector<Q>{Q(-1, 60), Q(5, 336), Q(-469, 21600), Q(6515, 133056),
                                              Q(-131672123, 825552000), Q(63427, 89100)});
  CHECK(enveloping_term(3, 1) == 0);
  CHECK(enveloping_term(3, 2) == Q(1, 120));
  CHECK(nonzero_terms(3, 6) == std::vector<Q>{Q(1, 120), Q(-17, 1008), Q(967, 28800), Q(-4523, 49896),
                                              Q(33735311, 101088000), Q(-9301169, 5702400)});
  CHECK_THROWS_AS(enveloping_term(1, 0), std::invalid_argument);
}

TEST_CASE("harmonic-number form equals the stirling form") {
  CHECK(enveloping_term_harmonic(1, 2) == Q(11, 720));
  CHECK(enveloping_term_harmonic(0, 1) == Q(1, 12));
  CHECK(enveloping_term_harmonic(2, 1) == 0);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t k = 1; k <= 100; ++k) CHECK(enveloping_term_harmonic(m, k) == enveloping_term(m, k));
  }
  CHECK_THROWS_AS(enveloping_term_harmonic(4, 1), std::invalid_argument);
}

TEST_CASE("partial sums and the optimal truncation") {
  EnvelopingResult r0 = gamma_enveloping(0, 10);
  CHECK(r0.partial_sums[0] == Q(1, 2));
  CHECK(r0.partial_sums[1] == Q(7, 12));
  CHECK(r0.partial_sums[2] == Q(7, 12) - Q(1, 120));
  CHECK(r0.first_nonzero == 1);

  BigFloat g1 = gamma_ref(1);
  EnvelopingResult r1 = gamma_enveloping(1, 10, &g1);
  CHECK(r1.partial_sums[1] == Q(-1, 12));
  CHECK(r1.partial_sums[2] == Q(-49, 720));
  CHECK(r1.optimal_N == 3);
  CHECK(r1.optimal_estimate() == Q(-49, 720));
  CHECK(r1.remainder_bound == Q(137, 15120));
  REQUIRE(r1.reference_bracketed.has_value());
  CHECK(*r1.reference_bracketed);
  CHECK_FALSE(gamma_enveloping(1, 10).reference_bracketed.has_value());

  EnvelopingResult r2 = gamma_enveloping(2, 10);
  CHECK(r2.first_nonzero == 2);
  CHECK(r2.brackets.front().N == 1);

  for (const auto& r : {r0, r1, r2}) {
    for (const Bracket& b : r.brackets) CHECK(b.lower < b.upper);
  }
  CHECK_THROWS_AS(gamma_enveloping(0, 1), std::invalid_argument);
}

TEST_CASE("reference lies strictly inside every bracket up to the optimal truncation, m <= 3") {
  for (std::size_t m = 0; m <= 3; ++m) {
    BigFloat ref = gamma_ref(m);
    EnvelopingResult r = gamma_enveloping(m, 16, &ref);
    CHECK(r.reference_bracketed.value());
    const Q g = to_rational(ref);
    for (std::size_t N = r.first_nonzero - 1; N + 1 <= r.optimal_N; ++N) {
      const Q& a = r.partial_sums[N];
      const Q& b = r.partial_sums[N + 1];
      CHECK(std::min(a, b) < g);
      CHECK(g < std::max(a, b));
    }
  }
}

TEST_CASE("bracket property for 4 <= m <= 12 (reported)") {
  for (std::size_t m = 4; m <= 12; ++m) {
    BigFloat ref = gamma_ref(m);
    EnvelopingResult r = gamma_enveloping(m, 20, &ref);
    MESSAGE("m=" << m << " optimal_N=" << r.optimal_N << " bracketed=" << *r.reference_bracketed);
  }
}

TEST_CASE("terms alternate in sign and grow past the optimum") {
  for (std::size_t m = 0; m <= 6; ++m) {
    EnvelopingResult r = gamma_enveloping(m, 40);
    int previous = 0;
    for (const Q& t : r.terms) {
      if (t == 0) continue;
      if (previous != 0) CHECK(sgn(t) == -previous);
      previous = sgn(t);
    }
    for (std::size_t k = r.optimal_N; k < r.optimal_N + 10; ++k) CHECK(abs(r.terms[k]) > abs(r.terms[k - 1]));
    for (std::size_t k = r.first_nonzero; k < r.optimal_N; ++k) CHECK(abs(r.terms[k]) <= abs(r.terms[k - 1]));
  }
}

TEST_CASE("euler transform: printed rows") {
  CHECK(euler_transform_terms(0, 1)[0] == Q(1, 2));
  CHECK(nonzero_euler_terms(0, 5) ==
        std::vector<Q>{Q(1, 24), Q(3, 160), Q(89, 10080), Q(37, 8960), Q(299, 147840)});
  CHECK(nonzero_euler_terms(1, 5) ==
        std::vector<Q>{Q(-1, 24), Q(-49, 2880), Q(-187, 24192), Q(-5431, 1612800), Q(-91151, 53222400)});
  CHECK(nonzero_euler_terms(2, 5) == std::vector<Q>{Q(-1, 240), Q(-31, 13440), Q(-4093, 2419200),
                                                    Q(-50789, 106444800), Q(-602325403, 581188608000)});
  CHECK(nonzero_euler_terms(3, 5) == std::vector<Q>{Q(1, 480), Q(-1, 40320), Q(1609, 3225600),
                                                    Q(-120749, 159667200), Q(694773847, 498161664000)});
  CHECK(euler_transform(0, 2) == Q(1, 2) + Q(1, 24) + Q(3, 160));
  CHECK_THROWS_AS(euler_transform(0, 0), std::invalid_argument);
}

TEST_CASE("euler transform beats the raw enveloping series for m = 0, 1") {
  for (std::size_t m = 0; m <= 1; ++m) {
    const Q g = to_rational(gamma_ref(m));
    Q best_euler = -1, best_raw = -1;
    for (std::size_t N = 1; N <= 14; ++N) {
      Q e = abs(euler_transform(m, N) - g);
      if (best_euler < 0 || e < best_euler) best_euler = e;
    }
    EnvelopingResult r = gamma_enveloping(m, 30);
    for (const Q& s : r.partial_sums) {
      Q e = abs(s - g);
      if (best_raw < 0 || e < best_raw) best_raw = e;
    }
    CHECK(best_euler < best_raw);
  }
}

TEST_CASE("two-sided rational bounds") {
  RationalInterval b0 = stieltjes_bounds(0);
  CHECK(b0.lower == Q(23, 40));
  CHECK(b0.upper == Q(7, 12));
  RationalInterval b1 = stieltjes_bounds(1);
  CHECK(b1.lower == Q(-1, 12));
  CHECK(b1.upper == Q(-49, 720));
  RationalInterval b2 = stieltjes_bounds(2);
  CHECK(b2.lower == Q(-1, 60));
  CHECK(b2.upper == Q(-1, 60) + Q(5, 336));
  for (std::size_t m = 0; m <= 12; ++m) {
    RationalInterval b = stieltjes_bounds(m);
    CHECK(b.lower < b.upper);
    CHECK(b.contains(gamma_ref(m)));
  }
}

TEST_CASE("the bounds fix the sign only for m = 1, 2") {
  CHECK(stieltjes_bounds(1).sign() == -1);
  CHECK(stieltjes_bounds(2).sign() == -1);
  for (std::size_t m = 3; m <= 12; ++m) CHECK(stieltjes_bounds(m).sign() == 0);
}

TEST_CASE("published magnitude bounds") {
  PrecisionContext ctx;
  const double pi = std::numbers::pi;
  BoundsReport r1 = competitor_bounds(1, ctx);
  CHECK(r1.berndt.to_double() == doctest::Approx(2 / pi).epsilon(1e-15));
  CHECK(competitor_bounds(3, ctx).lavrik.to_double() == doctest::Approx(3.0 / 8).epsilon(1e-15));
  CHECK(competitor_bounds(2, ctx).nan_you_williams.to_double() ==
        doctest::Approx(4.0 * 24 / (8 * 4 * pi * pi)).epsilon(1e-15));
  CHECK(competitor_bounds(2, ctx).israilov[1].to_double() == doctest::Approx(2.0 * 7 / 12 / 16).epsilon(1e-15));
  CHECK_FALSE(r1.matsuoka.has_value());
  BoundsReport r5 = competitor_bounds(5, ctx);
  REQUIRE(r5.matsuoka.has_value());
  CHECK(r5.matsuoka->to_double() == doctest::Approx(1e-4 * std::pow(std::log(5.0), 5)).epsilon(1e-14));
  CHECK_THROWS_AS(competitor_bounds(0, ctx), std::invalid_argument);

  for (std::size_t m = 1; m <= 12; ++m) {
    BoundsReport r = competitor_bounds(m, ctx);
    const Q width = r.this_bound.width();
    CHECK(width < to_rational(r.berndt));
    for (const CompetitorBound& c : r.competitors()) {
      CHECK(c.magnitude.sign() >= 0);
      CHECK(c.ours_tighter == (width < 2 * to_rational(c.magnitude)));
      // Every published bound must itself hold.
      CHECK(abs(gamma_ref(m)) <= c.magnitude);
    }
  }
}
