#include <doctest.h>

#include <cmath>

#include "cow/generators.hpp"
#include "cow/krieger.hpp"
#include "cow/repetition.hpp"

using namespace cow;

TEST_CASE("dominant eigenvalue of the gamma matrix") {
  EigenData eig = dominant_eigenvalue(morphism_matrix(morphisms::gamma()), 1e-13);
  CHECK(eig.char_poly == std::vector<BigInt>{-1, 1, -2, 1});  // x^3 - 2x^2 + x - 1
  CHECK(std::abs(eig.lambda - 1.7548777) < 1e-6);
  CHECK(eig.residual < 1e-9);
}

TEST_CASE("dominant eigenvalue degenerate cases") {
  CHECK(dominant_eigenvalue(identity_matrix(2)).lambda == doctest::Approx(1.0).epsilon(1e-10));
  IntMatrix mu{{1, 1}, {1, 1}};
  CHECK(dominant_eigenvalue(mu).lambda == doctest::Approx(2.0).epsilon(1e-10));
  IntMatrix zero{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(dominant_eigenvalue(zero), std::domain_error);
  IntMatrix negative{{1, -1}, {0, 1}};
  CHECK_THROWS_AS(dominant_eigenvalue(negative), std::invalid_argument);
}

TEST_CASE("G series exponents") {
  const RunSeries& s1 = g_series(1);
  CHECK(series_exponent(s1, 0) == make_rational(2));
  CHECK(series_exponent(s1, 1) == make_rational(2));
  CHECK(series_exponent(s1, 2) == make_rational(16, 7));
  // Strictly increasing from m = 1 on (the m=0 and m=1 terms are both 2).
  for (int m = 1; m < 30; ++m) CHECK(series_exponent(s1, m + 1) > series_exponent(s1, m));

  const RunSeries& s2 = g_series(2);
  CHECK(series_exponent(s2, 0) == make_rational(2));
}

TEST_CASE("series 2 reduces to the series 1 shape") {
  // (1,0,0) A + (0,0,1) = (1,1,1) = P(X).
  const RunSeries& s2 = g_series(2);
  ParikhVector lhs = vec_mat_mul(s2.corrections[0], s2.matrix);
  for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] += s2.corrections[1][j];
  CHECK(lhs == s2.root_parikh);

  // The reduced evaluation: P(V0) A^m + P(X) (A^{m-2} + A^{m-4} + ...)
  // (+ leftover (1,0,0) when m is odd) matches the general formula.
  for (int m = 0; m <= 30; ++m) {
    ParikhVector num = s2.initial_parikh;
    for (int i = 0; i < m; ++i) num = vec_mat_mul(num, s2.matrix);
    for (int j = m - 2; j >= 0; j -= 2) {
      IntMatrix target = identity_matrix(3);
      for (int i = 0; i < j; ++i) target = mat_mul(target, s2.matrix);
      ParikhVector term = vec_mat_mul(s2.root_parikh, target);
      for (std::size_t t = 0; t < num.size(); ++t) num[t] += term[t];
    }
    if (m % 2 == 1)
      num[0] += 1;  // unpaired P_m = (1,0,0) at A^0
    ParikhVector den = s2.root_parikh;
    for (int i = 0; i < m; ++i) den = vec_mat_mul(den, s2.matrix);
    CHECK(series_exponent(s2, m) == Rational(norm(num), norm(den)));
  }
}

TEST_CASE("tau image series") {
  const RunSeries& s = tau_g_series();
  CHECK(series_exponent(s, 0) == make_rational(5, 2));
  for (int m = 1; m <= 30; ++m) CHECK(series_exponent(s, m) < make_rational(5, 2));
}

TEST_CASE("series limits") {
  SeriesLimit l1 = series_limit(g_series(1));
  CHECK(l1.conforming);
  CHECK(std::abs(l1.value - 2.4808627) < 1e-6);
  CHECK(l1.gap < 1e-6);

  SeriesLimit l2 = series_limit(g_series(2));
  CHECK(l2.conforming);
  CHECK(std::abs(l2.value - l1.value) < 1e-9);

  SeriesLimit lt = series_limit(tau_g_series());
  CHECK(lt.value < 2.5);
}

TEST_CASE("non-conforming series falls back to the numeric estimate") {
  RunSeries s = g_series(1);
  s.corrections = {ParikhVector{1, 1, 0}, ParikhVector{0, 1, 0}};
  s.seed_length = 0;
  SeriesLimit lim = series_limit(s);
  CHECK_FALSE(lim.conforming);
  CHECK(lim.value == lim.numeric_estimate);
}

TEST_CASE("series exponents appear as actual runs") {
  Word g = generate("G", 20000);
  std::vector<Run> gr = runs(g);
  auto has_exponent = [](const std::vector<Run>& rs, const Rational& e) {
    for (const Run& r : rs)
      if (r.exponent() == e) return true;
    return false;
  };
  for (int m = 0; m <= 8; ++m) {
    CHECK(has_exponent(gr, series_exponent(g_series(1), m)));
    CHECK(has_exponent(gr, series_exponent(g_series(2), m)));
  }
  // The tau-image extension counts (two letters per run) are validated
  // against the actual runs of tau(G).
  Word tg = generate("tauG", 20000);
  std::vector<Run> tr = runs(tg);
  for (int m = 0; m <= 8; ++m) CHECK(has_exponent(tr, series_exponent(tau_g_series(), m)));
  Rational best{1};
  for (const Run& r : tr) best = std::max(best, r.exponent());
  CHECK(best == make_rational(5, 2));
}

TEST_CASE("morphic critical exponents") {
  std::vector<RunSeries> g_all{g_series(1), g_series(2)};
  MorphicCritical g = morphic_critical_exponent(GeneratorSpec{"G"}, g_all, 10000);
  CHECK_FALSE(g.attained);
  CHECK(std::abs(g.value - 2.4808627) < 1e-6);

  std::vector<RunSeries> t_all{tau_g_series()};
  MorphicCritical tg = morphic_critical_exponent(GeneratorSpec{"tauG"}, t_all, 10000);
  CHECK(tg.attained);
  REQUIRE(tg.attained_value.has_value());
  CHECK(*tg.attained_value == make_rational(5, 2));

  MorphicCritical tm = morphic_critical_exponent(GeneratorSpec{"tm"}, {}, 1 << 14);
  CHECK(tm.attained);
  CHECK(*tm.attained_value == make_rational(2));

  CHECK_THROWS_AS(morphic_critical_exponent(GeneratorSpec{"G"}, g_all, 10),
                  std::invalid_argument);
}

TEST_CASE("runs of a long G prefix stay below the limit") {
  Word g = generate("G", 100000);
  std::vector<Run> rs = runs(g);
  auto has = [&](Run r) { return std::find(rs.begin(), rs.end(), r) != rs.end(); };
  CHECK(has(Run{2, 4, 2}));
  CHECK(has(Run{3, 8, 4}));
  CHECK(has(Run{4, 16, 7}));
  SeriesLimit lim = series_limit(g_series(1));
  for (const Run& r : rs) CHECK(rational_to_double(r.exponent()) <= lim.value + 1e-9);
}
