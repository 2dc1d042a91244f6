#include "cow/krieger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cow/repetition.hpp"

namespace cow {

namespace {

using RPoly = std::vector<Rational>;  // ascending coefficients

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<std::int64_t>(i));
  trim(d);
  return d;
}

Rational eval(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RPoly poly_rem(RPoly a, const RPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RPoly monic(RPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (Rational& c : p) c /= lead;
  return p;
}

RPoly poly_gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = poly_rem(a, b);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

RPoly poly_div(const RPoly& a, const RPoly& b) {
  RPoly rem = a;
  trim(rem);
  RPoly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational{0});
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational factor = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    rem.pop_back();
    trim(rem);
  }
  return q;
}

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

int sturm_variations(const std::vector<RPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const RPoly& p : chain) {
    int s = sign_of(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Integer polynomial arithmetic for the characteristic polynomial.
using IPoly = std::vector<BigInt>;

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, BigInt{0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IPoly ipoly_add(IPoly a, const IPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt{0});
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

IPoly ipoly_neg(IPoly a) {
  for (BigInt& c : a) c = -c;
  return a;
}

// Determinant of a polynomial matrix by Laplace expansion; fine for k <= 5.
IPoly poly_det(const std::vector<std::vector<IPoly>>& m, std::vector<std::size_t> cols) {
  std::size_t row = m.size() - cols.size();
  if (cols.size() == 1) return m[row][cols[0]];
  IPoly acc;
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    std::vector<std::size_t> rest;
    for (std::size_t cj = 0; cj < cols.size(); ++cj)
      if (cj != ci) rest.push_back(cols[cj]);
    IPoly term = ipoly_mul(m[row][cols[ci]], poly_det(m, rest));
    acc = ipoly_add(std::move(acc), ci % 2 == 0 ? term : ipoly_neg(std::move(term)));
  }
  return acc;
}

IPoly characteristic_polynomial(const IntMatrix& a) {
  std::size_t k = a.size();
  std::vector<std::vector<IPoly>> m(k, std::vector<IPoly>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        m[i][j] = IPoly{-a[i][j], BigInt{1}};  // x - a_ii
      else
        m[i][j] = IPoly{-a[i][j]};
    }
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  return poly_det(m, cols);
}

ParikhVector pv(std::initializer_list<std::int64_t> xs) {
  ParikhVector out;
  for (std::int64_t x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

EigenData dominant_eigenvalue(const IntMatrix& a, double tol) {
  std::size_t k = a.size();
  if (k == 0) throw std::invalid_argument("empty matrix");
  BigInt max_row_sum = 0;
  for (const auto& row : a) {
    if (row.size() != k) throw std::invalid_argument("matrix must be square");
    BigInt s = 0;
    for (const BigInt& x : row) {
      if (x < 0) throw std::invalid_argument("matrix must be nonnegative");
      s += x;
    }
    max_row_sum = std::max(max_row_sum, s);
  }

  IPoly chi = characteristic_polynomial(a);
  RPoly p(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) p[i] = Rational(chi[i]);
  RPoly dp = derivative(p);
  RPoly sf = poly_div(p, poly_gcd(p, dp));  // square-free part

  std::vector<RPoly> chain{sf, derivative(sf)};
  while (chain.back().size() > 1) {
    RPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    trim(r);
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  Rational lo{-1};
  Rational hi = Rational(max_row_sum) + 1;
  int v_hi = sturm_variations(chain, hi);
  if (sturm_variations(chain, lo) - v_hi < 1)
    throw std::domain_error("matrix has no real eigenvalue >= 0");

  Rational tol_r(BigInt{1}, BigInt{1} << 60);
  {
    // Express tol as a crude binary rational just for the loop bound.
    double t = std::max(tol, 1e-15);
    int bits = 1;
    while (std::ldexp(1.0, -bits) > t && bits < 80) ++bits;
    tol_r = Rational(BigInt{1}, BigInt{1} << bits);
  }
  while (hi - lo > tol_r) {
    Rational mid = (lo + hi) / 2;
    if (sturm_variations(chain, mid) - v_hi >= 1)
      lo = mid;
    else
      hi = mid;
  }

  Rational root = (lo + hi) / 2;
  EigenData out;
  out.lambda = rational_to_double(root);
  out.char_poly = chi;
  RPoly exact_p(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) exact_p[i] = Rational(chi[i]);
  Rational residual = eval(exact_p, root);
  if (residual < 0) residual = -residual;
  out.residual = rational_to_double(residual);
  if (out.lambda < 1.0 - 16 * std::max(tol, 1e-12))
    throw std::domain_error("no real eigenvalue >= 1");
  return out;
}

Rational series_exponent(const RunSeries& s, int m) {
  if (m < 0) throw std::invalid_argument("series index must be >= 0");
  ParikhVector num_vec = s.initial_parikh;
  ParikhVector den_vec = s.root_parikh;
  for (int i = 1; i <= m; ++i) {
    num_vec = vec_mat_mul(num_vec, s.matrix);
    const ParikhVector& corr = s.corrections[(i - 1) % s.corrections.size()];
    for (std::size_t j = 0; j < num_vec.size(); ++j) num_vec[j] += corr[j];
    den_vec = vec_mat_mul(den_vec, s.matrix);
  }
  BigInt num, den;
  if (s.image_matrix) {
    num = norm(vec_mat_mul(num_vec, *s.image_matrix)) + s.image_extra;
    den = norm(vec_mat_mul(den_vec, *s.image_matrix));
  } else {
    num = norm(num_vec);
    den = norm(den_vec);
  }
  return Rational(num, den);
}

SeriesLimit series_limit(const RunSeries& s) {
  SeriesLimit out;
  out.numeric_estimate = rational_to_double(series_exponent(s, 40));

  bool conforming = s.corrections.size() == 2;
  if (conforming) {
    const ParikhVector& q1 = s.corrections[0];
    const ParikhVector& q2 = s.corrections[1];
    bool q1_zero = std::all_of(q1.begin(), q1.end(), [](const BigInt& x) { return x == 0; });
    bool case_a = q1_zero && q2 == s.root_parikh;
    ParikhVector q1a = vec_mat_mul(q1, s.matrix);
    for (std::size_t j = 0; j < q1a.size(); ++j) q1a[j] += q2[j];
    bool case_b = q1a == s.root_parikh;
    conforming = case_a || case_b;
  }
  // The base exponent must be a scalar multiple relation P(V0) = c P(X).
  BigInt base_num = norm(s.initial_parikh);
  BigInt base_den = norm(s.root_parikh);
  if (conforming) {
    for (std::size_t j = 0; j < s.root_parikh.size(); ++j)
      if (s.initial_parikh[j] * base_den != s.root_parikh[j] * base_num) {
        conforming = false;
        break;
      }
  }

  if (conforming) {
    EigenData eig = dominant_eigenvalue(s.matrix, 1e-13);
    double lambda = eig.lambda;
    out.value = rational_to_double(Rational(base_num, base_den)) + 1.0 / (lambda * lambda - 1.0);
    out.conforming = true;
    out.gap = std::abs(out.value - out.numeric_estimate);
  } else {
    out.value = out.numeric_estimate;
    out.conforming = false;
    out.gap = 0.0;
  }
  return out;
}

const RunSeries& g_series(int which) {
  static const RunSeries s1 = [] {
    RunSeries s;
    s.name = "G1";
    s.matrix = morphism_matrix(morphisms::gamma());
    s.root_parikh = pv({1, 0, 1});     // X = 20
    s.initial_parikh = pv({2, 0, 2});  // V_0 = 2020
    s.corrections = {pv({0, 0, 0}), pv({1, 0, 1})};
    s.seed_start = 2;
    s.seed_length = 4;
    s.seed_period = 2;
    return s;
  }();
  static const RunSeries s2 = [] {
    RunSeries s;
    s.name = "G2";
    s.matrix = morphism_matrix(morphisms::gamma());
    s.root_parikh = pv({1, 1, 1});     // X = 201
    s.initial_parikh = pv({2, 2, 2});  // V_0 = 201201
    s.corrections = {pv({1, 0, 0}), pv({0, 0, 1})};
    s.seed_start = 8;
    s.seed_length = 6;
    s.seed_period = 3;
    return s;
  }();
  if (which == 1) return s1;
  if (which == 2) return s2;
  throw std::invalid_argument("G series index is 1 or 2");
}

const RunSeries& tau_g_series() {
  static const RunSeries s = [] {
    RunSeries t = g_series(1);
    t.name = "tauG";
    t.image_matrix = morphism_matrix(morphisms::tau());
    t.image_extra = 2;  // two letters are added to each tau-image run
    t.seed_start = 3;
    t.seed_length = 10;
    t.seed_period = 4;
    return t;
  }();
  return s;
}

const RunSeries& series_by_name(std::string_view name) {
  if (name == "G1") return g_series(1);
  if (name == "G2") return g_series(2);
  if (name == "tauG") return tau_g_series();
  throw std::invalid_argument("unknown series: " + std::string(name));
}

MorphicCritical morphic_critical_exponent(const GeneratorSpec& spec,
                                          std::span<const RunSeries> series,
                                          std::size_t prefix_len) {
  Word w = generate(spec, prefix_len);
  std::vector<Run> rs = runs(w);

  // Candidates: the direct runs of the prefix (attained, exact), and per
  // series either its largest term (when that dominates the tail limit) or
  // the limit itself (a strict supremum, not attained).
  struct Candidate {
    double value;
    std::optional<Rational> exact;
  };
  std::vector<Candidate> candidates;
  Rational best_run{1};
  for (const Run& r : rs) best_run = std::max(best_run, r.exponent());
  candidates.push_back({rational_to_double(best_run), best_run});

  for (const RunSeries& s : series) {
    if (s.seed_length > 0) {
      if (s.seed_start + s.seed_length > prefix_len)
        throw std::invalid_argument("prefix too short to cover series seed: " + s.name);
      Run seed{s.seed_start, s.seed_length, s.seed_period};
      if (std::find(rs.begin(), rs.end(), seed) == rs.end())
        throw std::invalid_argument("declared seed run not found in prefix: " + s.name);
    }
    Rational max_term = series_exponent(s, 0);
    for (int m = 1; m <= 40; ++m) max_term = std::max(max_term, series_exponent(s, m));
    SeriesLimit lim = series_limit(s);
    double term_d = rational_to_double(max_term);
    if (term_d > lim.value + 1e-9)
      candidates.push_back({term_d, max_term});
    else
      candidates.push_back({lim.value, std::nullopt});
  }

  // Largest value wins; on (float) ties an attained exact value beats a
  // strict limit.
  MorphicCritical out;
  for (const Candidate& c : candidates) {
    if (c.value > out.value + 1e-9) {
      out.value = c.value;
      out.attained = c.exact.has_value();
      out.attained_value = c.exact;
    } else if (c.value > out.value - 1e-9 && c.exact && !out.attained) {
      out.attained = true;
      out.attained_value = c.exact;
      out.value = c.value;
    }
  }
  return out;
}

}  // namespace cow
