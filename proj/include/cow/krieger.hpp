#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cow/generators.hpp"
#include "cow/rational.hpp"
#include "cow/word.hpp"

namespace cow {

struct EigenData {
  double lambda = 0.0;
  double residual = 0.0;               // |char_poly(lambda)|
  std::vector<BigInt> char_poly;       // ascending coefficients, exact
};

// Largest real eigenvalue of a nonnegative square integer matrix, located by
// Sturm-sequence bisection on the exactly computed characteristic
// polynomial; the bisection interval shrinks below tol. Throws if no real
// eigenvalue >= 1 exists.
EigenData dominant_eigenvalue(const IntMatrix& a, double tol = 1e-12);

// A series of runs V_0, V_1, ... in a morphic fixed point:
// exp(V_m) = || P(V_0) A^m + sum_{i=1..m} P_i A^{m-i} || / || P(X) A^m ||
// with the correction vectors P_i cycling through `corrections`. When
// image_matrix B is present the series lives in the coded image:
// numerator and denominator are multiplied by B and `image_extra` letters
// are added to each image run.
struct RunSeries {
  std::string name;
  ParikhVector root_parikh;             // P(X)
  ParikhVector initial_parikh;          // P(V_0)
  std::vector<ParikhVector> corrections;  // P_1, P_2, ... cyclic
  IntMatrix matrix;                     // A
  std::optional<IntMatrix> image_matrix;  // B
  std::int64_t image_extra = 0;
  // The seed run V_0 as it occurs in the (image) word, for coverage checks.
  std::size_t seed_start = 0;
  std::size_t seed_length = 0;
  std::size_t seed_period = 0;
};

// Exact exponent of the m-th run of the series.
Rational series_exponent(const RunSeries& s, int m);

struct SeriesLimit {
  double value = 0.0;
  // True when the corrections telescope against (A^2 - I) and the value is
  // the symbolic limit base + 1/(lambda^2 - 1); false means the numeric
  // evaluation at m = 40 is reported instead.
  bool conforming = false;
  double numeric_estimate = 0.0;  // exp(V_40)
  double gap = 0.0;               // |value - numeric_estimate|
};

SeriesLimit series_limit(const RunSeries& s);

// The declared series of the paper's words: G1 (seed 2020 at position 2),
// G2 (seed 201201 at position 8), tauG (image of G1 under tau, +2 letters).
const RunSeries& g_series(int which);
const RunSeries& tau_g_series();
const RunSeries& series_by_name(std::string_view name);  // "G1" | "G2" | "tauG"

struct MorphicCritical {
  double value = 0.0;
  std::optional<Rational> attained_value;  // exact when attained
  bool attained = false;
};

// Critical exponent of a morphic word: max over direct runs of the prefix
// and the declared series' suprema/limits. attained == false means the value
// is a strict limit. Throws if the prefix does not cover a declared seed.
MorphicCritical morphic_critical_exponent(const GeneratorSpec& spec,
                                          std::span<const RunSeries> series,
                                          std::size_t prefix_len);

}  // namespace cow
