#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cow/rational.hpp"
#include "cow/word.hpp"

namespace cow {

// A power-freeness threshold: plain alpha forbids exponents >= alpha,
// strict ("alpha+") forbids exponents > alpha.
struct PowerBound {
  Rational value;
  bool strict = false;

  // "7/3", "7/3+", "2", "2+"
  static PowerBound parse(std::string_view text);
  std::string str() const;

  bool violated_by(const Rational& exponent) const {
    return strict ? exponent > value : exponent >= value;
  }
  bool operator==(const PowerBound&) const = default;
};

// A maximal repetition: the factor w[start, start+length) has minimal period
// `period`, exponent length/period >= 2 for entries produced by runs(), and
// the occurrence extends neither left nor right with the same period.
struct Run {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 1;

  Rational exponent() const { return make_rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period)); }
  auto operator<=>(const Run&) const = default;
};

// |w| minus the longest proper border; 1 <= result <= |w|. Throws on empty.
std::size_t minimal_period(const Word& w);

// |w| / minimal_period(w), exact. Throws on empty.
Rational exponent(const Word& w);

struct CriticalExponent {
  Rational value;
  Run witness;  // one maximizing factor; period is its minimal period
};

// Maximum exponent over all nonempty factors (attained for finite words).
CriticalExponent critical_exponent(const Word& w);

// Prefix of x^omega of length ceil(a * |x|); a >= 1, x nonempty.
Word fractional_power(const Word& x, const Rational& a);

struct PowerCheck {
  bool pass = true;
  std::optional<Run> witness;  // maximal-exponent witness on failure
};

// Pass iff no factor violates the bound; the empty word passes vacuously.
PowerCheck check_power_free(const Word& w, const PowerBound& b);

// All maximal runs with exponent >= 2, sorted by start position then period.
std::vector<Run> runs(const Word& w);

}  // namespace cow
