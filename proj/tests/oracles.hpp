#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and never share code with the implementations they
// check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cow/repetition.hpp"
#include "cow/search.hpp"
#include "cow/word.hpp"

namespace cow::oracles {

// Minimal period by direct testing of every candidate period.
inline std::size_t naive_minimal_period(std::span<const Letter> w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size(); ++i)
      if (w[i] != w[i + p]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return w.size();
}

// Max exponent over all factors, all periods, as a length/period pair in
// plain integers (cheap enough for exhaustive sweeps).
inline std::pair<std::int64_t, std::int64_t> naive_critical_exponent_frac(const Word& w) {
  std::int64_t best_len = 1, best_per = 1;
  auto s = w.letters();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      auto p = static_cast<std::int64_t>(naive_minimal_period(s.subspan(i, len)));
      auto l = static_cast<std::int64_t>(len);
      if (l * best_per > best_len * p) {
        best_len = l;
        best_per = p;
      }
    }
  return {best_len, best_per};
}

inline Rational naive_critical_exponent(const Word& w) {
  auto [len, per] = naive_critical_exponent_frac(w);
  return make_rational(len, per);
}

inline bool naive_power_free(const Word& w, const PowerBound& b) {
  if (w.empty()) return true;
  return !b.violated_by(naive_critical_exponent(w));
}

// All maximal runs, checked per occurrence by explicit extension tests.
inline std::vector<Run> naive_runs(const Word& w) {
  std::vector<Run> out;
  auto s = w.letters();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 2; i + len <= w.size(); ++len) {
      std::size_t p = naive_minimal_period(s.subspan(i, len));
      if (len < 2 * p) continue;
      bool left = i > 0 && s[i - 1] == s[i - 1 + p];
      bool right = i + len < w.size() && s[i + len] == s[i + len - p];
      if (left || right) continue;  // extendable with the same minimal period
      out.push_back(Run{i, len, p});
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Distinct factors per length via a plain set of strings.
inline std::vector<std::int64_t> naive_profile(const Word& w, std::size_t max_len) {
  std::vector<std::int64_t> p(max_len + 1, 0);
  p[0] = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i + len <= w.size(); ++i)
      seen.insert(std::string(reinterpret_cast<const char*>(w.letters().data() + i), len));
    p[len] = static_cast<std::int64_t>(seen.size());
  }
  return p;
}

inline bool naive_admissible(const Word& w, const Constraint& c) {
  if (!naive_power_free(w, c.bound)) return false;
  for (const Word& f : c.forbidden_factors)
    if (w.contains_factor(f)) return false;
  if (c.complexity_cap) {
    auto p = naive_profile(w, w.size());
    for (std::size_t n = 1; n <= w.size(); ++n)
      if (p[n] > c.complexity_cap->at(n)) return false;
  }
  return true;
}

// Census by enumerating every word over the alphabet.
inline std::vector<std::uint64_t> naive_census(const Constraint& c, std::size_t n_max) {
  std::vector<std::uint64_t> census(n_max + 1, 0);
  census[0] = 1;
  std::vector<Letter> digits;
  for (std::size_t len = 1; len <= n_max; ++len) {
    digits.assign(len, 0);
    while (true) {
      Word w(digits, c.alphabet_size);
      if (naive_admissible(w, c)) ++census[len];
      std::size_t pos = len;
      while (pos > 0 && digits[pos - 1] == c.alphabet_size - 1) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  return census;
}

}  // namespace cow::oracles
