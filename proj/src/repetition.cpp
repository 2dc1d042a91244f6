#include "cow/repetition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cow {

PowerBound PowerBound::parse(std::string_view text) {
  PowerBound b;
  if (!text.empty() && text.back() == '+') {
    b.strict = true;
    text.remove_suffix(1);
  }
  b.value = parse_rational(text);
  if (b.value < 1) throw std::invalid_argument("power bound must be >= 1");
  return b;
}

std::string PowerBound::str() const { return rational_str(value) + (strict ? "+" : ""); }

namespace {

std::size_t minimal_period_span(std::span<const Letter> w) {
  // KMP border array; period = n - longest proper border.
  std::size_t n = w.size();
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return n - border[n];
}

}  // namespace

std::size_t minimal_period(const Word& w) {
  if (w.empty()) throw std::domain_error("minimal period of the empty word");
  return minimal_period_span(w.letters());
}

Rational exponent(const Word& w) {
  if (w.empty()) throw std::domain_error("exponent of the empty word");
  return make_rational(static_cast<std::int64_t>(w.size()),
                       static_cast<std::int64_t>(minimal_period(w)));
}

CriticalExponent critical_exponent(const Word& w) {
  if (w.empty()) throw std::domain_error("critical exponent of the empty word");
  std::span<const Letter> s = w.letters();
  std::size_t n = s.size();
  // Best so far as a fraction length/period; single letters give exponent 1.
  Run best{0, 1, 1};
  // For each period p, maximal blocks of positions j with w[j] == w[j+p]
  // delimit the maximal extents with period p. The maximum over all p is the
  // critical exponent, and a strictly maximal extent always carries its
  // minimal period (a smaller period would have produced a longer extent at
  // that smaller p).
  for (std::size_t p = 1; p < n; ++p) {
    std::size_t j = 0;
    const std::size_t limit = n - p;
    while (j < limit) {
      if (s[j] != s[j + p]) {
        ++j;
        continue;
      }
      std::size_t run_start = j;
      while (j < limit && s[j] == s[j + p]) ++j;
      std::size_t len = (j - run_start) + p;  // extent [run_start, run_start+len)
      // len/p > best.length/best.period ?
      if (static_cast<unsigned long long>(len) * best.period >
          static_cast<unsigned long long>(best.length) * p)
        best = Run{run_start, len, p};
    }
  }
  return CriticalExponent{make_rational(static_cast<std::int64_t>(best.length),
                                        static_cast<std::int64_t>(best.period)),
                          best};
}

Word fractional_power(const Word& x, const Rational& a) {
  if (x.empty()) throw std::domain_error("fractional power of the empty word");
  if (a < 1) throw std::invalid_argument("exponent must be >= 1");
  BigInt num = numerator(a) * x.size();
  BigInt den = denominator(a);
  BigInt len_big = (num + den - 1) / den;  // ceil(a * |x|)
  if (len_big > 100'000'000) throw std::invalid_argument("fractional power too long");
  std::size_t len = len_big.convert_to<std::size_t>();
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) letters.push_back(x[i % x.size()]);
  return Word(std::move(letters), x.alphabet_size());
}

PowerCheck check_power_free(const Word& w, const PowerBound& b) {
  if (w.empty()) return PowerCheck{true, std::nullopt};
  CriticalExponent ce = critical_exponent(w);
  if (b.violated_by(ce.value)) return PowerCheck{false, ce.witness};
  return PowerCheck{true, std::nullopt};
}

std::vector<Run> runs(const Word& w) {
  std::span<const Letter> s = w.letters();
  std::size_t n = s.size();
  std::vector<Run> out;
  for (std::size_t p = 1; p * 2 <= n; ++p) {
    std::size_t j = 0;
    const std::size_t limit = n - p;
    while (j < limit) {
      if (s[j] != s[j + p]) {
        ++j;
        continue;
      }
      std::size_t run_start = j;
      while (j < limit && s[j] == s[j + p]) ++j;
      std::size_t match_len = j - run_start;
      if (match_len < p) continue;  // exponent below 2
      std::size_t len = match_len + p;
      // Keep only extents whose minimal period is p; the same repetition
      // is otherwise reported by the scan at the smaller period.
      if (minimal_period_span(s.subspan(run_start, len)) == p)
        out.push_back(Run{run_start, len, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cow
