#include "cow/complexity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "cow/suffix_automaton.hpp"

namespace cow {

ComplexityProfile profile(const Word& w, std::size_t N) {
  if (N > w.size()) throw std::out_of_range("profile length exceeds word length");
  SuffixAutomaton sam(w);
  ComplexityProfile out;
  out.values = sam.factor_count_profile(N);
  out.source_prefix_length = w.size();
  out.stabilized = true;
  return out;
}

ComplexityProfile stabilized_profile(const PrefixGenerator& gen, std::size_t N, std::size_t l_max) {
  std::size_t len = std::max<std::size_t>(4 * std::max<std::size_t>(N, 1), 16);
  ComplexityProfile prev = profile(gen(len), N);
  prev.source_prefix_length = len;
  while (len * 2 <= l_max) {
    len *= 2;
    ComplexityProfile cur = profile(gen(len), N);
    cur.source_prefix_length = len;
    if (cur.values == prev.values) {
      cur.stabilized = true;
      return cur;
    }
    prev = std::move(cur);
  }
  prev.stabilized = false;
  return prev;
}

ComplexityProfile stabilized_profile(const GeneratorSpec& spec, std::size_t N, std::size_t l_max) {
  return stabilized_profile([&spec](std::size_t n) { return generate(spec, n); }, N, l_max);
}

std::int64_t SpecialFactorReport::weighted_count() const {
  std::int64_t total = 0;
  for (const SpecialFactor& sf : special)
    total += static_cast<std::int64_t>(sf.extensions.size()) - 1;
  return total;
}

SpecialFactorReport special_factors(const Word& w, std::size_t n) {
  if (n + 1 > w.size()) throw std::out_of_range("word too short for special factors of this length");
  std::map<std::string, std::set<Letter>> ext;
  std::string key;
  for (std::size_t i = 0; i + n < w.size(); ++i) {
    key.assign(reinterpret_cast<const char*>(w.letters().data() + i), n);
    ext[key].insert(w[i + n]);
  }
  SpecialFactorReport report;
  report.n = n;
  for (const auto& [factor, letters] : ext) {
    if (letters.size() < 2) continue;
    std::vector<Letter> raw(factor.begin(), factor.end());
    report.special.push_back(SpecialFactor{
        Word(std::move(raw), w.alphabet_size()),
        std::vector<Letter>(letters.begin(), letters.end())});
  }
  return report;
}

ClosedFormName closed_form_name(std::string_view name) {
  if (name == "p_t") return ClosedFormName::p_t;
  if (name == "p_tprime") return ClosedFormName::p_tprime;
  if (name == "D_t") return ClosedFormName::d_t;
  if (name == "D_tprime") return ClosedFormName::d_tprime;
  throw std::invalid_argument("unknown closed form: " + std::string(name));
}

namespace {

int floor_log2(std::int64_t m) { return std::bit_width(static_cast<std::uint64_t>(m)) - 1; }

std::int64_t p_t_closed(std::int64_t n) {
  static constexpr std::int64_t small[] = {1, 2, 4};
  if (n < 3) return small[n];
  std::int64_t m = n - 1;  // m >= 2
  int i = floor_log2(m);
  std::int64_t pow = std::int64_t{1} << i;
  if (m <= 3 * pow / 2) return 4 * m - pow;
  return 2 * m + 2 * pow;
}

std::int64_t p_tprime_closed(std::int64_t n) {
  static constexpr std::int64_t small[] = {1, 2, 4, 6, 10};
  if (n < 5) return small[n];
  std::int64_t m = n - 1;  // m >= 4, so i >= 2
  int i = floor_log2(m);
  std::int64_t pow = std::int64_t{1} << i;
  if (m <= 3 * pow / 2) return 4 * m - 3 * pow / 4;
  if (m <= 7 * pow / 4) return 3 * m + 3 * pow / 4;
  return 2 * m + 5 * pow / 2;
}

std::int64_t d_t_closed(std::int64_t n) {
  // 4 iff n = 2^k + i with k >= 1, 0 < i <= 2^{k-1}.
  for (int k = 1; (std::int64_t{1} << k) < n; ++k) {
    std::int64_t pow = std::int64_t{1} << k;
    if (n > pow && n <= pow + pow / 2) return 4;
  }
  return 2;
}

std::int64_t d_tprime_closed(std::int64_t n) {
  for (int k = 0; (std::int64_t{2} << k) < n; ++k) {
    std::int64_t pow = std::int64_t{1} << k;
    if (n > 2 * pow && n <= 3 * pow) return 4;
  }
  if (n == 4) return 3;
  for (int k = 1; (3 * (std::int64_t{1} << k)) < n; ++k) {
    std::int64_t pow = std::int64_t{1} << k;
    if (n > 3 * pow && n <= 7 * pow / 2) return 3;
  }
  return 2;
}

}  // namespace

std::int64_t closed_form(ClosedFormName name, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("closed form argument must be nonnegative");
  switch (name) {
    case ClosedFormName::p_t:
      return p_t_closed(n);
    case ClosedFormName::p_tprime:
      return p_tprime_closed(n);
    case ClosedFormName::d_t:
      if (n < 1) throw std::invalid_argument("D_t is defined for n >= 1");
      return d_t_closed(n);
    case ClosedFormName::d_tprime:
      if (n < 1) throw std::invalid_argument("D_t' is defined for n >= 1");
      return d_tprime_closed(n);
  }
  throw std::invalid_argument("unknown closed form");
}

std::vector<Word> minimal_forbidden_tm(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  Morphism mu = morphisms::mu();
  std::vector<Word> out;
  out.push_back(Word::from_digits("000", 2));
  out.push_back(Word::from_digits("111", 2));
  Word block010 = Word::from_digits("010", 2);
  Word block101 = Word::from_digits("101", 2);
  Word mu_k_0 = Word::from_digits("0", 2);
  for (int k = 0; k <= k_max; ++k) {
    Letter a_k = mu_k_0[mu_k_0.size() - 1];
    Word head(std::vector<Letter>{a_k}, 2);
    Word zero = Word::from_digits("0", 2);
    Word r_k = concat(concat(head, block010), zero);
    Word s_k = concat(concat(head, block101), zero);
    out.push_back(r_k);
    out.push_back(complement(r_k));
    out.push_back(s_k);
    out.push_back(complement(s_k));
    block010 = mu.apply(block010);
    block101 = mu.apply(block101);
    mu_k_0 = mu.apply(mu_k_0);
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool verify_minimal_forbidden(const Word& w, const Word& reference_prefix) {
  if (w.empty()) throw std::domain_error("empty candidate");
  if (reference_prefix.size() < 4 * w.size())
    throw std::invalid_argument("reference prefix too short to be conclusive");
  SuffixAutomaton sam(reference_prefix);
  if (sam.contains(w)) return false;
  if (w.size() == 1) return true;
  // All proper factors are factors of the two maximal ones.
  return sam.contains(w.letters().subspan(0, w.size() - 1)) &&
         sam.contains(w.letters().subspan(1));
}

namespace {

// Tries to read `cur` as x . mu(preimage) . (partial block); returns the
// preimage on success.
std::optional<Word> parse_mu_level(const Word& cur, const Word& x) {
  if (!x.is_prefix_of(cur)) return std::nullopt;
  std::vector<Letter> pre;
  std::size_t i = x.size();
  while (i + 2 <= cur.size()) {
    if (cur[i] == cur[i + 1]) return std::nullopt;  // blocks are 01 or 10
    pre.push_back(cur[i]);
    i += 2;
  }
  // A trailing single letter is a valid partial block.
  return Word(std::move(pre), 2);
}

}  // namespace

MuFactorization mu_factorize(const Word& w, int levels) {
  if (w.alphabet_size() != 2) throw std::invalid_argument("mu factorization is binary");
  if (levels < 0) throw std::invalid_argument("levels must be >= 0");
  static const char* kCandidates[] = {"", "0", "1", "00", "11"};
  MuFactorization out;
  Word cur = w;
  std::vector<std::size_t> sizes;
  for (int level = 0; level < levels; ++level) {
    if (cur.size() < 8)
      throw std::domain_error("word too short to factorize at level " + std::to_string(level));
    std::optional<Word> chosen_x;
    std::optional<Word> chosen_pre;
    for (const char* cand : kCandidates) {
      Word x = Word::from_digits(cand, 2);
      if (auto pre = parse_mu_level(cur, x)) {
        if (chosen_x)
          throw std::domain_error("ambiguous mu-factorization at level " + std::to_string(level));
        chosen_x = x;
        chosen_pre = pre;
      }
    }
    if (!chosen_x)
      throw std::domain_error("no mu-factorization at level " + std::to_string(level) +
                              " (word is not a (7/3)-power-free prefix?)");
    // The side condition of the factorization lemma: |x_i| = 2 forces
    // |x_{i-1}| = 0, or a run of 1's down to the start or to a 0.
    if (level >= 1 && chosen_x->size() == 2) {
      std::size_t j = sizes.size();
      while (j > 0 && sizes[j - 1] == 1) --j;
      bool ok = (sizes.back() == 0) || (j == 0) || (sizes[j - 1] == 0);
      if (!ok) throw std::domain_error("factorization violates the |x_i| = 2 side condition");
    }
    sizes.push_back(chosen_x->size());
    out.levels.push_back(*chosen_x);
    cur = *chosen_pre;
  }
  out.residual = cur;
  return out;
}

bool is_symmetric(const Word& w, std::size_t n) {
  if (w.size() < n + 1) throw std::invalid_argument("prefix too short for symmetry check");
  auto codings = bijective_codings(w.alphabet_size());
  for (std::size_t len = 1; len <= n; ++len) {
    std::set<std::string> factors;
    std::string key;
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      key.assign(reinterpret_cast<const char*>(w.letters().data() + i), len);
      factors.insert(key);
    }
    for (const Coding& c : codings) {
      for (const std::string& f : factors) {
        std::string img(f);
        for (char& ch : img) ch = static_cast<char>(c.apply(static_cast<Letter>(ch)));
        if (!factors.contains(img)) return false;
      }
    }
  }
  return true;
}

}  // namespace cow
