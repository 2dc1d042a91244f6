#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "cow/generators.hpp"
#include "cow/word.hpp"

namespace cow {

struct ComplexityProfile {
  std::vector<std::int64_t> values;  // p(0..N)
  std::size_t source_prefix_length = 0;
  bool stabilized = true;

  std::int64_t p(std::size_t n) const { return values.at(n); }
  bool operator==(const ComplexityProfile&) const = default;
};

// Exact subword complexity of the finite word w, lengths 0..N. N <= |w|.
ComplexityProfile profile(const Word& w, std::size_t N);

using PrefixGenerator = std::function<Word(std::size_t)>;

// Estimates p(0..N) of an infinite word from its prefixes: the prefix length
// doubles from 4*N until two successive doublings agree. Values are lower
// bounds that have empirically converged; `stabilized` is false if the cap
// l_max is reached without agreement.
ComplexityProfile stabilized_profile(const GeneratorSpec& spec, std::size_t N,
                                     std::size_t l_max = std::size_t{1} << 20);
ComplexityProfile stabilized_profile(const PrefixGenerator& gen, std::size_t N,
                                     std::size_t l_max = std::size_t{1} << 20);

struct SpecialFactor {
  Word factor;
  std::vector<Letter> extensions;  // >= 2 distinct right extensions
};

struct SpecialFactorReport {
  std::size_t n = 0;
  std::vector<SpecialFactor> special;  // lexicographic by factor

  std::int64_t count() const { return static_cast<std::int64_t>(special.size()); }
  // Sum of (extensions - 1); equals p(n+1) - p(n) on stabilized factor sets.
  std::int64_t weighted_count() const;
};

// All length-n factors of w with at least two right extensions in w.
SpecialFactorReport special_factors(const Word& w, std::size_t n);

enum class ClosedFormName { p_t, p_tprime, d_t, d_tprime };

ClosedFormName closed_form_name(std::string_view name);

// Exact closed forms for the Thue-Morse and twisted Thue-Morse complexity
// and special-factor counts; small arguments below the formulas' domains are
// table-backed.
std::int64_t closed_form(ClosedFormName name, std::int64_t n);

// 000, 111 and the families r_k = a_k mu^k(010) 0, s_k = a_k mu^k(101) 0
// plus complements for 0 <= k <= k_max, sorted by length then
// lexicographically. a_k is the last letter of mu^k(0).
std::vector<Word> minimal_forbidden_tm(int k_max);

// True iff w is absent from the reference factor set while both maximal
// proper factors are present. The reference prefix must have length >=
// 4*|w|; shorter references throw.
bool verify_minimal_forbidden(const Word& w, const Word& reference_prefix);

struct MuFactorization {
  std::vector<Word> levels;  // x_0, ..., x_{levels-1}, each in {eps,0,1,00,11}
  Word residual;             // the remaining preimage word
};

// Level-by-level factorization w = x_0 mu(x_1) ... mu^{k}(x_k)
// mu^{k+1}(residual) (up to a trailing partial block per level). Each level
// requires at least 8 letters and a unique parse; violations throw.
MuFactorization mu_factorize(const Word& w, int levels);

// True iff the set of factors of w of each length <= n is closed under all
// bijective codings of the alphabet.
bool is_symmetric(const Word& w, std::size_t n);

}  // namespace cow
