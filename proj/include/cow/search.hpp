#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cow/repetition.hpp"
#include "cow/word.hpp"

namespace cow {

// cap(n) = slope * n + offset, enforced for every n >= 1.
struct AffineCap {
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  std::int64_t at(std::size_t n) const {
    return slope * static_cast<std::int64_t>(n) + offset;
  }
  // "2n", "2n+1", "n+1", "12"
  static AffineCap parse(std::string_view text);
  std::string str() const;
  bool operator==(const AffineCap&) const = default;
};

// A prefix-monotone admissibility constraint: power bound, optional
// per-length complexity cap, optional forbidden factors.
struct Constraint {
  int alphabet_size = 2;
  PowerBound bound;
  std::optional<AffineCap> complexity_cap;
  std::vector<Word> forbidden_factors;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOutcome {
  std::vector<std::uint64_t> census;   // admissible words per length 0..N
  std::optional<std::size_t> max_length;  // empty when the verdict is open
  std::vector<Word> maximal_words;     // all words of the maximum length
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

// Full admissibility check of a single word (used by tests and callers that
// hold words from elsewhere).
bool admissible(const Word& w, const Constraint& c);

// Exact census of admissible words per length up to n_max, by incremental
// DFS (appending a letter tests only suffix-anchored repetitions and the cap
// at the new length).
SearchOutcome dfs_census(const Constraint& c, std::size_t n_max,
                         std::uint64_t node_budget = kDefaultNodeBudget);

// Maximum length of an admissible word and the complete set of words of that
// length; requires the constrained tree to be exhausted within the budget,
// otherwise the outcome is flagged open.
SearchOutcome longest_with_cap(const Constraint& c,
                               std::uint64_t node_budget = kDefaultNodeBudget);

// Depth-limited right / two-sided extendability: true iff w extends by
// `depth` letters (on the respective sides) within the constraint. An
// approximation from above of true extendability; monotone in depth.
bool rext_approx(const Word& w, const Constraint& c, std::size_t depth);
bool ext_approx(const Word& w, const Constraint& c, std::size_t depth);

// Shortest (then lexicographically least) middle word m with u m v
// admissible and ext_approx(u m v) true; nullopt only means none within
// max_middle.
std::optional<Word> connect(const Word& u, const Word& v, const Constraint& c,
                            std::size_t max_middle, std::size_t depth);

// Replaces the i-th occurrence of letter 2 in u with the i-th letter of v
// (v over {2,3}); the result is over the 4-letter alphabet.
Word split_letter(const Word& u, const Word& v);

// The greedy recurrent builder: repeatedly appends a connector plus the
// radix-smallest ext_approx-positive word that is not yet a factor. Stops
// early (with the word built so far) if a connector search fails.
Word greedy_recurrent_builder(const Constraint& c, int steps, std::size_t depth,
                              std::size_t max_middle = 64);

}  // namespace cow
