#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cow/word.hpp"

namespace cow {

// Suffix automaton over a small alphabet; the distinct-factor index behind
// complexity profiles and factor-set membership.
class SuffixAutomaton {
 public:
  SuffixAutomaton(std::span<const Letter> text, int alphabet_size);
  explicit SuffixAutomaton(const Word& w) : SuffixAutomaton(w.letters(), w.alphabet_size()) {}

  bool contains(std::span<const Letter> factor) const;
  bool contains(const Word& factor) const { return contains(factor.letters()); }

  // p(0..max_len): number of distinct factors per length; p(0) = 1.
  std::vector<std::int64_t> factor_count_profile(std::size_t max_len) const;

  // Number of length-n factors with >= min_extensions distinct right
  // extensions inside the text, for n = 0..max_len.
  std::vector<std::int64_t> right_special_counts(std::size_t max_len, int min_extensions = 2) const;

  // Sum over factors of (right extensions - 1); the first difference of the
  // factor-count profile except at the word end.
  std::vector<std::int64_t> right_special_weighted(std::size_t max_len) const;

  // Visits every distinct factor of the given length once, in lexicographic
  // order.
  void visit_factors(std::size_t len, const std::function<void(std::span<const Letter>)>& fn) const;

  std::size_t state_count() const { return states_.size(); }

 private:
  struct State {
    std::int32_t len = 0;
    std::int32_t link = -1;
    std::array<std::int32_t, kMaxAlphabet> next{};
  };
  std::vector<State> states_;
  int alphabet_;

  void visit_rec(std::int32_t state, std::size_t depth, std::vector<Letter>& buf,
                 const std::function<void(std::span<const Letter>)>& fn) const;
};

}  // namespace cow
