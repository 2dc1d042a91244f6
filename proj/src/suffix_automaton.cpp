#include "cow/suffix_automaton.hpp"

#include <stdexcept>

namespace cow {

SuffixAutomaton::SuffixAutomaton(std::span<const Letter> text, int alphabet_size)
    : alphabet_(alphabet_size) {
  if (alphabet_ < 1 || alphabet_ > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in 1..5");
  states_.reserve(2 * text.size() + 2);
  states_.push_back(State{});  // root
  for (auto& t : states_[0].next) t = -1;
  std::int32_t last = 0;

  for (Letter ch : text) {
    std::int32_t cur = static_cast<std::int32_t>(states_.size());
    states_.push_back(State{});
    states_[cur].len = states_[last].len + 1;
    states_[cur].link = -1;
    for (auto& t : states_[cur].next) t = -1;

    std::int32_t p = last;
    while (p != -1 && states_[p].next[ch] == -1) {
      states_[p].next[ch] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      std::int32_t q = states_[p].next[ch];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        std::int32_t clone = static_cast<std::int32_t>(states_.size());
        states_.push_back(states_[q]);
        states_[clone].len = states_[p].len + 1;
        while (p != -1 && states_[p].next[ch] == q) {
          states_[p].next[ch] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last = cur;
  }
}

bool SuffixAutomaton::contains(std::span<const Letter> factor) const {
  std::int32_t s = 0;
  for (Letter ch : factor) {
    if (ch >= alphabet_) return false;
    s = states_[s].next[ch];
    if (s == -1) return false;
  }
  return true;
}

std::vector<std::int64_t> SuffixAutomaton::factor_count_profile(std::size_t max_len) const {
  // Each non-root state covers factor lengths (link.len, len].
  std::vector<std::int64_t> diff(max_len + 2, 0);
  for (std::size_t i = 1; i < states_.size(); ++i) {
    std::size_t lo = static_cast<std::size_t>(states_[states_[i].link].len) + 1;
    std::size_t hi = static_cast<std::size_t>(states_[i].len);
    if (lo > max_len) continue;
    hi = std::min(hi, max_len);
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<std::int64_t> p(max_len + 1, 0);
  p[0] = 1;
  std::int64_t acc = 0;
  for (std::size_t n = 1; n <= max_len; ++n) {
    acc += diff[n];
    p[n] = acc;
  }
  return p;
}

std::vector<std::int64_t> SuffixAutomaton::right_special_counts(std::size_t max_len,
                                                                int min_extensions) const {
  std::vector<std::int64_t> diff(max_len + 2, 0);
  for (std::size_t i = 1; i < states_.size(); ++i) {
    int out = 0;
    for (int a = 0; a < alphabet_; ++a)
      if (states_[i].next[a] != -1) ++out;
    if (out < min_extensions) continue;
    std::size_t lo = static_cast<std::size_t>(states_[states_[i].link].len) + 1;
    std::size_t hi = static_cast<std::size_t>(states_[i].len);
    if (lo > max_len) continue;
    hi = std::min(hi, max_len);
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<std::int64_t> d(max_len + 1, 0);
  std::int64_t acc = 0;
  for (std::size_t n = 1; n <= max_len; ++n) {
    acc += diff[n];
    d[n] = acc;
  }
  // Length 0: the empty factor is special iff the root branches enough.
  int root_out = 0;
  for (int a = 0; a < alphabet_; ++a)
    if (states_[0].next[a] != -1) ++root_out;
  d[0] = root_out >= min_extensions ? 1 : 0;
  return d;
}

std::vector<std::int64_t> SuffixAutomaton::right_special_weighted(std::size_t max_len) const {
  std::vector<std::int64_t> diff(max_len + 2, 0);
  for (std::size_t i = 1; i < states_.size(); ++i) {
    int out = 0;
    for (int a = 0; a < alphabet_; ++a)
      if (states_[i].next[a] != -1) ++out;
    if (out < 2) continue;
    std::size_t lo = static_cast<std::size_t>(states_[states_[i].link].len) + 1;
    std::size_t hi = static_cast<std::size_t>(states_[i].len);
    if (lo > max_len) continue;
    hi = std::min(hi, max_len);
    diff[lo] += out - 1;
    diff[hi + 1] -= out - 1;
  }
  std::vector<std::int64_t> d(max_len + 1, 0);
  std::int64_t acc = 0;
  for (std::size_t n = 1; n <= max_len; ++n) {
    acc += diff[n];
    d[n] = acc;
  }
  int root_out = 0;
  for (int a = 0; a < alphabet_; ++a)
    if (states_[0].next[a] != -1) ++root_out;
  d[0] = root_out > 0 ? root_out - 1 : 0;
  return d;
}

void SuffixAutomaton::visit_rec(std::int32_t state, std::size_t depth, std::vector<Letter>& buf,
                                const std::function<void(std::span<const Letter>)>& fn) const {
  if (depth == 0) {
    fn(buf);
    return;
  }
  for (int a = 0; a < alphabet_; ++a) {
    std::int32_t t = states_[state].next[a];
    if (t == -1) continue;
    buf.push_back(static_cast<Letter>(a));
    visit_rec(t, depth - 1, buf, fn);
    buf.pop_back();
  }
}

void SuffixAutomaton::visit_factors(std::size_t len,
                                    const std::function<void(std::span<const Letter>)>& fn) const {
  std::vector<Letter> buf;
  buf.reserve(len);
  visit_rec(0, len, buf, fn);
}

}  // namespace cow
