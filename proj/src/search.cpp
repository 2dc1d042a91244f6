#include "cow/search.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cow {

AffineCap AffineCap::parse(std::string_view text) {
  // "[a]n[+b]", "n", or a plain integer.
  AffineCap cap;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto npos = s.find('n');
  try {
    if (npos == std::string::npos) {
      cap.offset = std::stoll(s);
      return cap;
    }
    std::string a = s.substr(0, npos);
    cap.slope = a.empty() ? 1 : std::stoll(a);
    std::string b = s.substr(npos + 1);
    if (!b.empty()) {
      if (b[0] != '+' && b[0] != '-') throw std::invalid_argument("cap");
      cap.offset = std::stoll(b);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed cap: " + std::string(text));
  }
  return cap;
}

std::string AffineCap::str() const {
  std::string s;
  if (slope != 0) {
    if (slope != 1) s += std::to_string(slope);
    s += "n";
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
  } else {
    s = std::to_string(offset);
  }
  return s;
}

namespace {

// Incremental DFS state: appending a letter tests suffix-anchored
// repetitions, forbidden-factor suffixes and the complexity cap at the
// lengths whose factor counts change.
class SearchState {
 public:
  explicit SearchState(const Constraint& c) : c_(c) {
    bnum_ = to_int64(numerator(c.bound.value));
    bden_ = to_int64(denominator(c.bound.value));
    if (c_.complexity_cap) pcount_.push_back(0);  // dummy index 0
  }

  std::size_t size() const { return w_.size(); }
  const std::vector<Letter>& letters() const { return w_; }
  Word word() const { return Word(w_, c_.alphabet_size); }

  bool push(Letter a) {
    w_.push_back(a);
    if (!power_ok() || !forbidden_ok()) {
      w_.pop_back();
      return false;
    }
    if (c_.complexity_cap) {
      std::size_t k = longest_earlier_suffix();
      std::size_t n = w_.size();
      pcount_.push_back(0);
      for (std::size_t len = k + 1; len <= n; ++len) {
        if (pcount_[len] + 1 > c_.complexity_cap->at(len)) {
          pcount_.pop_back();
          w_.pop_back();
          return false;
        }
      }
      for (std::size_t len = k + 1; len <= n; ++len) ++pcount_[len];
      bumped_from_.push_back(k + 1);
    }
    return true;
  }

  void pop() {
    if (c_.complexity_cap) {
      std::size_t n = w_.size();
      for (std::size_t len = bumped_from_.back(); len <= n; ++len) --pcount_[len];
      bumped_from_.pop_back();
      pcount_.pop_back();
    }
    w_.pop_back();
  }

  bool push_all(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!push(w[i])) {
        for (std::size_t j = 0; j < i; ++j) pop();
        return false;
      }
    }
    return true;
  }

 private:
  bool power_ok() const {
    const std::size_t n = w_.size();
    const std::int64_t excess = bnum_ - bden_;  // alpha - 1, scaled by bden
    for (std::size_t p = 1; p < n; ++p) {
      // Violation with period p needs ext matched letters beyond the period:
      // non-strict: ext*bden >= excess*p; strict: ext*bden > excess*p.
      std::int64_t needed_num = excess * static_cast<std::int64_t>(p);
      std::int64_t needed =
          c_.bound.strict ? needed_num / bden_ + 1 : (needed_num + bden_ - 1) / bden_;
      std::size_t max_ext = n - p;
      if (needed > static_cast<std::int64_t>(max_ext)) continue;
      std::size_t ext = 0;
      while (ext < max_ext && w_[n - 1 - ext] == w_[n - 1 - ext - p]) {
        ++ext;
        if (static_cast<std::int64_t>(ext) >= needed) return false;
      }
    }
    return true;
  }

  bool forbidden_ok() const {
    for (const Word& f : c_.forbidden_factors) {
      if (f.empty() || f.size() > w_.size()) continue;
      if (std::equal(f.letters().begin(), f.letters().end(), w_.end() - f.size())) return false;
    }
    return true;
  }

  // Longest proper suffix that also occurs ending at an earlier position.
  std::size_t longest_earlier_suffix() const {
    const std::size_t n = w_.size();
    std::size_t best = 0;
    for (std::size_t d = 1; d < n; ++d) {
      std::size_t limit = n - d;
      std::size_t len = 0;
      while (len < limit && w_[n - 1 - len] == w_[n - 1 - len - d]) ++len;
      best = std::max(best, len);
      if (best + 1 == n) break;
    }
    return best;
  }

  const Constraint& c_;
  std::vector<Letter> w_;
  std::vector<std::int64_t> pcount_;
  std::vector<std::size_t> bumped_from_;
  std::int64_t bnum_ = 2, bden_ = 1;
};

struct DfsDriver {
  const Constraint& c;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;

  // Calls visit(state) for every admissible nonempty word in lex order, up
  // to depth_cap (no cap when 0); visit returns false to prune the subtree.
  template <typename Visit>
  void explore(SearchState& st, std::size_t depth_cap, const Visit& visit) {
    if (exhausted_budget) return;
    if (depth_cap != 0 && st.size() >= depth_cap) return;
    for (Letter a = 0; a < c.alphabet_size; ++a) {
      if (nodes >= budget) {
        exhausted_budget = true;
        return;
      }
      if (!st.push(a)) continue;
      ++nodes;
      if (visit(st)) explore(st, depth_cap, visit);
      st.pop();
      if (exhausted_budget) return;
    }
  }
};

bool extend_right(SearchState& st, const Constraint& c, std::size_t depth) {
  if (depth == 0) return true;
  for (Letter a = 0; a < c.alphabet_size; ++a) {
    if (!st.push(a)) continue;
    bool ok = extend_right(st, c, depth - 1);
    st.pop();
    if (ok) return true;
  }
  return false;
}

Constraint reversed_constraint(const Constraint& c) {
  Constraint rc = c;
  for (Word& f : rc.forbidden_factors) f = reverse(f);
  return rc;
}

// Two-sided joint extension: for the current right extension, the left side
// is searched on the reversed word (power-freeness and factor counts are
// reversal-invariant).
bool extend_both(SearchState& st, const Constraint& c, const Constraint& rc, std::size_t left_depth,
                 std::size_t right_remaining) {
  if (right_remaining == 0) {
    SearchState rev_state(rc);
    if (!rev_state.push_all(reverse(Word(st.letters(), c.alphabet_size)))) return false;
    return extend_right(rev_state, rc, left_depth);
  }
  for (Letter a = 0; a < c.alphabet_size; ++a) {
    if (!st.push(a)) continue;
    bool ok = extend_both(st, c, rc, left_depth, right_remaining - 1);
    st.pop();
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool admissible(const Word& w, const Constraint& c) {
  if (w.alphabet_size() > c.alphabet_size)
    throw std::invalid_argument("word alphabet exceeds constraint alphabet");
  SearchState st(c);
  return st.push_all(w);
}

SearchOutcome dfs_census(const Constraint& c, std::size_t n_max, std::uint64_t node_budget) {
  SearchOutcome out;
  out.census.assign(n_max + 1, 0);
  out.census[0] = 1;
  SearchState st(c);
  DfsDriver driver{c, node_budget};
  driver.explore(st, n_max, [&](SearchState& s) {
    ++out.census[s.size()];
    return true;
  });
  out.nodes = driver.nodes;
  out.budget_exhausted = driver.exhausted_budget;
  std::size_t last = 0;
  for (std::size_t i = 0; i <= n_max; ++i)
    if (out.census[i] > 0) last = i;
  // The maximum length is known only if the tree died before the horizon.
  if (!driver.exhausted_budget && last < n_max) out.max_length = last;
  return out;
}

SearchOutcome longest_with_cap(const Constraint& c, std::uint64_t node_budget) {
  SearchOutcome out;
  std::size_t best = 0;
  std::vector<Word> words{Word({}, c.alphabet_size)};
  std::vector<std::uint64_t> census{1};
  SearchState st(c);
  DfsDriver driver{c, node_budget};
  driver.explore(st, 0, [&](SearchState& s) {
    if (census.size() <= s.size()) census.resize(s.size() + 1, 0);
    ++census[s.size()];
    if (s.size() > best) {
      best = s.size();
      words.clear();
    }
    if (s.size() == best) words.push_back(s.word());
    return true;
  });
  out.census = std::move(census);
  out.nodes = driver.nodes;
  out.budget_exhausted = driver.exhausted_budget;
  std::sort(words.begin(), words.end());
  out.maximal_words = std::move(words);
  if (!driver.exhausted_budget) out.max_length = best;
  return out;
}

bool rext_approx(const Word& w, const Constraint& c, std::size_t depth) {
  SearchState st(c);
  if (!st.push_all(w)) return false;
  return extend_right(st, c, depth);
}

bool ext_approx(const Word& w, const Constraint& c, std::size_t depth) {
  SearchState st(c);
  if (!st.push_all(w)) return false;
  Constraint rc = reversed_constraint(c);
  return extend_both(st, c, rc, depth, depth);
}

std::optional<Word> connect(const Word& u, const Word& v, const Constraint& c,
                            std::size_t max_middle, std::size_t depth) {
  for (std::size_t mid_len = 0; mid_len <= max_middle; ++mid_len) {
    SearchState st(c);
    if (!st.push_all(u)) return std::nullopt;
    std::optional<Word> found;
    // Lexicographic DFS over middles of the given length.
    auto rec = [&](auto&& self, std::size_t remaining) -> bool {
      if (remaining == 0) {
        std::size_t pushed = 0;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i, ++pushed) {
          if (!st.push(v[i])) {
            ok = false;
            break;
          }
        }
        if (ok && ext_approx(Word(st.letters(), c.alphabet_size), c, depth)) {
          const auto& all = st.letters();
          std::vector<Letter> mid(all.begin() + u.size(), all.end() - v.size());
          found = Word(std::move(mid), c.alphabet_size);
        }
        for (std::size_t i = 0; i < (ok ? v.size() : pushed); ++i) st.pop();
        return found.has_value();
      }
      for (Letter a = 0; a < c.alphabet_size; ++a) {
        if (!st.push(a)) continue;
        bool done = self(self, remaining - 1);
        st.pop();
        if (done) return true;
      }
      return false;
    };
    rec(rec, mid_len);
    if (found) return found;
  }
  return std::nullopt;
}

Word split_letter(const Word& u, const Word& v) {
  if (u.alphabet_size() > 3) throw std::invalid_argument("split_letter takes a ternary word");
  for (Letter x : v.letters())
    if (x != 2 && x != 3) throw std::invalid_argument("replacement word must be over {2,3}");
  std::vector<Letter> out;
  out.reserve(u.size());
  std::size_t next = 0;
  for (Letter a : u.letters()) {
    if (a == 2) {
      if (next >= v.size()) throw std::domain_error("replacement word too short");
      out.push_back(v[next++]);
    } else {
      out.push_back(a);
    }
  }
  return Word(std::move(out), 4);
}

Word greedy_recurrent_builder(const Constraint& c, int steps, std::size_t depth,
                              std::size_t max_middle) {
  Word u = Word::from_digits("0", c.alphabet_size);
  if (!admissible(u, c)) throw std::invalid_argument("seed word 0 is not admissible");
  constexpr std::size_t kMaxCandidateLength = 24;
  for (int step = 0; step < steps; ++step) {
    std::optional<Word> target;
    for (std::size_t len = 1; len <= kMaxCandidateLength && !target; ++len) {
      SearchState st(c);
      DfsDriver driver{c, kDefaultNodeBudget};
      driver.explore(st, len, [&](SearchState& s) {
        if (target) return false;
        if (s.size() < len) return true;
        Word cand = s.word();
        if (!u.contains_factor(cand) && ext_approx(cand, c, depth)) target = cand;
        return false;
      });
    }
    if (!target) break;
    std::optional<Word> mid = connect(u, *target, c, max_middle, depth);
    if (!mid) break;  // connector search failed; return the word built so far
    u = concat(concat(u, *mid), *target);
  }
  return u;
}

}  // namespace cow
