#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cow/word.hpp"

namespace cow {

// A jump is a ternary factor aba; six vertices in total.
struct JumpVertex {
  Letter outer = 0;  // a
  Letter inner = 1;  // b

  static JumpVertex from_word(const Word& aba);
  static JumpVertex parse(std::string_view aba);
  Word to_word() const;
  std::string str() const;
  bool operator==(const JumpVertex&) const = default;
};

struct Jump {
  std::size_t position = 0;
  JumpVertex vertex;
  bool operator==(const Jump&) const = default;
};

// The weight-w neighbor of a vertex in the jump graph; every weight acts as
// an involution, so a walk is determined by its start and weight sequence.
JumpVertex jump_step(JumpVertex v, Letter weight);

// The codewalk of a square-free ternary word: the weight sequence of the
// induced walk in the jump graph. When the word starts (ends) before (after)
// its first (last) jump, the hanging-edge length is stored as the first
// (last) weight and the corresponding mark is set, matching the marked
// letters of the text format "<2:2212...".
struct Codewalk {
  std::vector<Letter> weights;  // over {1,2,3}
  bool head_marked = false;
  bool tail_marked = false;

  std::size_t head_edge_length() const { return head_marked ? weights.front() : 0; }
  std::size_t tail_edge_length() const { return tail_marked ? weights.back() : 0; }
  // The jump-to-jump weights, excluding marked hanging edges.
  std::span<const Letter> walk_weights() const;

  std::string str() const;
  static Codewalk parse(std::string_view text);
  bool operator==(const Codewalk&) const = default;
};

class NoJumpError : public std::runtime_error {
 public:
  NoJumpError() : std::runtime_error("word has no jumps") {}
};

// All occurrences of jumps, sorted by position; consecutive gaps are 2..4.
// Throws std::domain_error if the word is not square-free.
std::vector<Jump> find_jumps(const Word& w);

// Throws NoJumpError if the word has no jump, std::domain_error on squares.
Codewalk encode(const Word& w);

// The unique square-free word with codewalk c whose first jump is `start`.
// Hanging-edge letters are reconstructed one at a time; at every step
// exactly one letter avoids both a square and a premature jump, and this
// uniqueness is asserted at runtime.
Word decode(const Codewalk& c, JumpVertex start);

// Without a start vertex: the lexicographically least word over all six
// starts (the canonical representative of the coding class).
Word decode_canonical(const Codewalk& c);

// True iff the induced walk returns to its start vertex; checked over all
// six start vertices. Marked codewalks are never closed.
bool is_closed(std::span<const Letter> weights);
bool is_closed(const Codewalk& c);

struct CodewalkCheck {
  bool sufficient_pass = true;
  std::string reason;        // violating factor on reject
  std::size_t position = 0;  // its position
};

// Sufficient square-freeness conditions on a codewalk: (a) no factors 11,
// 222, 223, 322, 333; (b) no factors vabv with v nonempty and vab closed.
// sufficient_pass implies the decoded word is square-free.
CodewalkCheck sf_codewalk_check(const Codewalk& c);

// A_0 = 212, B_0 = 3; A_{i+1} = B_i B_i A_i A_i A_i, B_{i+1} = B_i B_i A_i.
// Lengths grow as 4^i; levels above 12 are refused.
std::pair<Codewalk, Codewalk> build_ab(int level);

// The 1-2-bonacci (variant 12) and 1-3-bonacci (variant 13) words: decode of
// the recoded Fibonacci codewalk, starting with 01.
Word bonacci(int variant, std::size_t n);

// Fixed point of eta: 0 -> 010, 1 -> 011.
Word eta_word(std::size_t n);

}  // namespace cow
