#include "cow/codewalk.hpp"

#include <algorithm>
#include <stdexcept>

#include "cow/generators.hpp"
#include "cow/repetition.hpp"

namespace cow {

namespace {

Letter third_letter(Letter a, Letter b) { return static_cast<Letter>(3 - a - b); }

void require_square_free(const Word& w) {
  PowerCheck check = check_power_free(w, PowerBound{make_rational(2), false});
  if (!check.pass) throw std::domain_error("word is not square-free");
}

bool square_ends_at(const std::vector<Letter>& w, std::size_t pos) {
  for (std::size_t p = 1; 2 * p <= pos + 1; ++p) {
    bool match = true;
    for (std::size_t x = 0; x < p; ++x)
      if (w[pos - x] != w[pos - p - x]) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

}  // namespace

JumpVertex JumpVertex::from_word(const Word& aba) {
  if (aba.size() != 3 || aba.alphabet_size() > 3 || aba[0] != aba[2] || aba[0] == aba[1])
    throw std::invalid_argument("a jump vertex is a ternary word aba");
  return JumpVertex{aba[0], aba[1]};
}

JumpVertex JumpVertex::parse(std::string_view aba) {
  return from_word(Word::from_digits(aba, 3));
}

Word JumpVertex::to_word() const {
  return Word(std::vector<Letter>{outer, inner, outer}, 3);
}

std::string JumpVertex::str() const { return to_word().digits(); }

JumpVertex jump_step(JumpVertex v, Letter weight) {
  if (v.outer > 2 || v.inner > 2 || v.outer == v.inner)
    throw std::invalid_argument("invalid jump vertex");
  switch (weight) {
    case 1:
      return JumpVertex{v.outer, third_letter(v.outer, v.inner)};
    case 2:
      return JumpVertex{third_letter(v.outer, v.inner), v.inner};
    case 3:
      return JumpVertex{v.inner, v.outer};
    default:
      throw std::invalid_argument("codewalk weights are 1, 2 or 3");
  }
}

std::span<const Letter> Codewalk::walk_weights() const {
  std::span<const Letter> s{weights};
  if (head_marked) s = s.subspan(1);
  if (tail_marked) s = s.subspan(0, s.size() - 1);
  return s;
}

std::string Codewalk::str() const {
  std::string s;
  if (head_marked) {
    s.push_back('<');
    s.push_back(static_cast<char>('0' + weights.front()));
    s.push_back(':');
  }
  for (Letter w : weights) s.push_back(static_cast<char>('0' + w));
  if (tail_marked) {
    s.push_back(':');
    s.push_back(static_cast<char>('0' + weights.back()));
    s.push_back('>');
  }
  return s;
}

Codewalk Codewalk::parse(std::string_view text) {
  Codewalk c;
  std::optional<Letter> head_len, tail_len;
  if (!text.empty() && text.front() == '<') {
    if (text.size() < 3 || text[2] != ':') throw std::invalid_argument("malformed head mark");
    head_len = static_cast<Letter>(text[1] - '0');
    c.head_marked = true;
    text.remove_prefix(3);
  }
  if (!text.empty() && text.back() == '>') {
    if (text.size() < 3 || text[text.size() - 3] != ':')
      throw std::invalid_argument("malformed tail mark");
    tail_len = static_cast<Letter>(text[text.size() - 2] - '0');
    c.tail_marked = true;
    text.remove_suffix(3);
  }
  for (char ch : text) {
    if (ch < '1' || ch > '3') throw std::invalid_argument("codewalk weights are digits 1..3");
    c.weights.push_back(static_cast<Letter>(ch - '0'));
  }
  if (c.head_marked && (c.weights.empty() || c.weights.front() != *head_len))
    throw std::invalid_argument("head mark disagrees with the first weight");
  if (c.tail_marked && (c.weights.empty() || c.weights.back() != *tail_len))
    throw std::invalid_argument("tail mark disagrees with the last weight");
  if (c.head_marked && c.tail_marked && c.weights.size() < 2)
    throw std::invalid_argument("marked codewalk too short");
  return c;
}

std::vector<Jump> find_jumps(const Word& w) {
  if (w.alphabet_size() > 3) throw std::invalid_argument("jumps live in ternary words");
  require_square_free(w);
  std::vector<Jump> jumps;
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] == w[i + 2] && w[i] != w[i + 1])
      jumps.push_back(Jump{i, JumpVertex{w[i], w[i + 1]}});
  return jumps;
}

Codewalk encode(const Word& w) {
  std::vector<Jump> jumps = find_jumps(w);
  if (jumps.empty()) throw NoJumpError{};
  Codewalk c;
  std::size_t head = jumps.front().position;
  if (head > 0) {
    c.head_marked = true;
    c.weights.push_back(static_cast<Letter>(head));
  }
  for (std::size_t i = 0; i + 1 < jumps.size(); ++i) {
    std::size_t gap = jumps[i + 1].position - jumps[i].position;
    c.weights.push_back(static_cast<Letter>(gap - 1));
  }
  std::size_t tail = w.size() - (jumps.back().position + 3);
  if (tail > 0) {
    c.tail_marked = true;
    c.weights.push_back(static_cast<Letter>(tail));
  }
  return c;
}

Word decode(const Codewalk& c, JumpVertex start) {
  if (start.outer > 2 || start.inner > 2 || start.outer == start.inner)
    throw std::invalid_argument("invalid start vertex");
  for (Letter w : c.weights)
    if (w < 1 || w > 3) throw std::invalid_argument("codewalk weights are 1, 2 or 3");
  if ((c.head_marked || c.tail_marked) && c.weights.empty())
    throw std::invalid_argument("marked codewalk without weights");
  if (c.head_marked && c.tail_marked && c.weights.size() < 2)
    throw std::invalid_argument("marked codewalk too short");

  std::vector<Letter> body{start.outer, start.inner, start.outer};
  JumpVertex cur = start;
  for (Letter w : c.walk_weights()) {
    JumpVertex next = jump_step(cur, w);
    Letter a = cur.outer, b = cur.inner, t = third_letter(a, b);
    switch (w) {
      case 1:
        body.push_back(t);
        body.push_back(a);
        break;
      case 2:
        body.push_back(t);
        body.push_back(b);
        body.push_back(t);
        break;
      case 3:
        body.push_back(t);
        body.push_back(b);
        body.push_back(a);
        body.push_back(b);
        break;
    }
    cur = next;
  }

  // Forced tail letters: the unique letter creating neither a square of
  // length 2 nor a jump; a longer square means no square-free continuation.
  for (std::size_t t = 0; t < c.tail_edge_length(); ++t) {
    Letter prev = body[body.size() - 1];
    Letter before = body[body.size() - 2];
    Letter next = third_letter(prev, before);
    body.push_back(next);
    if (square_ends_at(body, body.size() - 1))
      throw std::runtime_error("codewalk decode: no square-free tail continuation");
  }

  // Forced head letters, reconstructed leftward one at a time; prepending to
  // the word is appending to its reverse, and jumps and squares are
  // reversal-invariant.
  if (c.head_edge_length() > 0) {
    std::vector<Letter> rev(body.rbegin(), body.rend());
    for (std::size_t t = 0; t < c.head_edge_length(); ++t) {
      Letter next = third_letter(rev[rev.size() - 1], rev[rev.size() - 2]);
      rev.push_back(next);
      if (square_ends_at(rev, rev.size() - 1))
        throw std::runtime_error("codewalk decode: no square-free head continuation");
    }
    body.assign(rev.rbegin(), rev.rend());
  }
  return Word(std::move(body), 3);
}

Word decode_canonical(const Codewalk& c) {
  std::optional<Word> best;
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b) {
      if (a == b) continue;
      Word w = decode(c, JumpVertex{a, b});
      if (!best || w < *best) best = w;
    }
  return *best;
}

bool is_closed(std::span<const Letter> weights) {
  if (weights.empty()) return true;
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b) {
      if (a == b) continue;
      JumpVertex v{a, b};
      JumpVertex cur = v;
      for (Letter w : weights) cur = jump_step(cur, w);
      if (!(cur == v)) return false;
    }
  return true;
}

bool is_closed(const Codewalk& c) {
  if (c.head_marked || c.tail_marked) return false;
  return is_closed(std::span<const Letter>{c.weights});
}

CodewalkCheck sf_codewalk_check(const Codewalk& c) {
  const std::vector<Letter>& w = c.weights;
  std::string text;
  for (Letter x : w) text.push_back(static_cast<char>('0' + x));
  static const char* kForbidden[] = {"11", "222", "223", "322", "333"};
  for (const char* f : kForbidden) {
    auto pos = text.find(f);
    if (pos != std::string::npos)
      return CodewalkCheck{false, std::string("forbidden factor ") + f, pos};
  }
  // Condition (b): no factor v a b v with v nonempty and vab closed.
  std::size_t n = w.size();
  for (std::size_t vlen = 1; vlen * 2 + 2 <= n; ++vlen) {
    if ((vlen + 2) % 2 != 0) continue;  // closed walks have even length
    for (std::size_t i = 0; i + 2 * vlen + 2 <= n; ++i) {
      std::span<const Letter> v1{w.data() + i, vlen};
      std::span<const Letter> v2{w.data() + i + vlen + 2, vlen};
      if (!std::equal(v1.begin(), v1.end(), v2.begin())) continue;
      if (is_closed(std::span<const Letter>{w.data() + i, vlen + 2}))
        return CodewalkCheck{false, "square of closed codewalk " + text.substr(i, vlen + 2), i};
    }
  }
  return CodewalkCheck{true, "", 0};
}

std::pair<Codewalk, Codewalk> build_ab(int level) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  if (level > 12) throw std::invalid_argument("A/B codewalks above level 12 exceed memory (4^i letters)");
  std::vector<Letter> a{2, 1, 2};
  std::vector<Letter> b{3};
  for (int i = 0; i < level; ++i) {
    std::vector<Letter> na;
    na.reserve(2 * b.size() + 3 * a.size());
    na.insert(na.end(), b.begin(), b.end());
    na.insert(na.end(), b.begin(), b.end());
    na.insert(na.end(), a.begin(), a.end());
    na.insert(na.end(), a.begin(), a.end());
    na.insert(na.end(), a.begin(), a.end());
    std::vector<Letter> nb;
    nb.reserve(2 * b.size() + a.size());
    nb.insert(nb.end(), b.begin(), b.end());
    nb.insert(nb.end(), b.begin(), b.end());
    nb.insert(nb.end(), a.begin(), a.end());
    a = std::move(na);
    b = std::move(nb);
  }
  return {Codewalk{std::move(a), false, false}, Codewalk{std::move(b), false, false}};
}

Word bonacci(int variant, std::size_t n) {
  if (variant != 12 && variant != 13) throw std::invalid_argument("bonacci variant is 12 or 13");
  if (n == 0) return Word({}, 3);
  std::size_t weights_needed = n / 2 + 2;
  Word fib = morphisms::phi().fixed_point_prefix(0, weights_needed);
  Codewalk c;
  c.weights.reserve(fib.size());
  Letter zero_image = variant == 12 ? 2 : 3;
  for (Letter x : fib.letters()) c.weights.push_back(x == 0 ? zero_image : 1);
  return decode(c, JumpVertex{0, 1}).prefix(n);
}

Word eta_word(std::size_t n) { return morphisms::eta().fixed_point_prefix(0, n); }

}  // namespace cow
