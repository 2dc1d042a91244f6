#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cow/rational.hpp"

namespace cow {

inline constexpr int kMaxAlphabet = 5;

using Letter = std::uint8_t;

// A finite word over the alphabet {0, ..., k-1}, k in 2..5. Positions are
// 0-indexed everywhere. Values are immutable after construction and safe to
// share across threads.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  // Parses a string of digits '0'..'4'. With alphabet_size == 0 the alphabet
  // is inferred as 1 + max digit (at least 2).
  static Word from_digits(std::string_view digits, int alphabet_size = 0);

  int alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  std::string digits() const;

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;
  bool is_prefix_of(const Word& other) const;
  bool contains_factor(const Word& factor) const;

  bool operator==(const Word&) const = default;
  // Lexicographic on letters, then alphabet size; gives radix order when
  // combined with the length comparison done by callers.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 2;
};

Word concat(const Word& a, const Word& b);
Word reverse(const Word& w);
// Flips every letter of a binary word.
Word complement(const Word& w);

// A letter-to-letter morphism.
class Coding {
 public:
  Coding(std::vector<Letter> map, int target_alphabet);
  int source_alphabet() const { return static_cast<int>(map_.size()); }
  int target_alphabet() const { return target_alphabet_; }
  Letter apply(Letter a) const;

 private:
  std::vector<Letter> map_;
  int target_alphabet_;
};

Word recode(const Word& w, const Coding& c);

// All k! bijective codings of {0..k-1}, in lexicographic order of their
// letter maps.
std::vector<Coding> bijective_codings(int k);

// Lexicographically least image of w under bijective codings; idempotent.
Word canonical_image(const Word& w);

class Morphism {
 public:
  Morphism(std::vector<Word> images, int target_alphabet);

  int source_alphabet() const { return static_cast<int>(images_.size()); }
  int target_alphabet() const { return target_alphabet_; }
  const Word& image(Letter a) const;

  // True iff image(a) starts with a and has length >= 2.
  bool prolongable(Letter a) const;

  Word apply(const Word& w) const;

  // Length-n prefix of the infinite fixed point starting with a, computed by
  // iterating the morphism; consistent across n (prefix property).
  Word fixed_point_prefix(Letter a, std::size_t n) const;

 private:
  std::vector<Word> images_;
  int target_alphabet_;
};

using ParikhVector = std::vector<BigInt>;
using IntMatrix = std::vector<std::vector<BigInt>>;

ParikhVector parikh(const Word& w);
BigInt norm(const ParikhVector& v);

// Row i is parikh(image(i)); satisfies parikh(m(w)) = parikh(w) * matrix.
IntMatrix morphism_matrix(const Morphism& m);

ParikhVector vec_mat_mul(const ParikhVector& v, const IntMatrix& a);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t k);

}  // namespace cow
