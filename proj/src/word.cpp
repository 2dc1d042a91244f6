#include "cow/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cow/rational.hpp"

namespace cow {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 2 || alphabet_size_ > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in 2..5");
  for (Letter a : letters_)
    if (a >= alphabet_size_) throw std::invalid_argument("letter out of alphabet range");
}

Word Word::from_digits(std::string_view digits, int alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  int max_digit = 0;
  for (char ch : digits) {
    if (ch < '0' || ch >= '0' + kMaxAlphabet)
      throw std::invalid_argument("word literals use digits '0'..'4'");
    int d = ch - '0';
    max_digit = std::max(max_digit, d);
    letters.push_back(static_cast<Letter>(d));
  }
  if (alphabet_size == 0) alphabet_size = std::max(2, max_digit + 1);
  return Word(std::move(letters), alphabet_size);
}

std::string Word::digits() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(static_cast<char>('0' + a));
  return s;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw std::out_of_range("subword out of range");
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len),
              alphabet_size_);
}

Word Word::prefix(std::size_t n) const { return subword(0, std::min(n, size())); }

Word Word::suffix_from(std::size_t pos) const { return subword(pos, size() - pos); }

bool Word::is_prefix_of(const Word& other) const {
  return size() <= other.size() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

bool Word::contains_factor(const Word& factor) const {
  if (factor.empty()) return true;
  return std::search(letters_.begin(), letters_.end(), factor.letters_.begin(),
                     factor.letters_.end()) != letters_.end();
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = std::lexicographical_compare_three_way(
          letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end());
      c != std::strong_ordering::equal)
    return c;
  return alphabet_size_ <=> other.alphabet_size_;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(letters), std::max(a.alphabet_size(), b.alphabet_size()));
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(letters), w.alphabet_size());
}

Word complement(const Word& w) {
  if (w.alphabet_size() != 2) throw std::invalid_argument("complement is defined for binary words");
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter a : w.letters()) letters.push_back(static_cast<Letter>(1 - a));
  return Word(std::move(letters), 2);
}

Coding::Coding(std::vector<Letter> map, int target_alphabet)
    : map_(std::move(map)), target_alphabet_(target_alphabet) {
  if (map_.empty() || map_.size() > kMaxAlphabet)
    throw std::invalid_argument("coding source alphabet must be in 1..5");
  for (Letter a : map_)
    if (a >= target_alphabet_) throw std::invalid_argument("coding image out of range");
}

Letter Coding::apply(Letter a) const {
  if (a >= map_.size()) throw std::domain_error("letter out of coding domain");
  return map_[a];
}

Word recode(const Word& w, const Coding& c) {
  if (w.alphabet_size() > c.source_alphabet())
    throw std::domain_error("coding not total on the word's alphabet");
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter a : w.letters()) letters.push_back(c.apply(a));
  return Word(std::move(letters), c.target_alphabet());
}

std::vector<Coding> bijective_codings(int k) {
  if (k < 2 || k > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in 2..5");
  std::vector<Letter> perm(k);
  std::iota(perm.begin(), perm.end(), Letter{0});
  std::vector<Coding> out;
  do {
    out.emplace_back(perm, k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Word canonical_image(const Word& w) {
  Word best = w;
  for (const Coding& c : bijective_codings(w.alphabet_size())) {
    Word img = recode(w, c);
    if (img < best) best = img;
  }
  return best;
}

Morphism::Morphism(std::vector<Word> images, int target_alphabet)
    : images_(std::move(images)), target_alphabet_(target_alphabet) {
  if (images_.empty() || images_.size() > kMaxAlphabet)
    throw std::invalid_argument("morphism source alphabet must be in 1..5");
  for (const Word& img : images_) {
    if (img.empty()) throw std::invalid_argument("erasing morphisms are not supported");
    for (Letter a : img.letters())
      if (a >= target_alphabet_) throw std::invalid_argument("image letter out of range");
  }
}

const Word& Morphism::image(Letter a) const {
  if (a >= images_.size()) throw std::domain_error("letter out of morphism domain");
  return images_[a];
}

bool Morphism::prolongable(Letter a) const {
  if (a >= images_.size()) return false;
  const Word& img = images_[a];
  return img.size() >= 2 && img[0] == a;
}

Word Morphism::apply(const Word& w) const {
  if (w.alphabet_size() > source_alphabet())
    throw std::domain_error("word alphabet exceeds morphism domain");
  std::size_t total = 0;
  for (Letter a : w.letters()) total += image(a).size();
  std::vector<Letter> letters;
  letters.reserve(total);
  for (Letter a : w.letters()) {
    auto img = image(a).letters();
    letters.insert(letters.end(), img.begin(), img.end());
  }
  return Word(std::move(letters), target_alphabet_);
}

Word Morphism::fixed_point_prefix(Letter a, std::size_t n) const {
  if (!prolongable(a)) throw std::invalid_argument("morphism not prolongable at this letter");
  if (target_alphabet_ != source_alphabet())
    throw std::invalid_argument("fixed point needs matching alphabets");
  Word cur(std::vector<Letter>{a}, target_alphabet_);
  while (cur.size() < n) {
    Word next = apply(cur);
    if (next.size() == cur.size())
      throw std::invalid_argument("fixed point does not grow");
    cur = std::move(next);
  }
  return cur.prefix(n);
}

ParikhVector parikh(const Word& w) {
  ParikhVector counts(w.alphabet_size(), BigInt{0});
  for (Letter a : w.letters()) ++counts[a];
  return counts;
}

BigInt norm(const ParikhVector& v) {
  BigInt s = 0;
  for (const BigInt& x : v) s += x;
  return s;
}

IntMatrix morphism_matrix(const Morphism& m) {
  IntMatrix rows;
  rows.reserve(m.source_alphabet());
  for (int a = 0; a < m.source_alphabet(); ++a) {
    ParikhVector row(m.target_alphabet(), BigInt{0});
    for (Letter b : m.image(static_cast<Letter>(a)).letters()) ++row[b];
    rows.push_back(std::move(row));
  }
  return rows;
}

ParikhVector vec_mat_mul(const ParikhVector& v, const IntMatrix& a) {
  if (a.empty() || v.size() != a.size()) throw std::invalid_argument("dimension mismatch");
  ParikhVector out(a[0].size(), BigInt{0});
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * a[i][j];
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("dimension mismatch");
  IntMatrix out(a.size(), std::vector<BigInt>(b[0].size(), BigInt{0}));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

IntMatrix identity_matrix(std::size_t k) {
  IntMatrix out(k, std::vector<BigInt>(k, BigInt{0}));
  for (std::size_t i = 0; i < k; ++i) out[i][i] = 1;
  return out;
}

}  // namespace cow
