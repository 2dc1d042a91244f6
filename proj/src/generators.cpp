#include "cow/generators.hpp"

#include <stdexcept>

#include "cow/codewalk.hpp"

namespace cow::morphisms {

namespace {
Morphism make(std::initializer_list<const char*> images, int target) {
  std::vector<Word> imgs;
  for (const char* s : images) imgs.push_back(Word::from_digits(s, target));
  return Morphism(std::move(imgs), target);
}
}  // namespace

Morphism mu() { return make({"01", "10"}, 2); }
Morphism theta() { return make({"012", "02", "1"}, 3); }
Morphism gamma() { return make({"01", "2", "02"}, 3); }
Morphism tau() { return make({"0", "01", "011"}, 2); }
Morphism eta() { return make({"010", "011"}, 2); }
Morphism phi() { return make({"01", "0"}, 2); }

Morphism g() {
  return make({"011001001101001011010011001",
               "011001001101001011001101001",
               "011001001101001100101101001"},
              2);
}

Morphism twisted_preimage() { return make({"02", "21", "12"}, 3); }

Coding xi() { return Coding({2, 1}, 3); }
Coding twisted_coding() { return Coding({0, 1, 0}, 2); }

}  // namespace cow::morphisms

namespace cow {

namespace {

Word tau_g(std::size_t n) {
  // tau does not shrink, so a length-n prefix of G suffices.
  Word g_prefix = morphisms::gamma().fixed_point_prefix(0, n);
  return morphisms::tau().apply(g_prefix).prefix(n);
}

Word g_of_t(std::size_t n) {
  // g is 27-uniform; images are emitted block by block.
  std::size_t blocks = n / 27 + 1;
  Word t_prefix = morphisms::theta().fixed_point_prefix(0, blocks);
  return morphisms::g().apply(t_prefix).prefix(n);
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {
      "tm", "twisted_tm", "ternary_thue", "fibonacci", "f12",
      "f13", "G", "tauG", "gT", "eta"};
  return names;
}

Word generate(std::string_view name, std::size_t n) {
  if (name == "tm") return morphisms::mu().fixed_point_prefix(0, n);
  if (name == "twisted_tm") {
    Word pre = morphisms::twisted_preimage().fixed_point_prefix(0, n);
    return recode(pre, morphisms::twisted_coding());
  }
  if (name == "ternary_thue") return morphisms::theta().fixed_point_prefix(0, n);
  if (name == "fibonacci") return morphisms::phi().fixed_point_prefix(0, n);
  if (name == "f12") return bonacci(12, n);
  if (name == "f13") return bonacci(13, n);
  if (name == "G") return morphisms::gamma().fixed_point_prefix(0, n);
  if (name == "tauG") return tau_g(n);
  if (name == "gT") return g_of_t(n);
  if (name == "eta") return eta_word(n);
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

Word generate(const GeneratorSpec& spec, std::size_t n) { return generate(spec.name, n); }

Word twisted_tm_block_form(std::size_t n) {
  // t' = 00 mu(1) mu^2(0) mu^3(1) mu^4(0) ...
  Morphism mu = morphisms::mu();
  std::vector<Letter> letters = {0, 0};
  Word block0 = Word::from_digits("0");
  Word block1 = Word::from_digits("1");
  for (int k = 1; letters.size() < n; ++k) {
    block0 = mu.apply(block0);
    block1 = mu.apply(block1);
    const Word& block = (k % 2 == 1) ? block1 : block0;
    letters.insert(letters.end(), block.letters().begin(), block.letters().end());
  }
  letters.resize(std::min<std::size_t>(letters.size(), n));
  return Word(std::move(letters), 2);
}

Word twisted_tm_digit_parity(std::size_t n) {
  // Letter i counts the 0's, mod 2, in the binary expansion of i; the
  // expansion of 0 is empty.
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    int zeros = 0;
    for (std::size_t v = i; v > 0; v >>= 1) zeros += 1 - static_cast<int>(v & 1);
    letters.push_back(static_cast<Letter>(zeros & 1));
  }
  return Word(std::move(letters), 2);
}

}  // namespace cow
