#include <doctest.h>

#include <random>

#include "cow/generators.hpp"
#include "cow/word.hpp"

using namespace cow;

namespace {

Word rand_word(std::mt19937& rng, int k, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, k - 1);
  std::vector<Letter> letters(len_dist(rng));
  for (Letter& a : letters) a = static_cast<Letter>(letter_dist(rng));
  return Word(std::move(letters), k);
}

}  // namespace

TEST_CASE("word literals") {
  Word w = Word::from_digits("0110");
  CHECK(w.alphabet_size() == 2);
  CHECK(w.size() == 4);
  CHECK(w.digits() == "0110");
  CHECK(Word::from_digits("012").alphabet_size() == 3);
  CHECK(Word::from_digits("01", 4).alphabet_size() == 4);
  CHECK_THROWS_AS(Word::from_digits("09"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_digits("03", 2), std::invalid_argument);
  CHECK(Word::from_digits("").empty());
}

TEST_CASE("morphism application") {
  Morphism mu = morphisms::mu();
  CHECK(mu.apply(Word::from_digits("01")).digits() == "0110");
  CHECK(morphisms::theta().apply(Word::from_digits("012")).digits() == "012021");
  CHECK(morphisms::gamma().apply(Word::from_digits("012")).digits() == "01202");
  CHECK_THROWS_AS(mu.apply(Word::from_digits("012")), std::domain_error);
}

TEST_CASE("fixed point prefixes match the displayed words") {
  CHECK(morphisms::mu().fixed_point_prefix(0, 16).digits() == "0110100110010110");
  CHECK(morphisms::gamma().fixed_point_prefix(0, 21).digits() == "012020102012010201202");
  CHECK(morphisms::theta().fixed_point_prefix(0, 12).digits() == "012021012102");
  // tau(0) = 0 does not grow and theta(1) = 02 does not start with 1.
  CHECK_THROWS_AS(morphisms::tau().fixed_point_prefix(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(morphisms::theta().fixed_point_prefix(1, 4), std::invalid_argument);
  // mu is prolongable at 1 as well; the fixed point is the complement of t.
  CHECK(morphisms::mu().fixed_point_prefix(1, 16) == complement(generate("tm", 16)));
}

TEST_CASE("registry golden prefixes") {
  CHECK(generate("tm", 16).digits() == "0110100110010110");
  CHECK(generate("twisted_tm", 39).digits() == "001001101001011001101001100101101001011");
  CHECK(generate("ternary_thue", 48).digits() ==
        "012021012102012021020121012021012102012101202102");
  CHECK(generate("G", 21).digits() == "012020102012010201202");
  CHECK(generate("tauG", 43).digits() == "0010110011001001100101100100110010110011001");
  CHECK(generate("gT", 27).digits() == "011001001101001011010011001");
  CHECK(generate("f12", 2).digits() == "01");
  CHECK_THROWS_AS(generate("nope", 4), std::invalid_argument);
}

TEST_CASE("generator prefix stability") {
  for (const std::string& name : generator_names()) {
    Word small = generate(name, 37);
    Word big = generate(name, 96);
    CHECK_MESSAGE(small.is_prefix_of(big), "prefix stability failed for ", name);
  }
}

TEST_CASE("twisted thue-morse routes agree") {
  std::size_t n = 1 << 12;
  Word registry = generate("twisted_tm", n);
  CHECK(registry == twisted_tm_block_form(n));
  CHECK(registry == twisted_tm_digit_parity(n));
}

TEST_CASE("parikh vectors") {
  ParikhVector p = parikh(Word::from_digits("0110"));
  CHECK(p == ParikhVector{2, 2});
  CHECK(parikh(morphisms::gamma().image(0)) == ParikhVector{1, 1, 0});
  CHECK(parikh(Word::from_digits("", 3)) == ParikhVector{0, 0, 0});
  CHECK(norm(parikh(Word::from_digits("01202"))) == 5);
}

TEST_CASE("morphism matrices") {
  IntMatrix a = morphism_matrix(morphisms::gamma());
  CHECK(a == IntMatrix{{1, 1, 0}, {0, 0, 1}, {1, 0, 1}});
  CHECK(morphism_matrix(morphisms::tau()) == IntMatrix{{1, 0}, {1, 1}, {1, 2}});
  Morphism identity_coding({Word::from_digits("0", 2), Word::from_digits("1", 2)}, 2);
  CHECK(morphism_matrix(identity_coding) == identity_matrix(2));
}

TEST_CASE("parikh/matrix homomorphism on random words") {
  std::mt19937 rng(7);
  std::vector<Morphism> ms = {morphisms::mu(), morphisms::theta(), morphisms::gamma(),
                              morphisms::tau(), morphisms::g()};
  for (const Morphism& m : ms) {
    IntMatrix a = morphism_matrix(m);
    for (int trial = 0; trial < 200; ++trial) {
      Word w = rand_word(rng, m.source_alphabet(), 60);
      CHECK(parikh(m.apply(w)) == vec_mat_mul(parikh(w), a));
    }
  }
}

TEST_CASE("codings and complement") {
  CHECK(complement(Word::from_digits("0110")).digits() == "1001");
  CHECK(recode(Word::from_digits("01001"), morphisms::xi()).digits() == "21221");
  Coding merge({0, 1, 0}, 2);
  CHECK(recode(Word::from_digits("0212"), merge).digits() == "0010");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = rand_word(rng, 2, 40);
    CHECK(complement(complement(w)) == w);
  }
}

TEST_CASE("twisted word is the coding of the preimage fixed point") {
  Word pre = morphisms::twisted_preimage().fixed_point_prefix(0, 512);
  CHECK(recode(pre, morphisms::twisted_coding()) == generate("twisted_tm", 512));
}

TEST_CASE("bijective codings") {
  CHECK(bijective_codings(2).size() == 2);
  CHECK(bijective_codings(3).size() == 6);
  // Duplicate-free: images of a probe word are pairwise distinct.
  Word probe = Word::from_digits("0120", 3);
  std::set<std::string> images;
  for (const Coding& c : bijective_codings(3)) images.insert(recode(probe, c).digits());
  CHECK(images.size() == 6);
}

TEST_CASE("canonical image") {
  CHECK(canonical_image(Word::from_digits("212", 3)).digits() == "010");
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = rand_word(rng, 3, 24);
    Word c = canonical_image(w);
    CHECK(canonical_image(c) == c);
    CHECK(c <= w);
  }
}

TEST_CASE("g images differ only in the block at position 15") {
  Morphism g = morphisms::g();
  for (int a = 0; a < 3; ++a) {
    CHECK(g.image(static_cast<Letter>(a)).size() == 27);
    CHECK(g.image(static_cast<Letter>(a)).prefix(15) == g.image(0).prefix(15));
    CHECK(g.image(static_cast<Letter>(a)).suffix_from(23) == g.image(0).suffix_from(23));
  }
}
