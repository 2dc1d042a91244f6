#include <doctest.h>

#include <random>

#include "cow/complexity.hpp"
#include "cow/generators.hpp"
#include "cow/repetition.hpp"
#include "cow/suffix_automaton.hpp"
#include "oracles.hpp"

using namespace cow;

namespace {

Word rand_word(std::mt19937& rng, int k, std::size_t len) {
  std::uniform_int_distribution<int> letter_dist(0, k - 1);
  std::vector<Letter> letters(len);
  for (Letter& a : letters) a = static_cast<Letter>(letter_dist(rng));
  return Word(std::move(letters), k);
}

// u1 = 00 mu(1) mu^2(t)
Word make_u1(std::size_t n) {
  Morphism mu = morphisms::mu();
  Word t = generate("tm", n);
  return concat(Word::from_digits("0010"), mu.apply(mu.apply(t))).prefix(n);
}

// u2 = 0 mu(00) mu^2(t[2..]); the mu^2-argument starts 101... at the first
// occurrence of 101 in t.
Word make_u2(std::size_t n) {
  Morphism mu = morphisms::mu();
  Word tail = generate("tm", n + 2).suffix_from(2);
  return concat(Word::from_digits("00101"), mu.apply(mu.apply(tail))).prefix(n);
}

}  // namespace

TEST_CASE("profile of a small word") {
  ComplexityProfile p = profile(Word::from_digits("0102"), 4);
  CHECK(p.values == std::vector<std::int64_t>{1, 3, 3, 2, 1});
  CHECK_THROWS_AS(profile(Word::from_digits("01"), 3), std::out_of_range);
}

TEST_CASE("profile agrees with the set-based oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = rand_word(rng, 2 + trial % 3, 1 + trial % 40);
    CHECK(profile(w, w.size()).values == oracles::naive_profile(w, w.size()));
  }
}

TEST_CASE("stabilized profiles of the classic words") {
  ComplexityProfile tm = stabilized_profile(GeneratorSpec{"tm"}, 12);
  REQUIRE(tm.stabilized);
  CHECK(tm.values[3] == 6);
  CHECK(tm.values[5] == 12);
  CHECK(tm.values[6] == 16);

  ComplexityProfile tp = stabilized_profile(GeneratorSpec{"twisted_tm"}, 18);
  REQUIRE(tp.stabilized);
  CHECK(tp.values == std::vector<std::int64_t>{1, 2, 4, 6, 10, 13, 17, 21, 24, 26, 30, 34, 38,
                                               42, 45, 48, 50, 52, 56});

  ComplexityProfile g = stabilized_profile(GeneratorSpec{"G"}, 64);
  REQUIRE(g.stabilized);
  for (std::size_t n = 0; n <= 64; ++n) CHECK(g.values[n] == 2 * static_cast<std::int64_t>(n) + 1);

  ComplexityProfile f12 = stabilized_profile(GeneratorSpec{"f12"}, 64);
  REQUIRE(f12.stabilized);
  for (std::size_t n = 2; n <= 64; ++n)
    CHECK(f12.values[n] == 6 * static_cast<std::int64_t>(n) - 6);
}

TEST_CASE("special factors") {
  SpecialFactorReport rep = special_factors(Word::from_digits("0102"), 1);
  REQUIRE(rep.special.size() == 1);
  CHECK(rep.special[0].factor.digits() == "0");
  CHECK(rep.special[0].extensions == std::vector<Letter>{1, 2});

  Word tm = generate("tm", 4096);
  std::vector<std::int64_t> d_t;
  for (std::size_t n = 1; n <= 8; ++n) d_t.push_back(special_factors(tm, n).count());
  CHECK(d_t == std::vector<std::int64_t>{2, 2, 4, 2, 4, 4, 2, 2});

  Word tp = generate("twisted_tm", 4096);
  std::vector<std::int64_t> d_tp;
  for (std::size_t n = 1; n <= 8; ++n) d_tp.push_back(special_factors(tp, n).count());
  CHECK(d_tp == std::vector<std::int64_t>{2, 2, 4, 3, 4, 4, 3, 2});
}

TEST_CASE("binary first difference equals the special-factor count") {
  for (const char* name : {"tm", "twisted_tm", "eta"}) {
    ComplexityProfile p = stabilized_profile(GeneratorSpec{name}, 33);
    REQUIRE(p.stabilized);
    Word w = generate(name, p.source_prefix_length);
    for (std::size_t n = 1; n <= 32; ++n) {
      CHECK(p.values[n + 1] - p.values[n] == special_factors(w, n).count());
      CHECK(p.values[n + 1] - p.values[n] == special_factors(w, n).weighted_count());
    }
  }
}

TEST_CASE("ternary weighted special counts give the first difference") {
  ComplexityProfile p = stabilized_profile(GeneratorSpec{"ternary_thue"}, 24);
  REQUIRE(p.stabilized);
  Word w = generate("ternary_thue", p.source_prefix_length);
  for (std::size_t n = 1; n <= 23; ++n)
    CHECK(p.values[n + 1] - p.values[n] == special_factors(w, n).weighted_count());
}

TEST_CASE("closed forms") {
  CHECK(closed_form(ClosedFormName::p_t, 5) == 12);
  CHECK(closed_form(ClosedFormName::p_t, 3) == 6);
  CHECK(closed_form(ClosedFormName::p_tprime, 9) == 26);
  CHECK(closed_form(ClosedFormName::d_tprime, 4) == 3);
  CHECK(closed_form(ClosedFormName::d_t, 3) == 4);
  CHECK_THROWS_AS(closed_form(ClosedFormName::d_t, 0), std::invalid_argument);

  // The displayed D sequences, 33 values each.
  std::string dt, dtp;
  for (int n = 1; n <= 33; ++n) {
    dt += std::to_string(closed_form(ClosedFormName::d_t, n));
    dtp += std::to_string(closed_form(ClosedFormName::d_tprime, n));
  }
  CHECK(dt == "224244224444222244444444222222224");
  CHECK(dtp == "224344324444332244444444333322224");
}

TEST_CASE("closed forms are consistent across branch seams") {
  for (std::int64_t n = 1; n <= 512; ++n) {
    CHECK(closed_form(ClosedFormName::p_t, n + 1) - closed_form(ClosedFormName::p_t, n) ==
          closed_form(ClosedFormName::d_t, n));
    if (n >= 4)
      CHECK(closed_form(ClosedFormName::p_tprime, n + 1) -
                closed_form(ClosedFormName::p_tprime, n) ==
            closed_form(ClosedFormName::d_tprime, n));
  }
}

TEST_CASE("closed forms match stabilized profiles") {
  ComplexityProfile tm = stabilized_profile(GeneratorSpec{"tm"}, 128);
  REQUIRE(tm.stabilized);
  for (std::size_t n = 0; n <= 128; ++n)
    CHECK(tm.values[n] == closed_form(ClosedFormName::p_t, static_cast<std::int64_t>(n)));
  ComplexityProfile tp = stabilized_profile(GeneratorSpec{"twisted_tm"}, 128);
  REQUIRE(tp.stabilized);
  for (std::size_t n = 0; n <= 128; ++n)
    CHECK(tp.values[n] == closed_form(ClosedFormName::p_tprime, static_cast<std::int64_t>(n)));
}

TEST_CASE("minimal forbidden thue-morse words") {
  std::vector<Word> words = minimal_forbidden_tm(1);
  auto digits = [&](std::size_t i) { return words[i].digits(); };
  REQUIRE(words.size() == 10);
  CHECK(digits(0) == "000");
  CHECK(digits(1) == "111");
  // k = 0 family: r_0, s_0 and complements, length 5.
  CHECK(digits(2) == "00100");
  CHECK(digits(3) == "01010");
  CHECK(digits(4) == "10101");
  CHECK(digits(5) == "11011");
  for (const Word& w : minimal_forbidden_tm(4)) {
    if (w.size() < 5) continue;
    bool length_ok = false;
    for (int k = 0; k <= 4; ++k)
      if (w.size() == 3 * (std::size_t{1} << k) + 2) length_ok = true;
    CHECK(length_ok);
  }
}

TEST_CASE("verify_minimal_forbidden") {
  Word tm = generate("tm", 1 << 12);
  CHECK(verify_minimal_forbidden(Word::from_digits("00100"), tm));
  CHECK_FALSE(verify_minimal_forbidden(Word::from_digits("0010"), tm));
  CHECK_FALSE(verify_minimal_forbidden(Word::from_digits("0000"), tm));
  CHECK_THROWS_AS(verify_minimal_forbidden(Word::from_digits("00100"), generate("tm", 16)),
                  std::invalid_argument);
  for (const Word& w : minimal_forbidden_tm(4)) CHECK(verify_minimal_forbidden(w, tm));
}

TEST_CASE("brute-force discovery of minimal forbidden words") {
  // Enumerate all absent words of length <= 14 whose proper factors occur;
  // they must be exactly the k <= 2 families plus 000/111.
  Word tm = generate("tm", 1 << 12);
  SuffixAutomaton sam(tm);
  std::vector<std::string> found;
  for (std::size_t len = 2; len <= 14; ++len) {
    sam.visit_factors(len - 1, [&](std::span<const Letter> f) {
      std::vector<Letter> cand(f.begin(), f.end());
      cand.push_back(0);
      for (Letter a = 0; a < 2; ++a) {
        cand.back() = a;
        if (sam.contains(std::span<const Letter>{cand})) continue;
        if (sam.contains(std::span<const Letter>{cand}.subspan(1)))
          found.push_back(Word(cand, 2).digits());
      }
    });
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> expected;
  for (const Word& w : minimal_forbidden_tm(2))
    if (w.size() <= 14) expected.push_back(w.digits());
  std::sort(expected.begin(), expected.end());
  CHECK(found == expected);
}

TEST_CASE("mu factorization") {
  MuFactorization tm_fact = mu_factorize(generate("tm", 256), 4);
  for (const Word& x : tm_fact.levels) CHECK(x.empty());
  CHECK(tm_fact.residual.is_prefix_of(generate("tm", 32)));

  MuFactorization tw = mu_factorize(generate("twisted_tm", 256), 4);
  REQUIRE(tw.levels.size() == 4);
  CHECK(tw.levels[0].digits() == "00");
  CHECK(tw.levels[1].digits() == "1");
  CHECK(tw.levels[2].digits() == "0");
  CHECK(tw.levels[3].digits() == "1");

  MuFactorization cm = mu_factorize(complement(generate("twisted_tm", 256)), 1);
  CHECK(cm.levels[0].digits() == "11");

  CHECK_THROWS_AS(mu_factorize(Word::from_digits("0011"), 1), std::domain_error);
  CHECK_THROWS_AS(mu_factorize(Word::from_digits("00110110"), 1), std::domain_error);
}

TEST_CASE("symmetry verdicts") {
  CHECK(is_symmetric(generate("tm", 1 << 12), 10));
  CHECK_FALSE(is_symmetric(generate("twisted_tm", 1 << 12), 5));
  CHECK(is_symmetric(generate("f12", 2048), 3));
}

TEST_CASE("ternary thue complexity equals shifted thue-morse complexity") {
  ComplexityProfile pt = stabilized_profile(GeneratorSpec{"tm"}, 65);
  ComplexityProfile pT = stabilized_profile(GeneratorSpec{"ternary_thue"}, 64);
  REQUIRE(pt.stabilized);
  REQUIRE(pT.stabilized);
  for (std::size_t n = 2; n <= 64; ++n) CHECK(pT.values[n] == pt.values[n + 1]);
}

TEST_CASE("u1 and u2 reach the extra factor counts") {
  Word u1 = make_u1(4096);
  CHECK(check_power_free(u1, PowerBound::parse("7/3")).pass);
  ComplexityProfile p1 = stabilized_profile(
      [](std::size_t n) { return make_u1(n); }, 13);
  REQUIRE(p1.stabilized);
  CHECK(p1.values[8] == closed_form(ClosedFormName::p_t, 8) + 2);

  Word u2 = make_u2(4096);
  CHECK(check_power_free(u2, PowerBound::parse("7/3")).pass);
  CHECK(u2.prefix(17).digits() == "00101100101101001");
  ComplexityProfile p2 = stabilized_profile(
      [](std::size_t n) { return make_u2(n); }, 13);
  REQUIRE(p2.stabilized);
  CHECK(p2.values[10] == closed_form(ClosedFormName::p_t, 10) + 3);
  CHECK(p2.values[8] == closed_form(ClosedFormName::p_t, 8) + 1);
  CHECK(p2.values[9] == closed_form(ClosedFormName::p_t, 9) + 2);
}

TEST_CASE("6/5 complexity bound for (7/3)-power-free words") {
  std::vector<std::pair<std::string, PrefixGenerator>> words = {
      {"tm", [](std::size_t n) { return generate("tm", n); }},
      {"twisted_tm", [](std::size_t n) { return generate("twisted_tm", n); }},
      {"tm_complement", [](std::size_t n) { return complement(generate("tm", n)); }},
      {"twisted_complement", [](std::size_t n) { return complement(generate("twisted_tm", n)); }},
      {"u1", [](std::size_t n) { return make_u1(n); }},
      {"u2", [](std::size_t n) { return make_u2(n); }},
  };
  for (auto& [name, gen] : words) {
    CHECK_MESSAGE(check_power_free(gen(2048), PowerBound::parse("7/3")).pass, name);
    ComplexityProfile p = stabilized_profile(gen, 128);
    REQUIRE(p.stabilized);
    for (std::size_t n = 1; n <= 128; ++n)
      CHECK_MESSAGE(5 * p.values[n] < 6 * closed_form(ClosedFormName::p_t,
                                                      static_cast<std::int64_t>(n)),
                    name, " at n=", n);
  }
}
