#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cow/word.hpp"

namespace cow::morphisms {

// 0 -> 01, 1 -> 10 (Thue-Morse)
Morphism mu();
// 0 -> 012, 1 -> 02, 2 -> 1 (ternary Thue)
Morphism theta();
// 0 -> 01, 1 -> 2, 2 -> 02
Morphism gamma();
// 0 -> 0, 1 -> 01, 2 -> 011
Morphism tau();
// 0 -> 010, 1 -> 011
Morphism eta();
// 0 -> 01, 1 -> 0 (Fibonacci)
Morphism phi();
// The 27-uniform square-free-to-binary morphism; images differ only in the
// length-8 block at position 15.
Morphism g();
// 0 -> 02, 1 -> 21, 2 -> 12; coding {0,2} -> 0, 1 -> 1 of its fixed point
// gives the twisted Thue-Morse word.
Morphism twisted_preimage();

// 0 -> 2, 1 -> 1 into the ternary alphabet
Coding xi();
// {0,2} -> 0, 1 -> 1
Coding twisted_coding();

}  // namespace cow::morphisms

namespace cow {

// A named entry of the fixed word-generator registry.
struct GeneratorSpec {
  std::string name;
};

// Registry names: tm, twisted_tm, ternary_thue, fibonacci, f12, f13, G,
// tauG, gT, eta. Throws std::invalid_argument for unknown names.
Word generate(const GeneratorSpec& spec, std::size_t n);
Word generate(std::string_view name, std::size_t n);
const std::vector<std::string>& generator_names();

// Alternate constructions of the twisted Thue-Morse word; all three routes
// (these two and the registry's coded-fixed-point route) agree.
Word twisted_tm_block_form(std::size_t n);
Word twisted_tm_digit_parity(std::size_t n);

}  // namespace cow
