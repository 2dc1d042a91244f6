#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cow {

// Exact arithmetic used throughout: exponents and Parikh counts are never
// floating point. Doubles appear only in eigenvalue estimates and series
// limits (module krieger).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "7/3" or "2"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// "7/3" for non-integers, "2" for integers.
std::string rational_str(const Rational& r);

double rational_to_double(const Rational& r);

std::int64_t to_int64(const BigInt& v);

}  // namespace cow
