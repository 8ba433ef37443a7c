#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace pompeiu {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced, denominator > 0, zero is 0/1.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& r) { return numerator(r); }
inline BigInt rat_den(const BigRational& r) { return denominator(r); }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  return BigRational(num, den);
}

// "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const BigRational& r);

// Accepts "p" and "p/q" with optional leading sign; nullopt on malformed input
// (including zero denominators).
std::optional<BigRational> parse_rational(std::string_view text);

// Largest integer <= num/den.
BigInt floor_div(const BigInt& num, const BigInt& den);

}  // namespace pompeiu
