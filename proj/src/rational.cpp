#include "pompeiu/rational.hpp"

#include <cctype>

namespace pompeiu {

std::string rat_to_string(const BigRational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) {
    s += '/';
    s += rat_den(r).str();
  }
  return s;
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  // cpp_int's string constructor rejects an explicit '+'.
  if (text[0] == '+') text.remove_prefix(1);
  out = BigInt(std::string(text));
  return true;
}

}  // namespace

std::optional<BigRational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return BigRational(num, den);
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace pompeiu
