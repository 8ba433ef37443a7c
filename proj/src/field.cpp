#include "pompeiu/field.hpp"

#include <algorithm>
#include <cctype>

namespace pompeiu {

namespace {

long combine_disc(long d1, long d2) {
  if (d1 == d2) return d1;
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  throw UsageError("field descriptor mismatch: sqrt(" + std::to_string(d1) +
                   ") vs sqrt(" + std::to_string(d2) + ")");
}

}  // namespace

bool is_squarefree(long d) {
  if (d <= 0) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

FieldDescriptor make_descriptor(long d) {
  if (d == 0) return FieldDescriptor{0};
  if (d < 2 || !is_squarefree(d))
    throw UsageError("field discriminant must be a squarefree integer >= 2, got " +
                     std::to_string(d));
  return FieldDescriptor{d};
}

FieldElem::FieldElem(BigRational a, BigRational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0 && b_ != 0)
    throw UsageError("surd part requires a quadratic field descriptor");
}

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  FieldElem r;
  r.d_ = combine_disc(x.d_, y.d_);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  return r;
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) { return x + (-y); }

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  FieldElem r;
  r.d_ = combine_disc(x.d_, y.d_);
  r.a_ = x.a_ * y.a_ + BigRational(r.d_) * x.b_ * y.b_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero field element");
  // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - d b^2); the norm is nonzero
  // for squarefree d since sqrt(d) is irrational.
  BigRational norm = a_ * a_ - BigRational(d_) * b_ * b_;
  FieldElem r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  return r;
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) {
  return x * y.inverse();
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  combine_disc(x.d_, y.d_);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator<(const FieldElem& x, const FieldElem& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

ComplexElem ComplexElem::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero complex element");
  FieldElem norm = re_ * re_ + im_ * im_;
  FieldElem inv_norm = norm.inverse();
  return ComplexElem(re_ * inv_norm, -(im_ * inv_norm));
}

namespace {

constexpr std::string_view kSurdUtf8 = "\xe2\x88\x9a";  // U+221A

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Returns position of the surd marker and the position just past the
// discriminant digits, or npos if absent.  Accepts "√d" and "sqrt(d)".
struct SurdSplit {
  std::size_t marker = std::string::npos;  // start of marker
  long d = 0;
};

std::optional<SurdSplit> find_surd(const std::string& s) {
  SurdSplit out;
  std::size_t pos = s.find(kSurdUtf8);
  std::size_t digits_begin;
  std::size_t digits_end;
  if (pos != std::string::npos) {
    out.marker = pos;
    digits_begin = pos + kSurdUtf8.size();
    digits_end = s.size();
  } else {
    pos = s.find("sqrt(");
    if (pos == std::string::npos) return std::nullopt;
    if (s.back() != ')') return std::nullopt;
    out.marker = pos;
    digits_begin = pos + 5;
    digits_end = s.size() - 1;
  }
  if (digits_begin >= digits_end) return std::nullopt;
  long d = 0;
  for (std::size_t i = digits_begin; i < digits_end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    d = d * 10 + (s[i] - '0');
  }
  if (digits_end != s.size() && digits_end + 1 != s.size()) return std::nullopt;
  out.d = d;
  return out;
}

}  // namespace

std::string field_to_string(const FieldElem& x) {
  if (x.surd_part() == 0) return rat_to_string(x.rational_part());
  std::string surd =
      rat_to_string(abs(x.surd_part())) + std::string(kSurdUtf8) +
      std::to_string(x.discriminant());
  if (x.rational_part() == 0)
    return (x.surd_part() < 0 ? "-" : "") + surd;
  return rat_to_string(x.rational_part()) +
         (x.surd_part() < 0 ? "-" : "+") + surd;
}

std::optional<FieldElem> parse_field_elem(std::string_view text,
                                          const FieldDescriptor& desc) {
  const std::string s = strip_spaces(text);
  if (s.empty()) return std::nullopt;
  auto surd = find_surd(s);
  if (!surd) {
    auto r = parse_rational(s);
    if (!r) return std::nullopt;
    return FieldElem(*r);
  }
  if (desc.is_rational() || surd->d != desc.d) return std::nullopt;
  // Split "A±B√d" at the last top-level sign before the marker; a sign at
  // position 0 belongs to A (or to B when there is no rational part).
  std::string coeff_part = s.substr(0, surd->marker);
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < coeff_part.size(); ++i) {
    if (coeff_part[i] == '+' || coeff_part[i] == '-') split = i;
  }
  BigRational a = 0;
  std::string b_str;
  if (split == std::string::npos) {
    b_str = coeff_part;
  } else {
    auto ar = parse_rational(coeff_part.substr(0, split));
    if (!ar) return std::nullopt;
    a = *ar;
    b_str = coeff_part.substr(split);  // keeps the sign
    if (b_str.size() == 1) b_str += "1";
  }
  if (b_str.empty() || b_str == "+" || b_str == "-") b_str += "1";
  auto br = parse_rational(b_str);
  if (!br) return std::nullopt;
  return FieldElem(a, *br, desc.d);
}

std::string complex_to_string(const ComplexElem& z) {
  if (z.imag().is_zero()) return field_to_string(z.real());
  return "(" + field_to_string(z.real()) + "," + field_to_string(z.imag()) +
         ")";
}

std::optional<ComplexElem> parse_complex_elem(std::string_view text,
                                              const FieldDescriptor& desc) {
  const std::string s = strip_spaces(text);
  if (s.empty()) return std::nullopt;
  if (s.front() == '(') {
    if (s.back() != ')') return std::nullopt;
    const std::string inner = s.substr(1, s.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) return std::nullopt;
    auto re = parse_field_elem(inner.substr(0, comma), desc);
    auto im = parse_field_elem(inner.substr(comma + 1), desc);
    if (!re || !im) return std::nullopt;
    return ComplexElem(*re, *im);
  }
  auto re = parse_field_elem(s, desc);
  if (!re) return std::nullopt;
  return ComplexElem(*re);
}

}  // namespace pompeiu
