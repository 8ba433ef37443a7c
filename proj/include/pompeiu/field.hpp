#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pompeiu/rational.hpp"

namespace pompeiu {

// Thrown on exact division by zero.
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on contract violations (descriptor mismatch, bad arguments).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Names the scalar tower: Q (d == 0) or the real quadratic extension
// Q(sqrt(d)) for squarefree d >= 2.
struct FieldDescriptor {
  long d = 0;

  bool is_rational() const { return d == 0; }
  bool operator==(const FieldDescriptor&) const = default;
};

bool is_squarefree(long d);
FieldDescriptor make_descriptor(long d);  // validates squarefree, d not in {0,1}

// Element a + b*sqrt(d) of Q or Q(sqrt(d)).  Pure rationals carry d == 0 and
// b == 0; they combine freely with elements of any single quadratic tower.
// Two distinct nonzero discriminants never mix.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(BigRational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  FieldElem(long v) : a_(v) {}                    // NOLINT
  FieldElem(BigRational a, BigRational b, long d);

  const BigRational& rational_part() const { return a_; }
  const BigRational& surd_part() const { return b_; }
  long discriminant() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational_value() const { return b_ == 0; }

  FieldElem operator-() const;
  FieldElem inverse() const;

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  friend bool operator==(const FieldElem& x, const FieldElem& y);
  friend bool operator!=(const FieldElem& x, const FieldElem& y) {
    return !(x == y);
  }
  // Total order for canonical sorting (not the field order).
  friend bool operator<(const FieldElem& x, const FieldElem& y);

  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

 private:
  BigRational a_;
  BigRational b_;
  long d_ = 0;
};

// Complexification re + im*i with both parts in one field tower.
class ComplexElem {
 public:
  ComplexElem() = default;
  ComplexElem(FieldElem re) : re_(std::move(re)) {}  // NOLINT
  ComplexElem(long v) : re_(v) {}                    // NOLINT
  ComplexElem(FieldElem re, FieldElem im)
      : re_(std::move(re)), im_(std::move(im)) {}

  const FieldElem& real() const { return re_; }
  const FieldElem& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ComplexElem operator-() const { return ComplexElem(-re_, -im_); }
  ComplexElem conjugate() const { return ComplexElem(re_, -im_); }
  ComplexElem inverse() const;

  friend ComplexElem operator+(const ComplexElem& x, const ComplexElem& y) {
    return ComplexElem(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend ComplexElem operator-(const ComplexElem& x, const ComplexElem& y) {
    return ComplexElem(x.re_ - y.re_, x.im_ - y.im_);
  }
  friend ComplexElem operator*(const ComplexElem& x, const ComplexElem& y) {
    return ComplexElem(x.re_ * y.re_ - x.im_ * y.im_,
                       x.re_ * y.im_ + x.im_ * y.re_);
  }
  friend ComplexElem operator/(const ComplexElem& x, const ComplexElem& y) {
    return x * y.inverse();
  }
  friend bool operator==(const ComplexElem& x, const ComplexElem& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ComplexElem& x, const ComplexElem& y) {
    return !(x == y);
  }
  friend bool operator<(const ComplexElem& x, const ComplexElem& y) {
    if (x.re_ != y.re_) return x.re_ < y.re_;
    return x.im_ < y.im_;
  }

  ComplexElem& operator+=(const ComplexElem& y) { return *this = *this + y; }
  ComplexElem& operator-=(const ComplexElem& y) { return *this = *this - y; }
  ComplexElem& operator*=(const ComplexElem& y) { return *this = *this * y; }

 private:
  FieldElem re_;
  FieldElem im_;
};

// Literals: "p/q", "p/q+r/s√d", "p/q-r/s√d", "r/s√d"; "sqrt(d)" is accepted
// as an ASCII spelling of "√d".
std::string field_to_string(const FieldElem& x);
std::optional<FieldElem> parse_field_elem(std::string_view text,
                                          const FieldDescriptor& desc);

// "(re,im)" when the imaginary part is nonzero, else the plain field literal.
std::string complex_to_string(const ComplexElem& z);
std::optional<ComplexElem> parse_complex_elem(std::string_view text,
                                              const FieldDescriptor& desc);

}  // namespace pompeiu
