#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "pompeiu/field.hpp"

namespace pompeiu {

// Integer polynomial, coefficients lowest degree first; the highest stored
// coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial lemma2_modulus(const BigInt& c);  // c x^2 + x + c

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  BigRational evaluate(const BigRational& x) const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Residue in Q[x]/(p); coefficient vector shorter than deg(p).
struct QuotElem {
  std::vector<BigRational> coefficients;
  IntPolynomial modulus;

  bool operator==(const QuotElem& o) const {
    return coefficients == o.coefficients && modulus == o.modulus;
  }
};

// content > 0, primitive * content == p, primitive has coefficient gcd 1
// (sign stays in the primitive part).
std::pair<BigInt, IntPolynomial> primitive_part(const IntPolynomial& p);

// Rational-root candidate test over divisors of the extreme coefficients.
// Among the roots, returns the one with smallest |num|+|den|, ties broken
// toward the positive sign.
std::optional<BigRational> has_rational_root(const IntPolynomial& p);

// x^e reduced modulo p, as an exact rational coefficient vector.  For a
// degree-2 modulus, p must pass the irreducibility (no rational root) test.
QuotElem quot_power(unsigned long e, const IntPolynomial& p);

QuotElem quot_mul(const QuotElem& x, const QuotElem& y);

// The primitive integer triple (n1,n2,n3) with n1 a^r + n2 a^s + n3 a^t = 0
// for a root a of c x^2 + x + c, normalized so n3 > 0 (else n2 > 0, else
// n1 > 0); its coordinate sum is prime to c.
std::tuple<BigInt, BigInt, BigInt> lemma2_relation(const BigInt& c, long r,
                                                   long s, long t);

}  // namespace pompeiu
