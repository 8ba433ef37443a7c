#include "pompeiu/polynomial.hpp"

#include <algorithm>
#include <array>

namespace pompeiu {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Positive divisors of |n|, unsorted magnitude order not required by callers.
std::vector<BigInt> positive_divisors(const BigInt& n) {
  BigInt m = n < 0 ? BigInt(-n) : n;
  std::vector<BigInt> divs;
  for (BigInt i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      divs.push_back(i);
      if (i * i != m) divs.push_back(m / i);
    }
  }
  return divs;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::lemma2_modulus(const BigInt& c) {
  return IntPolynomial({c, 1, c});
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + BigRational(*it);
  return acc;
}

std::pair<BigInt, IntPolynomial> primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) throw UsageError("primitive_part of the zero polynomial");
  BigInt content = 0;
  for (const auto& c : p.coefficients()) content = int_gcd(content, c);
  std::vector<BigInt> prim;
  prim.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) prim.push_back(c / content);
  return {content, IntPolynomial(std::move(prim))};
}

std::optional<BigRational> has_rational_root(const IntPolynomial& p) {
  if (p.degree() < 1) throw UsageError("has_rational_root needs degree >= 1");
  std::vector<BigRational> roots;
  // Factor out x^v so the candidate enumeration sees a nonzero constant term.
  std::size_t v = 0;
  while (p.coefficient(v) == 0) ++v;
  if (v > 0) roots.push_back(BigRational(0));
  const BigInt a0 = p.coefficient(v);
  const BigInt an = p.coefficients().back();
  for (const BigInt& num : positive_divisors(a0)) {
    for (const BigInt& den : positive_divisors(an)) {
      if (int_gcd(num, den) != 1) continue;
      for (int sign : {+1, -1}) {
        BigRational cand = make_rational(sign * num, den);
        if (p.evaluate(cand) == 0) roots.push_back(cand);
      }
    }
  }
  if (roots.empty()) return std::nullopt;
  auto size_key = [](const BigRational& r) {
    return BigInt(abs(rat_num(r)) + rat_den(r));
  };
  auto best = roots.front();
  for (const auto& r : roots) {
    const BigInt kr = size_key(r);
    const BigInt kb = size_key(best);
    if (kr < kb || (kr == kb && r > best)) best = r;
  }
  return best;
}

namespace {

std::vector<BigRational> poly_mod(std::vector<BigRational> r,
                                  const IntPolynomial& p) {
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  const BigRational lead(p.coefficients().back());
  while (r.size() > deg) {
    BigRational factor = r.back() / lead;
    const std::size_t shift = r.size() - 1 - deg;
    for (std::size_t i = 0; i <= deg; ++i)
      r[shift + i] -= factor * BigRational(p.coefficient(i));
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() <= deg) break;
  }
  r.resize(deg, BigRational(0));
  return r;
}

void require_irreducible_modulus(const IntPolynomial& p) {
  if (p.degree() < 2) throw UsageError("quotient modulus must have degree >= 2");
  if (has_rational_root(p))
    throw UsageError("quotient modulus is reducible (rational root found)");
}

}  // namespace

QuotElem quot_power(unsigned long e, const IntPolynomial& p) {
  require_irreducible_modulus(p);
  std::vector<BigRational> r(e + 1, BigRational(0));
  r[e] = 1;
  return QuotElem{poly_mod(std::move(r), p), p};
}

QuotElem quot_mul(const QuotElem& x, const QuotElem& y) {
  if (!(x.modulus == y.modulus))
    throw UsageError("quot_mul operands have different moduli");
  std::vector<BigRational> prod(x.coefficients.size() + y.coefficients.size(),
                                BigRational(0));
  if (prod.empty()) prod.resize(1, BigRational(0));
  for (std::size_t i = 0; i < x.coefficients.size(); ++i)
    for (std::size_t j = 0; j < y.coefficients.size(); ++j)
      prod[i + j] += x.coefficients[i] * y.coefficients[j];
  return QuotElem{poly_mod(std::move(prod), x.modulus), x.modulus};
}

std::tuple<BigInt, BigInt, BigInt> lemma2_relation(const BigInt& c, long r,
                                                   long s, long t) {
  if (c <= 1) throw UsageError("lemma2_relation requires c > 1");
  if (!(0 <= r && r < s && s < t))
    throw UsageError("lemma2_relation requires 0 <= r < s < t");
  const IntPolynomial p = IntPolynomial::lemma2_modulus(c);
  require_irreducible_modulus(p);

  // Columns are x^r, x^s, x^t reduced mod p; find a rational kernel vector of
  // the 2x3 coefficient matrix by elimination with canonical free-variable
  // choice, then clear denominators and primitivize.
  std::array<std::vector<BigRational>, 3> cols = {
      quot_power(static_cast<unsigned long>(r), p).coefficients,
      quot_power(static_cast<unsigned long>(s), p).coefficients,
      quot_power(static_cast<unsigned long>(t), p).coefficients};
  // 2 rows (coefficient of 1 and of x), 3 unknowns.
  BigRational m[2][3];
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 3; ++col) m[row][col] = cols[col][row];

  int pivot_col[2] = {-1, -1};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 2; ++col) {
    int pr = -1;
    for (int row = rank; row < 2; ++row)
      if (m[row][col] != 0) {
        pr = row;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    BigRational inv = m[rank][col];
    for (int j = col; j < 3; ++j) m[rank][j] /= inv;
    for (int row = 0; row < 2; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      BigRational f = m[row][col];
      for (int j = col; j < 3; ++j) m[row][j] -= f * m[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }

  // First free column in ascending order gets 1, remaining free columns 0.
  bool is_pivot[3] = {false, false, false};
  for (int row = 0; row < rank; ++row) is_pivot[pivot_col[row]] = true;
  int free_col = -1;
  for (int col = 0; col < 3; ++col)
    if (!is_pivot[col]) {
      free_col = col;
      break;
    }
  BigRational sol[3] = {BigRational(0), BigRational(0), BigRational(0)};
  sol[free_col] = 1;
  for (int row = rank - 1; row >= 0; --row)
    sol[pivot_col[row]] = -m[row][free_col];

  // Clear denominators, divide by gcd, normalize the sign.
  BigInt lcm = 1;
  for (const auto& x : sol) lcm = lcm / int_gcd(lcm, rat_den(x)) * rat_den(x);
  BigInt n[3];
  for (int i = 0; i < 3; ++i) n[i] = rat_num(sol[i]) * (lcm / rat_den(sol[i]));
  BigInt g = int_gcd(int_gcd(n[0], n[1]), n[2]);
  for (auto& x : n) x /= g;
  BigInt lead = n[2] != 0 ? n[2] : (n[1] != 0 ? n[1] : n[0]);
  if (lead < 0)
    for (auto& x : n) x = -x;

  if (int_gcd(n[0] + n[1] + n[2], c) != 1)
    throw ArithmeticError("lemma2_relation: coordinate sum not prime to c");
  return {n[0], n[1], n[2]};
}

}  // namespace pompeiu
