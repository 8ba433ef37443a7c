#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pompeiu/field.hpp"

using namespace pompeiu;

namespace {

FieldElem quad(long an, long ad, long bn, long bd, long d) {
  return FieldElem(make_rational(an, ad), make_rational(bn, bd), d);
}

}  // namespace

TEST_CASE("conjugate product in Q(sqrt 3)") {
  FieldElem x = quad(1, 2, 1, 2, 3);
  FieldElem y = quad(1, 2, -1, 2, 3);
  CHECK(x * y == FieldElem(make_rational(-1, 2)));
}

TEST_CASE("rational inverse") {
  FieldElem x(make_rational(3, 7));
  CHECK(x.inverse() == FieldElem(make_rational(7, 3)));
}

TEST_CASE("i squared is -1") {
  ComplexElem i(FieldElem(0), FieldElem(1));
  CHECK(i * i == ComplexElem(FieldElem(-1), FieldElem(0)));
}

TEST_CASE("division by zero is an arithmetic error") {
  CHECK_THROWS_AS(FieldElem(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(FieldElem(1) / FieldElem(0), ArithmeticError);
  CHECK_THROWS_AS(ComplexElem(0).inverse(), ArithmeticError);
}

TEST_CASE("descriptor mismatch is a usage error") {
  FieldElem a = quad(1, 1, 1, 1, 2);
  FieldElem b = quad(1, 1, 1, 1, 3);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK_THROWS_AS(a * b, UsageError);
  // Pure rationals combine with any tower.
  CHECK(a + FieldElem(1) == quad(2, 1, 1, 1, 2));
}

TEST_CASE("x * inv(x) == 1 for random nonzero elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    FieldElem x = quad(num(rng), den(rng), num(rng), den(rng), 5);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == FieldElem(1));
    ComplexElem z(x, quad(num(rng), den(rng), num(rng), den(rng), 5));
    CHECK(z * z.inverse() == ComplexElem(1));
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(make_descriptor(4), UsageError);
  CHECK_THROWS_AS(make_descriptor(12), UsageError);
  CHECK_THROWS_AS(make_descriptor(1), UsageError);
  CHECK(make_descriptor(3).d == 3);
  CHECK(make_descriptor(0).is_rational());
  CHECK(is_squarefree(6));
  CHECK_FALSE(is_squarefree(18));
}

TEST_CASE("field literal round trips") {
  FieldDescriptor q3 = make_descriptor(3);
  for (const char* text : {"1/2", "-5", "1/2+1/2\xe2\x88\x9a"
                                        "3",
                           "-1/2\xe2\x88\x9a"
                           "3",
                           "0"}) {
    auto x = parse_field_elem(text, q3);
    REQUIRE(x.has_value());
    auto again = parse_field_elem(field_to_string(*x), q3);
    REQUIRE(again.has_value());
    CHECK(*x == *again);
  }
  auto ascii = parse_field_elem("1/2+1/2sqrt(3)", q3);
  REQUIRE(ascii.has_value());
  CHECK(*ascii == quad(1, 2, 1, 2, 3));
}

TEST_CASE("complex literal parsing") {
  FieldDescriptor q{0};
  auto i = parse_complex_elem("(0,1)", q);
  REQUIRE(i.has_value());
  CHECK(*i == ComplexElem(FieldElem(0), FieldElem(1)));
  auto plain = parse_complex_elem("-3/4", q);
  REQUIRE(plain.has_value());
  CHECK(*plain == ComplexElem(FieldElem(make_rational(-3, 4))));
  CHECK_FALSE(parse_complex_elem("(1;2)", q).has_value());
  CHECK_FALSE(parse_field_elem("1/0", q).has_value());
  // Surd literal rejected over the rationals.
  CHECK_FALSE(parse_field_elem("1\xe2\x88\x9a"
                               "3",
                               q)
                  .has_value());
}
