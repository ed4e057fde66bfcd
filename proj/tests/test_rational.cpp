#include <doctest.h>

#include "congruent/rational.hpp"

using namespace congruent;

TEST_CASE("Rational normal form") {
  CHECK(Rational(9, 6) == Rational(3, 2));
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational::parse("40/6") == Rational(20, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParameterError);
  CHECK_THROWS_AS(Rational::parse("x/2"), ParameterError);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("make_triangle") {
  CHECK_NOTHROW(make_triangle(Rational(3), Rational(4), Rational(5)));
  CHECK_NOTHROW(make_triangle(Rational(3, 2), Rational(20, 3), Rational(41, 6)));
  try {
    make_triangle(Rational(1), Rational(1), Rational(3, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.residual() == Rational(-1, 4));
  }
  CHECK_THROWS_AS(make_triangle(Rational(0), Rational(1), Rational(1)), ParameterError);
  CHECK_THROWS_AS(make_triangle(Rational(-3), Rational(4), Rational(5)), ParameterError);
}

TEST_CASE("area and classification") {
  const auto t345 = make_triangle(3, 4, 5);
  const auto fib = make_triangle(Rational(3, 2), Rational(20, 3), Rational(41, 6));
  CHECK(area(t345) == Rational(6));
  CHECK(area(fib) == Rational(5));
  CHECK(area(make_triangle(Rational(9, 6), Rational(40, 6), Rational(41, 6))) == Rational(5));
  CHECK(classify(t345) == CongruenceClass::Improper);
  CHECK(classify(fib) == CongruenceClass::Proper);
  CHECK(classify(make_triangle(Rational(1), Rational(12, 5), Rational(13, 5))) == CongruenceClass::SemiProper);
  // (3,4,5) scaled by 1/3: only the leg 3 stays integral.
  CHECK(classify(scaled_triangle(3, 4, 5, 3)) == CongruenceClass::SemiProper);
  CHECK(to_string(CongruenceClass::SemiProper) == "semi-proper");
}

TEST_CASE("sorted sides and equality") {
  const auto a = make_triangle(Rational(20, 3), Rational(3, 2), Rational(41, 6));
  const auto b = make_triangle(Rational(3, 2), Rational(20, 3), Rational(41, 6));
  CHECK(a == b);
  CHECK(a.sorted_sides()[0] == Rational(3, 2));
  CHECK(a.sorted_sides()[2] == Rational(41, 6));
}

TEST_CASE("hypotenuse denominator law") {
  CHECK(hyp_denominator_law(make_triangle(Rational(3, 2), Rational(20, 3), Rational(41, 6))));
  CHECK(hyp_denominator_law(make_triangle(3, 4, 5)));
  // (3,4,5)/5 has hypotenuse 1 but leg denominators 5 and 5.
  CHECK_FALSE(hyp_denominator_law(make_triangle(Rational(3, 5), Rational(4, 5), Rational(1))));
}

TEST_CASE("to_integer_triple") {
  CHECK(to_integer_triple(make_triangle(Rational(3, 2), Rational(20, 3), Rational(41, 6))) ==
        IntegerTriple{9, 40, 41});
  CHECK(to_integer_triple(make_triangle(3, 4, 5)) == IntegerTriple{3, 4, 5});
  CHECK_THROWS_AS(to_integer_triple(make_triangle(Rational(3, 5), Rational(4, 5), Rational(1))), ContractError);
}
