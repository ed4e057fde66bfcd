#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "congruent/bigint.hpp"

namespace congruent {

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is always 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt num);  // NOLINT: integers convert implicitly
  Rational(long num) : Rational(BigInt(num)) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den"; integers still carry "/1" so the format is uniform.
  std::string str() const;
  static Rational parse(std::string_view text);

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Thrown by make_triangle when the sides are not exactly Pythagorean.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, Rational residual)
      : std::invalid_argument(what), residual_(std::move(residual)) {}
  // leg1^2 + leg2^2 - hyp^2
  const Rational& residual() const { return residual_; }

 private:
  Rational residual_;
};

enum class CongruenceClass { Improper, SemiProper, Proper };

std::string_view to_string(CongruenceClass k);

/// Right triangle with positive rational sides and leg1^2 + leg2^2 = hyp^2.
class RationalTriangle {
 public:
  const Rational& leg1() const { return leg1_; }
  const Rational& leg2() const { return leg2_; }
  const Rational& hyp() const { return hyp_; }

  // Legs ascending, then the hypotenuse; the canonical serialized order.
  std::array<Rational, 3> sorted_sides() const;

  // Triangles are equal iff their sorted side lists are equal.
  friend bool operator==(const RationalTriangle& a, const RationalTriangle& b) {
    return a.sorted_sides() == b.sorted_sides();
  }

 private:
  friend RationalTriangle make_triangle(Rational, Rational, Rational);
  RationalTriangle(Rational l1, Rational l2, Rational h)
      : leg1_(std::move(l1)), leg2_(std::move(l2)), hyp_(std::move(h)) {}

  Rational leg1_;
  Rational leg2_;
  Rational hyp_;
};

RationalTriangle make_triangle(Rational leg1, Rational leg2, Rational hyp);

// The integer triangle (a, b, c) with every side divided by k.
RationalTriangle scaled_triangle(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& k);

Rational area(const RationalTriangle& t);

CongruenceClass classify(const RationalTriangle& t);

/// hyp.den == leg1.den * leg2.den, the normal form every integer-area
/// triangle built from a primitive triple satisfies.
bool hyp_denominator_law(const RationalTriangle& t);

struct IntegerTriple {
  BigInt da;
  BigInt bc;
  BigInt e;

  friend bool operator==(const IntegerTriple&, const IntegerTriple&) = default;
};

/// With legs a/b, c/d and hypotenuse e/f returns (d*a, b*c, e).
/// Throws ContractError if the denominator law or e^2 = (da)^2 + (bc)^2 fails.
IntegerTriple to_integer_triple(const RationalTriangle& t);

}  // namespace congruent
