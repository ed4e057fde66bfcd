#include "congruent/rational.hpp"

#include <algorithm>

#include "congruent/factor.hpp"

namespace congruent {

Rational::Rational(BigInt num) : num_(std::move(num)), den_(1) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = gcd(num_, den_);
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.get_str() + "/" + den_.get_str(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

std::string_view to_string(CongruenceClass k) {
  switch (k) {
    case CongruenceClass::Improper: return "improper";
    case CongruenceClass::SemiProper: return "semi-proper";
    case CongruenceClass::Proper: return "proper";
  }
  return "?";
}

std::array<Rational, 3> RationalTriangle::sorted_sides() const {
  if (leg2_ < leg1_) return {leg2_, leg1_, hyp_};
  return {leg1_, leg2_, hyp_};
}

RationalTriangle make_triangle(Rational leg1, Rational leg2, Rational hyp) {
  if (leg1.sign() <= 0 || leg2.sign() <= 0 || hyp.sign() <= 0) {
    throw ParameterError("triangle sides must be positive");
  }
  Rational residual = leg1 * leg1 + leg2 * leg2 - hyp * hyp;
  if (residual.sign() != 0) {
    throw ValidationError("sides are not Pythagorean: leg1^2 + leg2^2 - hyp^2 = " + residual.str(),
                          std::move(residual));
  }
  return RationalTriangle(std::move(leg1), std::move(leg2), std::move(hyp));
}

RationalTriangle scaled_triangle(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& k) {
  return make_triangle(Rational(a, k), Rational(b, k), Rational(c, k));
}

Rational area(const RationalTriangle& t) { return t.leg1() * t.leg2() * Rational(1, 2); }

CongruenceClass classify(const RationalTriangle& t) {
  const int integral = (t.leg1().is_integer() ? 1 : 0) + (t.leg2().is_integer() ? 1 : 0);
  if (integral == 2) return CongruenceClass::Improper;
  if (integral == 1) return CongruenceClass::SemiProper;
  return CongruenceClass::Proper;
}

bool hyp_denominator_law(const RationalTriangle& t) {
  return t.hyp().den() == t.leg1().den() * t.leg2().den();
}

IntegerTriple to_integer_triple(const RationalTriangle& t) {
  if (!hyp_denominator_law(t)) {
    throw ContractError("hypotenuse denominator " + t.hyp().den().get_str() +
                        " is not the product of the leg denominators");
  }
  IntegerTriple out{t.leg2().den() * t.leg1().num(), t.leg1().den() * t.leg2().num(), t.hyp().num()};
  if (out.e * out.e != out.da * out.da + out.bc * out.bc) {
    throw ContractError("e^2 != (da)^2 + (bc)^2 for " + t.leg1().str() + ", " + t.leg2().str());
  }
  return out;
}

}  // namespace congruent
