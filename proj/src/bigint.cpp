#include "congruent/bigint.hpp"

#include <bit>
#include <cctype>

namespace congruent {

SqrtRem isqrt_rem(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of a negative integer");
  SqrtRem out;
  mpz_sqrtrem(out.root.get_mpz_t(), out.rem.get_mpz_t(), n.get_mpz_t());
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Newton from an overestimate 2^ceil(bits/2); strictly decreasing until floor.
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool is_perfect_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(std::uint64_t n) {
  // Squares mod 16 are {0,1,4,9}.
  switch (n & 15) {
    case 0: case 1: case 4: case 9: break;
    default: return false;
  }
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (sgn(n) < 0) return std::nullopt;
  auto [root, rem] = isqrt_rem(n);
  if (rem != 0) return std::nullopt;
  return root;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

bool fits_u64(const BigInt& n) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return sgn(n) >= 0 && n.fits_ulong_p();
}

std::uint64_t to_u64(const BigInt& n) {
  if (!fits_u64(n)) throw DomainError("integer does not fit in 64 bits: " + n.get_str());
  return n.get_ui();
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
  return out;
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ParameterError("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParameterError("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

unsigned long two_adic_valuation(const BigInt& n) {
  if (n == 0) throw DomainError("2-adic valuation of zero");
  return mpz_scan1(n.get_mpz_t(), 0);
}

}  // namespace congruent
