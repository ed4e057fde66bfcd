#pragma once

// Arbitrary-precision integer support and the error types shared by every
// module. BigInt is GMP's mpz_class; all arithmetic in the toolkit is exact.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace congruent {

using BigInt = mpz_class;

/// Input outside the mathematical domain of an operation (n = 0, negative n).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition on parameters does not hold.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold by construction failed to hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SqrtRem {
  BigInt root;
  BigInt rem;
};

// Floor square root with remainder: root^2 + rem == n, rem <= 2*root.
SqrtRem isqrt_rem(const BigInt& n);
std::uint64_t isqrt(std::uint64_t n);

bool is_perfect_square(const BigInt& n);
bool is_perfect_square(std::uint64_t n);

// Exact square root when n is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n);
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

bool fits_u64(const BigInt& n);
std::uint64_t to_u64(const BigInt& n);
BigInt from_u64(std::uint64_t v);

std::string to_decimal(const BigInt& n);

// Parses an optionally signed decimal integer; throws ParameterError on junk.
BigInt parse_bigint(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);

// 2-adic valuation; n must be nonzero.
unsigned long two_adic_valuation(const BigInt& n);

}  // namespace congruent
