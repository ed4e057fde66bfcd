#pragma once

#include <cstdint>
#include <vector>

#include "congruent/bigint.hpp"

namespace congruent {

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization of a positive integer.
///
/// Primes are strictly increasing, every exponent is at least 1, and the
/// product of prime^exponent equals value. value == 1 has no factors.
class Factorization {
 public:
  Factorization() = default;

  // Validates the invariants; throws ContractError when they do not hold.
  Factorization(BigInt value, std::vector<PrimePower> factors);

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  // Recomputes the product of prime^exponent.
  BigInt recompose() const;

  // Exponent of a prime, 0 if it does not occur.
  unsigned long exponent_of(const BigInt& prime) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  BigInt value_ = 1;
  std::vector<PrimePower> factors_;
};

// Factorization of a·b given factorizations of a and b.
Factorization multiply(const Factorization& a, const Factorization& b);

Factorization factorize(const BigInt& n);
Factorization factorize(std::uint64_t n);

BigInt gcd(const BigInt& a, const BigInt& b);

bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

bool is_squarefree(const BigInt& n);
bool is_squarefree(std::uint64_t n);

/// 1 when n is squarefree, 0 otherwise. This is an indicator, not the
/// classical Möbius function: it never takes the value -1.
int mobius_indicator(const BigInt& n);
int mobius_indicator(std::uint64_t n);

/// Largest d with d^2 | n, i.e. the product of p^floor(e/2).
BigInt square_part(const BigInt& n);
std::uint64_t square_part(std::uint64_t n);
BigInt square_part(const Factorization& f);

/// Every d >= 1 with d^2 | n, ascending.
std::vector<BigInt> square_divisors(const BigInt& n);
std::vector<BigInt> square_divisors(const Factorization& f);

// All positive divisors, ascending.
std::vector<BigInt> divisors(const Factorization& f);

}  // namespace congruent
