#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "congruent/bigint.hpp"

namespace congruent {

/// Primitive Pythagorean triple together with its Euclid seed (m, n).
///
/// a = m^2 - n^2 is the odd leg and b = 2mn the even leg; c = m^2 + n^2.
/// The seed satisfies gcd(m, n) = 1, m > n >= 1 and m, n of opposite parity.
struct PrimitiveTriple {
  BigInt m;
  BigInt n;
  BigInt a;
  BigInt b;
  BigInt c;

  friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;
};

// Throws ParameterError naming the first violated condition.
void validate_seed(const BigInt& m, const BigInt& n);
bool is_valid_seed(const BigInt& m, const BigInt& n);
bool is_valid_seed(std::uint64_t m, std::uint64_t n);

PrimitiveTriple euclid_triple(const BigInt& m, const BigInt& n);

/// Calls visit for every primitive triple with c <= max_c, ascending m then n.
/// Returning false from visit stops the walk.
void for_each_triple(const BigInt& max_c, const std::function<bool(const PrimitiveTriple&)>& visit);

std::vector<PrimitiveTriple> enumerate_triples(const BigInt& max_c);

/// gcd(m - n, m + n) for coprime m > n; always 1 or 2.
BigInt sum_diff_gcd(const BigInt& m, const BigInt& n);

}  // namespace congruent
