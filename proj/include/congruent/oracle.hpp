#pragma once

// Semi-decision certification of congruent numbers. certify scans Euclid
// seeds and succeeds when the seed area is target * k^2; it can confirm a
// congruent number but never refute one.

#include <cstdint>
#include <variant>
#include <vector>

#include "congruent/bigint.hpp"
#include "congruent/rational.hpp"

namespace congruent {

/// improper_area(m, n) == value * k^2, and triangle is the seed triple / k.
struct Certificate {
  BigInt value;
  BigInt seed_m;
  BigInt seed_n;
  BigInt scale_k;
  RationalTriangle triangle;
};

struct UnknownUpToBound {
  BigInt target;
  std::uint64_t max_m = 0;
};

using CertifyResult = std::variant<Certificate, UnknownUpToBound>;

/// First seed in (m ascending, n ascending) order with m <= max_m whose area
/// divided by target is a perfect square. The answer depends only on
/// (target, max_m); jobs only splits the scan.
CertifyResult certify(const BigInt& target, std::uint64_t max_m, unsigned jobs = 1);

// Re-derives the certificate from its seed; false if any identity fails.
bool verify_certificate(const Certificate& c);

struct PowerOfTwoResult {
  unsigned exponent = 0;
  BigInt value;
  CertifyResult result;
};

/// certify(2^j, max_m) for j = 1..max_power.
std::vector<PowerOfTwoResult> audit_conjecture31(unsigned max_power, std::uint64_t max_m, unsigned jobs = 1);

}  // namespace congruent
