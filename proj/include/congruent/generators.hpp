#pragma once

#include <vector>

#include "congruent/bigint.hpp"
#include "congruent/factor.hpp"
#include "congruent/rational.hpp"

namespace congruent {

/// A congruent number produced from a Euclid seed by dividing the seed
/// triangle by sigma1 * sigma2, where sigma1^2 | m^2 - n^2 and sigma2^2 | m*n.
///
/// value = m n (m - n)(m + n) / (sigma1 sigma2)^2 and area(triangle) == value.
struct CongruentWitness {
  BigInt value;
  BigInt seed_m;
  BigInt seed_n;
  BigInt sigma1;
  BigInt sigma2;
  RationalTriangle triangle;
  CongruenceClass klass;
};

/// m n (m - n)(m + n), the area of the seed's primitive triangle.
BigInt improper_area(const BigInt& m, const BigInt& n);

/// Factorizations of the odd leg m^2 - n^2 and of m*n, assembled from the
/// factorizations of m - n, m + n, m and n.
struct SeedFactors {
  Factorization odd_leg;
  Factorization mn;
};
SeedFactors seed_factors(const BigInt& m, const BigInt& n);

/// One witness per (sigma1, sigma2) pair, ordered by sigma1 then sigma2.
/// The pairs are distinct, so the list is already unique on (value, sigma1, sigma2).
std::vector<CongruentWitness> candidates_from_seed(const BigInt& m, const BigInt& n);

/// Sorted distinct witness values.
std::vector<BigInt> distinct_values_from_seed(const BigInt& m, const BigInt& n);

/// sum over i of floor((e_i + e'_i) / 2), exponent lists zero-padded to the
/// same length and paired by position rather than by prime. Kept only so the
/// audit can compare it with enumeration; no other code relies on it.
BigInt thm74_count(const Factorization& alpha, const Factorization& beta);

}  // namespace congruent
