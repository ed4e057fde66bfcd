#pragma once

// Bounded exact searches for the quartic a x^4 + b y^4 = z^2 and related
// equations. Every search is a semi-decision: an empty result means
// "nothing up to the bound", never "no solution".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congruent/bigint.hpp"
#include "congruent/generators.hpp"
#include "congruent/rational.hpp"

namespace congruent {

struct QuarticSolution {
  BigInt a;
  BigInt b;
  BigInt x;
  BigInt y;
  BigInt z;

  friend bool operator==(const QuarticSolution&, const QuarticSolution&) = default;
};

// a x^4 + b y^4 == z^2, recomputed from scratch.
bool satisfies_quartic(const QuarticSolution& s);

/// All 1 <= x, y <= max_xy with a x^4 + b y^4 a perfect square, x-major order.
std::vector<QuarticSolution> search_quartic(const BigInt& a, const BigInt& b, std::uint64_t max_xy);

struct QuarticCounterexample {
  QuarticSolution witness;  // first solution in search order
  std::size_t solutions_in_bounds = 0;
};

/// Coprime 1 < a, b <= max_ab for which a x^4 + b y^4 = z^2 has a solution
/// in bounds while a + b is not a perfect square. Ordered by (a, b).
std::vector<QuarticCounterexample> audit_thm41(std::uint64_t max_ab, std::uint64_t max_xy,
                                               unsigned jobs = 1);

struct PrimeCriterionHit {
  std::string equation;  // "x^4+4p^2y^4=z^2" or "4x^4+p^2y^4=z^2"
  BigInt divisor;        // d in (d x^2)^2 + ((2p/d) y^2)^2 = z^2
  QuarticSolution solution;
  RationalTriangle triangle;  // (d x / y, (2p/d) y / x, z / (x y))
  BigInt congruent_value;
};

/// Searches x^4 + 4p^2 y^4 = z^2, then 4x^4 + p^2 y^4 = z^2, for
/// 1 <= x, y <= max_xy. On a hit, rebuilds the triangle of area p.
/// Throws ParameterError when p is not prime.
std::optional<PrimeCriterionHit> prime_criterion_search(const BigInt& p, std::uint64_t max_xy);

struct PellSolution {
  BigInt k;
  BigInt l;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Smallest k with k^2 - 64p^2 = l^2 and l > 1, found by scanning the
/// complementary divisor pairs (k - l)(k + l) = 64p^2 of equal parity.
std::optional<PellSolution> pell_like_search(const BigInt& p);

struct UnitFractionTriple {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  friend bool operator==(const UnitFractionTriple&, const UnitFractionTriple&) = default;
};

struct UnitFractionReport {
  std::uint64_t max_abc = 0;
  std::uint64_t pairs_scanned = 0;
  std::uint64_t instances = 0;  // triples meeting 1/a + 1/b = 1/c, gcd(a,b,c) = 1
  std::vector<UnitFractionTriple> violations;  // instances where a + b is not a square
};

/// 1/a + 1/b = 1/c and gcd(a, b, c) = 1 (exact check, no search).
bool is_primitive_unit_fraction(const UnitFractionTriple& t);

UnitFractionReport unit_fraction_audit(std::uint64_t max_abc, unsigned jobs = 1);

struct SemiProperConstruction {
  BigInt value;
  RationalTriangle triangle;  // (x / y, a y, z / y)
};

/// From x^2 + a^2 y^4 = z^2 with a > 1, the triangle (x/y, a y, z/y) of area a x / 2.
/// Throws ContractError if the identity fails, DomainError if a x is odd.
SemiProperConstruction semi_proper_from_solution(const BigInt& a, const BigInt& x, const BigInt& y,
                                                 const BigInt& z);

/// Rewrites a witness's integer triple as k^2 sigma1^4 + l^2 sigma2^4 = c^2,
/// i.e. the quartic with coefficients (k^2, l^2) at (x, y) = (sigma1, sigma2).
QuarticSolution quartic_from_witness(const CongruentWitness& w);

}  // namespace congruent
