#include "congruent/generators.hpp"

#include <algorithm>

#include "congruent/triples.hpp"

namespace congruent {

BigInt improper_area(const BigInt& m, const BigInt& n) {
  validate_seed(m, n);
  return m * n * (m - n) * (m + n);
}

SeedFactors seed_factors(const BigInt& m, const BigInt& n) {
  validate_seed(m, n);
  return {multiply(factorize(BigInt(m - n)), factorize(BigInt(m + n))),
          multiply(factorize(m), factorize(n))};
}

std::vector<CongruentWitness> candidates_from_seed(const BigInt& m, const BigInt& n) {
  const PrimitiveTriple seed = euclid_triple(m, n);
  const BigInt full = improper_area(m, n);
  const SeedFactors f = seed_factors(m, n);

  std::vector<CongruentWitness> out;
  for (const BigInt& s1 : square_divisors(f.odd_leg)) {
    for (const BigInt& s2 : square_divisors(f.mn)) {
      const BigInt scale = s1 * s2;
      const BigInt scale_sq = scale * scale;
      if (!mpz_divisible_p(full.get_mpz_t(), scale_sq.get_mpz_t())) {
        throw ContractError("area not divisible by (sigma1 sigma2)^2");
      }
      BigInt value = full / scale_sq;
      RationalTriangle tri = scaled_triangle(seed.a, seed.b, seed.c, scale);
      if (area(tri) != Rational(value)) throw ContractError("witness area differs from its value");
      const CongruenceClass klass = classify(tri);
      out.push_back({std::move(value), m, n, s1, s2, std::move(tri), klass});
    }
  }
  return out;
}

std::vector<BigInt> distinct_values_from_seed(const BigInt& m, const BigInt& n) {
  std::vector<BigInt> values;
  for (const auto& w : candidates_from_seed(m, n)) values.push_back(w.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

BigInt thm74_count(const Factorization& alpha, const Factorization& beta) {
  const auto& fa = alpha.factors();
  const auto& fb = beta.factors();
  const std::size_t len = std::max(fa.size(), fb.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const unsigned long ea = i < fa.size() ? fa[i].exponent : 0;
    const unsigned long eb = i < fb.size() ? fb[i].exponent : 0;
    total += (ea + eb) / 2;
  }
  return total;
}

}  // namespace congruent
