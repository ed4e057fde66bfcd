#include <doctest.h>

#include <random>

#include "congruent/factor.hpp"
#include "oracles.hpp"

using namespace congruent;

namespace {
std::vector<PrimePower> pp(std::initializer_list<std::pair<long, unsigned long>> l) {
  std::vector<PrimePower> out;
  for (auto [p, e] : l) out.push_back({BigInt(p), e});
  return out;
}
}  // namespace

TEST_CASE("isqrt and perfect squares") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    const std::uint64_t r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(is_perfect_square(n) == (r * r == n));
  }
  CHECK(isqrt(UINT64_MAX) == 4294967295ULL);
  const BigInt big = pow(BigInt(10), 40) + 7;
  const auto [root, rem] = isqrt_rem(big);
  CHECK(root * root + rem == big);
  CHECK(rem <= 2 * root);
  CHECK(exact_sqrt(BigInt(pow(BigInt(123456789), 2))) == BigInt(123456789));
  CHECK_FALSE(exact_sqrt(big).has_value());
  CHECK_FALSE(is_perfect_square(BigInt(-4)));
}

TEST_CASE("parse_bigint") {
  CHECK(parse_bigint("615222200900000000") == BigInt("615222200900000000"));
  CHECK_THROWS_AS(parse_bigint("12a"), ParameterError);
  CHECK_THROWS_AS(parse_bigint(""), ParameterError);
  CHECK(two_adic_valuation(BigInt(40)) == 3);
}

TEST_CASE("factorize examples") {
  CHECK(factorize(BigInt(1)).factors().empty());
  CHECK(factorize(BigInt(12)).factors() == pp({{2, 2}, {3, 1}}));
  CHECK(factorize(BigInt(13851)).factors() == pp({{3, 6}, {19, 1}}));
  CHECK_THROWS_AS(factorize(BigInt(0)), DomainError);
  CHECK_THROWS_AS(factorize(BigInt(-5)), DomainError);
}

TEST_CASE("factorize agrees with trial division") {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto f = factorize(n);
    const auto ref = oracle::factor(n);
    REQUIRE(f.factors().size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(f.factors()[i].prime == BigInt(ref[i].first));
      CHECK(f.factors()[i].exponent == ref[i].second);
    }
    CHECK(f.recompose() == n);
  }
}

TEST_CASE("factorize large composites") {
  // Two primes above the trial-division limit force the rho path.
  const BigInt p("1000000007"), q("998244353");
  const auto f = factorize(BigInt(p * p * q));
  CHECK(f.factors() == std::vector<PrimePower>{{q, 1}, {p, 2}});
  const BigInt r("18446744073709551557");  // largest 64-bit prime
  const auto g = factorize(BigInt(r * 6));
  CHECK(g.factors() == std::vector<PrimePower>{{2, 1}, {3, 1}, {r, 1}});
  CHECK(factorize(BigInt(BigInt(1) << 100)).factors() == pp({{2, 100}}));
}

TEST_CASE("Factorization invariants") {
  CHECK_THROWS_AS(Factorization(BigInt(12), pp({{3, 1}, {2, 2}})), ContractError);
  CHECK_THROWS_AS(Factorization(BigInt(12), pp({{2, 2}, {3, 0}})), ContractError);
  CHECK_THROWS_AS(Factorization(BigInt(13), pp({{2, 2}, {3, 1}})), ContractError);
  CHECK_THROWS_AS(Factorization(BigInt(8), pp({{4, 1}, {2, 1}})), ContractError);
  const auto m = multiply(factorize(BigInt(12)), factorize(BigInt(90)));
  CHECK(m.value() == 1080);
  CHECK(m.factors() == pp({{2, 3}, {3, 3}, {5, 1}}));
  CHECK(m.exponent_of(BigInt(3)) == 3);
  CHECK(m.exponent_of(BigInt(7)) == 0);
}

TEST_CASE("gcd") {
  CHECK(gcd(BigInt(5), BigInt(4)) == 1);
  CHECK(gcd(BigInt(0), BigInt(-9)) == 9);
  CHECK(gcd(BigInt(12), BigInt(18)) == 6);
}

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
}

TEST_CASE("squarefree and indicator") {
  CHECK(is_squarefree(BigInt(1)));
  CHECK(is_squarefree(BigInt(30)));
  CHECK_FALSE(is_squarefree(BigInt(12)));
  CHECK(mobius_indicator(BigInt(30)) == 1);
  CHECK(mobius_indicator(BigInt(12)) == 0);
  CHECK(mobius_indicator(BigInt(13851)) == 0);
  for (std::uint64_t n = 1; n <= 3000; ++n) CHECK(is_squarefree(n) == (oracle::square_part(n) == 1));
}

TEST_CASE("square_part") {
  CHECK(square_part(BigInt(1)) == 1);
  CHECK(square_part(BigInt(12)) == 2);
  CHECK(square_part(BigInt(13851)) == 27);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const std::uint64_t d = square_part(n);
    CHECK(d == oracle::square_part(n));
    CHECK(is_squarefree(n / (d * d)));
    CHECK(BigInt(square_part(BigInt(n))) == d);
  }
  CHECK_THROWS_AS(square_part(BigInt(0)), DomainError);
}

TEST_CASE("square_part is multiplicative on coprime pairs") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1000000);
  int checked = 0;
  while (checked < 2000) {
    const std::uint64_t a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++checked;
    CHECK(square_part(BigInt(BigInt(a) * b)) == BigInt(square_part(a)) * square_part(b));
  }
}

TEST_CASE("square_divisors and divisors") {
  CHECK(square_divisors(BigInt(1)) == std::vector<BigInt>{1});
  CHECK(square_divisors(BigInt(13851)) == std::vector<BigInt>{1, 3, 9, 27});
  CHECK(square_divisors(BigInt(8)) == std::vector<BigInt>{1, 2});
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::vector<BigInt> ref;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % (d * d) == 0) ref.push_back(d);
    }
    CHECK(square_divisors(BigInt(n)) == ref);
    std::vector<BigInt> all;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) all.push_back(d);
    }
    CHECK(divisors(factorize(n)) == all);
  }
}
