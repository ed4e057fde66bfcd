#include <doctest.h>

#include "congruent/diophantine.hpp"
#include "congruent/factor.hpp"
#include "oracles.hpp"

using namespace congruent;

namespace {
bool contains(const std::vector<QuarticSolution>& v, long x, long y, long z) {
  return std::any_of(v.begin(), v.end(), [&](const auto& s) { return s.x == x && s.y == y && s.z == z; });
}
}  // namespace

TEST_CASE("search_quartic") {
  CHECK(contains(search_quartic(BigInt(2), BigInt(7), 5), 1, 1, 3));
  CHECK(contains(search_quartic(BigInt(2), BigInt(17), 5), 2, 1, 7));
  CHECK(contains(search_quartic(BigInt(1), BigInt(100), 5), 3, 2, 41));
  CHECK_THROWS_AS(search_quartic(BigInt(0), BigInt(1), 5), ParameterError);
  // Every reported solution satisfies the equation, and brute force finds no others.
  for (long a = 1; a <= 6; ++a) {
    for (long b = 1; b <= 6; ++b) {
      const auto sols = search_quartic(BigInt(a), BigInt(b), 12);
      std::size_t expected = 0;
      for (std::uint64_t x = 1; x <= 12; ++x) {
        for (std::uint64_t y = 1; y <= 12; ++y) {
          const std::uint64_t v = a * x * x * x * x + b * y * y * y * y;
          const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)) + 0.5);
          expected += r * r == v ? 1 : 0;
        }
      }
      CHECK(sols.size() == expected);
      for (const auto& s : sols) CHECK(satisfies_quartic(s));
    }
  }
}

TEST_CASE("audit_thm41") {
  const auto found = audit_thm41(20, 5);
  CHECK(std::any_of(found.begin(), found.end(), [](const auto& c) {
    return c.witness.a == 2 && c.witness.b == 17 && c.witness.x == 2 && c.witness.y == 1 && c.witness.z == 7;
  }));
  CHECK(audit_thm41(5, 1).empty());
  const auto big1 = audit_thm41(50, 10, 1), big4 = audit_thm41(50, 10, 4);
  CHECK_FALSE(big1.empty());
  REQUIRE(big1.size() == big4.size());
  for (std::size_t i = 0; i < big1.size(); ++i) CHECK(big1[i].witness == big4[i].witness);
  for (const auto& c : big1) {
    CHECK(satisfies_quartic(c.witness));
    CHECK_FALSE(is_perfect_square(BigInt(c.witness.a + c.witness.b)));
  }
}

TEST_CASE("prime_criterion_search") {
  const auto hit = prime_criterion_search(BigInt(5), 10);
  REQUIRE(hit.has_value());
  CHECK(hit->equation == "x^4+4p^2y^4=z^2");
  CHECK(hit->solution.x == 3);
  CHECK(hit->solution.y == 2);
  CHECK(hit->solution.z == 41);
  CHECK(hit->congruent_value == 5);
  CHECK(area(hit->triangle) == Rational(5));
  CHECK_THROWS_AS(prime_criterion_search(BigInt(6), 10), ParameterError);
  CHECK_FALSE(prime_criterion_search(BigInt(2), 20).has_value());
}

TEST_CASE("pell_like_search") {
  CHECK(pell_like_search(BigInt(5)) == PellSolution{41, 9});
  CHECK(pell_like_search(BigInt(2)) == PellSolution{20, 12});
  const auto p3 = pell_like_search(BigInt(3));
  REQUIRE(p3.has_value());
  CHECK(p3->k * p3->k - 576 == p3->l * p3->l);
  CHECK(p3->l > 1);
  CHECK(BigInt(26) * 26 - 576 == 100);  // the (26, 10) solution also satisfies the equation
  CHECK_THROWS_AS(pell_like_search(BigInt(6)), ParameterError);
  // Smallest-k check against a direct scan.
  for (std::uint64_t p = 2; p < 60; ++p) {
    if (!oracle::is_prime(p)) continue;
    const auto sol = pell_like_search(BigInt(p));
    REQUIRE(sol.has_value());
    for (std::uint64_t k = 1; k < sol->k; ++k) {
      if (k * k <= 64 * p * p) continue;
      const std::uint64_t l2 = k * k - 64 * p * p;
      const auto l = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(l2)) + 0.5);
      CHECK_FALSE((l * l == l2 && l > 1));
    }
  }
}

TEST_CASE("unit fractions") {
  CHECK(is_primitive_unit_fraction({3, 6, 2}));
  CHECK(is_primitive_unit_fraction({4, 12, 3}));
  CHECK_FALSE(is_primitive_unit_fraction({6, 12, 4}));
  const auto r = unit_fraction_audit(2000, 4);
  CHECK(r.violations.empty());
  CHECK(r.instances > 0);
  const auto small = unit_fraction_audit(50, 1);
  std::uint64_t brute = 0;
  for (std::uint64_t a = 1; a <= 50; ++a) {
    for (std::uint64_t b = 1; b <= 50; ++b) {
      for (std::uint64_t c = 1; c <= 50; ++c) {
        if ((a + b) * c == a * b && std::gcd(std::gcd(a, b), c) == 1) ++brute;
      }
    }
  }
  CHECK(small.instances == brute);
  CHECK_THROWS_AS(unit_fraction_audit(1), ParameterError);
}

TEST_CASE("semi_proper_from_solution") {
  const auto c = semi_proper_from_solution(BigInt(20), BigInt(21), BigInt(1), BigInt(29));
  CHECK(c.value == 210);
  CHECK(c.triangle == make_triangle(21, 20, 29));
  const auto d = semi_proper_from_solution(BigInt(6), BigInt(8), BigInt(1), BigInt(10));
  CHECK(d.value == 24);
  CHECK(d.triangle == make_triangle(8, 6, 10));
  CHECK_THROWS_AS(semi_proper_from_solution(BigInt(1), BigInt(1), BigInt(1), BigInt(2)), ContractError);
  CHECK_THROWS_AS(semi_proper_from_solution(BigInt(1), BigInt(3), BigInt(2), BigInt(5)), ParameterError);
  CHECK_THROWS_AS(semi_proper_from_solution(BigInt(3), BigInt(5), BigInt(2), BigInt(13)), DomainError);
}

TEST_CASE("quartic_from_witness") {
  const auto ws = candidates_from_seed(BigInt(5), BigInt(4));
  for (const auto& w : ws) {
    const auto q = quartic_from_witness(w);
    CHECK(satisfies_quartic(q));
    CHECK(q.z == 41);
  }
}
