#include <doctest.h>

#include <map>
#include <set>

#include "congruent/generators.hpp"
#include "congruent/triples.hpp"

using namespace congruent;

namespace {
std::vector<PrimePower> pp(std::initializer_list<std::pair<long, unsigned long>> l) {
  std::vector<PrimePower> out;
  for (auto [p, e] : l) out.push_back({BigInt(p), e});
  return out;
}

Factorization fact(long value, std::initializer_list<std::pair<long, unsigned long>> l) {
  return Factorization(BigInt(value), pp(l));
}
}  // namespace

TEST_CASE("improper_area") {
  CHECK(improper_area(BigInt(2), BigInt(1)) == 6);
  CHECK(improper_area(BigInt(5), BigInt(4)) == 180);
  CHECK(improper_area(BigInt(3), BigInt(2)) == 30);
  CHECK_THROWS_AS(improper_area(BigInt(3), BigInt(1)), ParameterError);
}

TEST_CASE("candidates from (2,1)") {
  const auto ws = candidates_from_seed(BigInt(2), BigInt(1));
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].value == 6);
  CHECK(ws[0].klass == CongruenceClass::Improper);
}

TEST_CASE("candidates from (5,4) include the Fibonacci triangle") {
  const auto ws = candidates_from_seed(BigInt(5), BigInt(4));
  std::set<BigInt> values;
  for (const auto& w : ws) values.insert(w.value);
  CHECK(values == std::set<BigInt>{5, 20, 45, 180});
  const auto it = std::find_if(ws.begin(), ws.end(), [](const auto& w) { return w.sigma1 == 3 && w.sigma2 == 2; });
  REQUIRE(it != ws.end());
  CHECK(it->value == 5);
  CHECK(it->klass == CongruenceClass::Proper);
  CHECK(it->triangle == make_triangle(Rational(3, 2), Rational(20, 3), Rational(41, 6)));
  CHECK_THROWS_AS(candidates_from_seed(BigInt(4), BigInt(2)), ParameterError);
}

TEST_CASE("distinct values") {
  CHECK(distinct_values_from_seed(BigInt(2), BigInt(1)) == std::vector<BigInt>{6});
  CHECK(distinct_values_from_seed(BigInt(5), BigInt(4)) == std::vector<BigInt>{5, 20, 45, 180});
  const auto v = distinct_values_from_seed(BigInt(16), BigInt(9));
  CHECK(std::find(v.begin(), v.end(), BigInt(7)) != v.end());
}

TEST_CASE("witness properties over all seeds m <= 60") {
  std::size_t count = 0;
  for (long m = 2; m <= 60; ++m) {
    for (long n = 1; n < m; ++n) {
      if (!is_valid_seed(BigInt(m), BigInt(n))) continue;
      const auto t = euclid_triple(BigInt(m), BigInt(n));
      const BigInt area4 = BigInt(m) * n * (m - n) * (m + n);
      std::set<BigInt> values;
      for (const auto& w : candidates_from_seed(BigInt(m), BigInt(n))) {
        ++count;
        const BigInt k = w.sigma1 * w.sigma2;
        CHECK(area(w.triangle) == Rational(w.value));
        CHECK(w.value * k * k == area4);
        CHECK(w.triangle == scaled_triangle(t.a, t.b, t.c, k));
        CHECK(hyp_denominator_law(w.triangle));
        const IntegerTriple it = to_integer_triple(w.triangle);
        CHECK(it.e == t.c);
        CHECK(((it.da == t.a && it.bc == t.b) || (it.da == t.b && it.bc == t.a)));
        CHECK(classify(w.triangle) == w.klass);
        values.insert(w.value);
      }
      CHECK(distinct_values_from_seed(BigInt(m), BigInt(n)).size() == values.size());
    }
  }
  CHECK(count > 0);
}

TEST_CASE("thm74_count") {
  CHECK(thm74_count(fact(3, {{3, 1}}), fact(4, {{2, 2}})) == 1);
  CHECK(thm74_count(fact(9, {{3, 2}}), fact(20, {{2, 2}, {5, 1}})) == 2);
  CHECK(thm74_count(Factorization(), Factorization()) == 0);
}

TEST_CASE("seed_factors") {
  const auto f = seed_factors(BigInt(5), BigInt(4));
  CHECK(f.odd_leg.value() == 9);
  CHECK(f.mn.value() == 20);
}
