#include "congruent/diophantine.hpp"

#include <algorithm>
#include <numeric>

#include "congruent/factor.hpp"
#include "congruent/parallel.hpp"

namespace congruent {
namespace {

BigInt fourth(const BigInt& v) { return v * v * v * v; }

}  // namespace

bool satisfies_quartic(const QuarticSolution& s) {
  return s.a * fourth(s.x) + s.b * fourth(s.y) == s.z * s.z;
}

std::vector<QuarticSolution> search_quartic(const BigInt& a, const BigInt& b, std::uint64_t max_xy) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw ParameterError("search_quartic requires a, b >= 1");
  std::vector<BigInt> fourths;
  fourths.reserve(max_xy);
  for (std::uint64_t v = 1; v <= max_xy; ++v) fourths.push_back(fourth(from_u64(v)));

  std::vector<QuarticSolution> out;
  for (std::uint64_t x = 1; x <= max_xy; ++x) {
    const BigInt ax4 = a * fourths[x - 1];
    for (std::uint64_t y = 1; y <= max_xy; ++y) {
      const BigInt total = ax4 + b * fourths[y - 1];
      if (auto z = exact_sqrt(total)) out.push_back({a, b, from_u64(x), from_u64(y), *z});
    }
  }
  return out;
}

std::vector<QuarticCounterexample> audit_thm41(std::uint64_t max_ab, std::uint64_t max_xy, unsigned jobs) {
  if (max_ab < 2) return {};
  using Chunk = std::vector<QuarticCounterexample>;
  auto chunks = run_chunked<Chunk>(2, max_ab + 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    Chunk found;
    for (std::uint64_t a = lo; a < hi; ++a) {
      for (std::uint64_t b = 2; b <= max_ab; ++b) {
        if (std::gcd(a, b) != 1 || is_perfect_square(a + b)) continue;
        auto sols = search_quartic(from_u64(a), from_u64(b), max_xy);
        if (!sols.empty()) found.push_back({sols.front(), sols.size()});
      }
    }
    return found;
  });
  std::vector<QuarticCounterexample> out;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
  return out;
}

std::optional<PrimeCriterionHit> prime_criterion_search(const BigInt& p, std::uint64_t max_xy) {
  if (!is_prime(p)) throw ParameterError("prime_criterion_search requires a prime, got " + p.get_str());

  struct Form {
    const char* tag;
    BigInt d;
  };
  const Form forms[] = {{"x^4+4p^2y^4=z^2", 1}, {"4x^4+p^2y^4=z^2", 2}};
  for (const Form& form : forms) {
    const BigInt other = 2 * p / form.d;
    const auto sols = search_quartic(form.d * form.d, other * other, max_xy);
    if (sols.empty()) continue;
    const QuarticSolution& s = sols.front();
    RationalTriangle tri = make_triangle(Rational(form.d * s.x, s.y), Rational(other * s.y, s.x),
                                         Rational(s.z, s.x * s.y));
    const Rational value = area(tri);
    if (value != Rational(p)) throw ContractError("reconstructed area differs from p");
    return PrimeCriterionHit{form.tag, form.d, s, std::move(tri), p};
  }
  return std::nullopt;
}

std::optional<PellSolution> pell_like_search(const BigInt& p) {
  if (!is_prime(p)) throw ParameterError("pell_like_search requires a prime, got " + p.get_str());
  const BigInt target = 64 * p * p;
  const std::vector<BigInt> divs = divisors(factorize(target));

  // k = (u + v) / 2 with u v = target shrinks as u approaches sqrt(target)
  // from below, so the first admissible pair walking down is the smallest k.
  std::optional<PellSolution> best;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const BigInt& u = *it;
    const BigInt v = target / u;
    if (!(u < v)) continue;
    if (mpz_odd_p(u.get_mpz_t()) != mpz_odd_p(v.get_mpz_t())) continue;
    const BigInt l = (v - u) / 2;
    if (l <= 1) continue;
    best = PellSolution{(u + v) / 2, l};
    break;
  }
  if (best && best->k * best->k - target != best->l * best->l) {
    throw ContractError("divisor pair does not solve k^2 - 64p^2 = l^2");
  }
  return best;
}

bool is_primitive_unit_fraction(const UnitFractionTriple& t) {
  if (t.a == 0 || t.b == 0 || t.c == 0) return false;
  // 1/a + 1/b = 1/c  <=>  c (a + b) = a b
  const BigInt lhs = from_u64(t.c) * (from_u64(t.a) + from_u64(t.b));
  const BigInt rhs = from_u64(t.a) * from_u64(t.b);
  return lhs == rhs && std::gcd(std::gcd(t.a, t.b), t.c) == 1;
}

UnitFractionReport unit_fraction_audit(std::uint64_t max_abc, unsigned jobs) {
  if (max_abc < 2) throw ParameterError("unit_fraction_audit requires a bound >= 2");
  struct Chunk {
    std::uint64_t instances = 0;
    std::vector<UnitFractionTriple> violations;
  };
  auto chunks = run_chunked<Chunk>(1, max_abc + 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
    Chunk out;
    for (std::uint64_t a = lo; a < hi; ++a) {
      for (std::uint64_t b = 1; b <= max_abc; ++b) {
        const std::uint64_t prod = a * b, sum = a + b;
        if (prod % sum != 0) continue;
        const std::uint64_t c = prod / sum;
        if (c > max_abc || std::gcd(std::gcd(a, b), c) != 1) continue;
        ++out.instances;
        if (!is_perfect_square(sum)) out.violations.push_back({a, b, c});
      }
    }
    return out;
  });
  UnitFractionReport report;
  report.max_abc = max_abc;
  report.pairs_scanned = max_abc * max_abc;
  for (auto& c : chunks) {
    report.instances += c.instances;
    std::move(c.violations.begin(), c.violations.end(), std::back_inserter(report.violations));
  }
  return report;
}

SemiProperConstruction semi_proper_from_solution(const BigInt& a, const BigInt& x, const BigInt& y,
                                                 const BigInt& z) {
  if (sgn(a) <= 0 || sgn(x) <= 0 || sgn(y) <= 0 || sgn(z) <= 0) {
    throw ParameterError("semi_proper_from_solution requires positive a, x, y, z");
  }
  if (x * x + a * a * fourth(y) != z * z) {
    throw ContractError("x^2 + a^2 y^4 != z^2 for (a, x, y, z) = (" + a.get_str() + ", " + x.get_str() +
                        ", " + y.get_str() + ", " + z.get_str() + ")");
  }
  if (a <= 1) throw ParameterError("semi_proper_from_solution requires a > 1");
  const BigInt ax = a * x;
  if (mpz_odd_p(ax.get_mpz_t())) throw DomainError("a x is odd, so a x / 2 is not an integer");

  RationalTriangle tri = make_triangle(Rational(x, y), Rational(a * y), Rational(z, y));
  BigInt value = ax / 2;
  if (area(tri) != Rational(value)) throw ContractError("semi-proper triangle area differs from a x / 2");
  return {std::move(value), std::move(tri)};
}

QuarticSolution quartic_from_witness(const CongruentWitness& w) {
  const IntegerTriple t = to_integer_triple(w.triangle);
  // The integer triple is the seed (odd leg, even leg, c) up to leg order.
  BigInt odd = t.da, even = t.bc;
  if (mpz_even_p(odd.get_mpz_t())) std::swap(odd, even);
  const BigInt s1sq = w.sigma1 * w.sigma1, s2sq = w.sigma2 * w.sigma2;
  if (!mpz_divisible_p(odd.get_mpz_t(), s1sq.get_mpz_t()) ||
      !mpz_divisible_p(even.get_mpz_t(), s2sq.get_mpz_t())) {
    throw ContractError("witness legs not divisible by sigma1^2 and sigma2^2");
  }
  const BigInt k = odd / s1sq, l = even / s2sq;
  QuarticSolution q{k * k, l * l, w.sigma1, w.sigma2, t.e};
  if (!satisfies_quartic(q)) throw ContractError("restructured quartic does not hold");
  return q;
}

}  // namespace congruent
