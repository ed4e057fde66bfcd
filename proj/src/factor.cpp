#include "congruent/factor.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace congruent {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using SmallFactors = std::vector<std::pair<u64, unsigned long>>;

// Trial division handles everything below this bound; larger cofactors go to
// Pollard-Brent once they are known to be composite.
constexpr u64 kTrialLimit = 1u << 16;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's cycle variant of Pollard rho. n is odd and composite. Fixed
// constants keep the output deterministic.
u64 pollard_brent_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::map<u64, unsigned long>& out) {
  if (n == 1) return;
  if (miller_rabin_u64(n)) {
    ++out[n];
    return;
  }
  const u64 d = pollard_brent_u64(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

SmallFactors factor_u64(u64 n) {
  SmallFactors out;
  auto take = [&](u64 p) {
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (u64 p = 5; p < kTrialLimit && p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n == 1) return out;
  if (n < kTrialLimit * kTrialLimit) {
    // No factor below sqrt(n) remains, so n is prime.
    out.emplace_back(n, 1);
    return out;
  }
  std::map<u64, unsigned long> large;
  split_u64(n, large);
  for (const auto& [p, e] : large) out.emplace_back(p, e);
  return out;
}

bool probably_prime(const BigInt& n) {
  if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x = 2, q = 1, g = 1, ys = 2, diff;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        g = congruent::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = congruent::gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_big(const BigInt& n, std::map<BigInt, unsigned long>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::map<u64, unsigned long> small;
    split_u64(to_u64(n), small);
    for (const auto& [p, e] : small) out[from_u64(p)] += e;
    return;
  }
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n);
  split_big(d, out);
  split_big(BigInt(n / d), out);
}

Factorization from_small(u64 value, const SmallFactors& small) {
  std::vector<PrimePower> factors;
  factors.reserve(small.size());
  for (const auto& [p, e] : small) factors.push_back({from_u64(p), e});
  return Factorization(from_u64(value), std::move(factors));
}

void require_positive(const BigInt& n, const char* op) {
  if (sgn(n) <= 0) {
    throw DomainError(std::string(op) + " requires a positive integer, got " + n.get_str());
  }
}

void require_positive(u64 n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + " requires a positive integer, got 0");
}

}  // namespace

Factorization::Factorization(BigInt value, std::vector<PrimePower> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {
  if (sgn(value_) <= 0) throw ContractError("factorization value must be positive");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw ContractError("zero exponent in factorization");
    if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime)) {
      throw ContractError("factorization primes not strictly increasing");
    }
  }
  if (recompose() != value_) throw ContractError("factorization does not multiply to its value");
}

BigInt Factorization::recompose() const {
  BigInt out = 1;
  for (const auto& f : factors_) out *= congruent::pow(f.prime, f.exponent);
  return out;
}

unsigned long Factorization::exponent_of(const BigInt& prime) const {
  for (const auto& f : factors_) {
    if (f.prime == prime) return f.exponent;
  }
  return 0;
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> merged;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].prime < fb[j].prime)) {
      merged.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].prime < fa[i].prime) {
      merged.push_back(fb[j++]);
    } else {
      merged.push_back({fa[i].prime, fa[i].exponent + fb[j].exponent});
      ++i;
      ++j;
    }
  }
  return Factorization(a.value() * b.value(), std::move(merged));
}

Factorization factorize(u64 n) {
  require_positive(n, "factorize");
  return from_small(n, factor_u64(n));
}

Factorization factorize(const BigInt& n) {
  require_positive(n, "factorize");
  if (fits_u64(n)) return factorize(to_u64(n));

  BigInt rest = n;
  std::map<BigInt, unsigned long> found;
  for (unsigned long p = 2; p < kTrialLimit; p = (p == 2 ? 3 : p + 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
    if (BigInt(p) * p > rest) break;
  }
  if (rest > 1) {
    if (rest < BigInt(kTrialLimit) * kTrialLimit) {
      ++found[rest];
    } else {
      split_big(rest, found);
    }
  }
  std::vector<PrimePower> factors;
  for (const auto& [p, e] : found) factors.push_back({p, e});
  return Factorization(n, std::move(factors));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool is_prime(u64 n) { return miller_rabin_u64(n); }

bool is_prime(const BigInt& n) {
  if (sgn(n) <= 0) return false;
  return probably_prime(n);
}

bool is_squarefree(u64 n) {
  require_positive(n, "is_squarefree");
  for (const auto& [p, e] : factor_u64(n)) {
    if (e > 1) return false;
  }
  return true;
}

bool is_squarefree(const BigInt& n) {
  require_positive(n, "is_squarefree");
  if (fits_u64(n)) return is_squarefree(to_u64(n));
  for (const auto& f : factorize(n).factors()) {
    if (f.exponent > 1) return false;
  }
  return true;
}

int mobius_indicator(u64 n) { return is_squarefree(n) ? 1 : 0; }
int mobius_indicator(const BigInt& n) { return is_squarefree(n) ? 1 : 0; }

u64 square_part(u64 n) {
  require_positive(n, "square_part");
  u64 out = 1;
  for (const auto& [p, e] : factor_u64(n)) {
    for (unsigned long i = 0; i < e / 2; ++i) out *= p;
  }
  return out;
}

BigInt square_part(const Factorization& f) {
  BigInt out = 1;
  for (const auto& pp : f.factors()) out *= congruent::pow(pp.prime, pp.exponent / 2);
  return out;
}

BigInt square_part(const BigInt& n) {
  require_positive(n, "square_part");
  if (fits_u64(n)) return from_u64(square_part(to_u64(n)));
  return square_part(factorize(n));
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> square_divisors(const Factorization& f) {
  std::vector<PrimePower> halved;
  BigInt value = 1;
  for (const auto& pp : f.factors()) {
    if (pp.exponent >= 2) {
      halved.push_back({pp.prime, pp.exponent / 2});
      value *= congruent::pow(pp.prime, pp.exponent / 2);
    }
  }
  return divisors(Factorization(value, std::move(halved)));
}

std::vector<BigInt> square_divisors(const BigInt& n) {
  require_positive(n, "square_divisors");
  return square_divisors(factorize(n));
}

}  // namespace congruent
