#include "congruent/oracle.hpp"

#include <atomic>
#include <limits>
#include <numeric>
#include <optional>

#include "congruent/generators.hpp"
#include "congruent/parallel.hpp"
#include "congruent/triples.hpp"

namespace congruent {
namespace {

using u64 = std::uint64_t;

struct Hit {
  u64 m = 0;
  u64 n = 0;
  BigInt k;
};

// Largest max_m for which m n (m - n)(m + n) < m^4 stays below 2^64.
constexpr u64 kMaxNativeM = 65535;

// Scans m in [lo, hi) and returns the first hit in scan order. Stops early
// once a lower range has already reported a hit.
std::optional<Hit> scan_native(u64 target, u64 lo, u64 hi, std::atomic<u64>& best_m) {
  for (u64 m = std::max<u64>(lo, 2); m < hi; ++m) {
    if (m > best_m.load(std::memory_order_relaxed)) return std::nullopt;
    for (u64 n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      const u64 area = m * n * (m - n) * (m + n);
      if (area % target != 0) continue;
      if (auto k = exact_sqrt(area / target)) {
        u64 seen = best_m.load();
        while (m < seen && !best_m.compare_exchange_weak(seen, m)) {
        }
        return Hit{m, n, from_u64(*k)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Hit> scan_big(const BigInt& target, u64 lo, u64 hi, std::atomic<u64>& best_m) {
  BigInt area, quotient;
  for (u64 m = std::max<u64>(lo, 2); m < hi; ++m) {
    if (m > best_m.load(std::memory_order_relaxed)) return std::nullopt;
    const BigInt bm = from_u64(m);
    for (u64 n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      const BigInt bn = from_u64(n);
      area = bm * bn * (bm - bn) * (bm + bn);
      if (!mpz_divisible_p(area.get_mpz_t(), target.get_mpz_t())) continue;
      mpz_divexact(quotient.get_mpz_t(), area.get_mpz_t(), target.get_mpz_t());
      if (auto k = exact_sqrt(quotient)) {
        u64 seen = best_m.load();
        while (m < seen && !best_m.compare_exchange_weak(seen, m)) {
        }
        return Hit{m, n, *k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CertifyResult certify(const BigInt& target, u64 max_m, unsigned jobs) {
  if (sgn(target) <= 0) throw DomainError("certify requires a positive target");
  if (max_m < 2) throw ParameterError("certify requires max_m >= 2");

  std::atomic<u64> best_m{std::numeric_limits<u64>::max()};
  const bool native = fits_u64(target) && max_m <= kMaxNativeM;
  const u64 t = native ? to_u64(target) : 0;
  auto chunks = run_chunked<std::optional<Hit>>(2, max_m + 1, jobs, [&](u64 lo, u64 hi) {
    return native ? scan_native(t, lo, hi, best_m) : scan_big(target, lo, hi, best_m);
  });

  for (auto& hit : chunks) {
    if (!hit) continue;
    const BigInt m = from_u64(hit->m), n = from_u64(hit->n);
    const PrimitiveTriple seed = euclid_triple(m, n);
    Certificate cert{target, m, n, hit->k, scaled_triangle(seed.a, seed.b, seed.c, hit->k)};
    if (!verify_certificate(cert)) throw ContractError("certificate failed re-verification");
    return cert;
  }
  return UnknownUpToBound{target, max_m};
}

bool verify_certificate(const Certificate& c) {
  if (!is_valid_seed(c.seed_m, c.seed_n) || sgn(c.scale_k) <= 0) return false;
  if (improper_area(c.seed_m, c.seed_n) != c.value * c.scale_k * c.scale_k) return false;
  const PrimitiveTriple seed = euclid_triple(c.seed_m, c.seed_n);
  const Rational k(c.scale_k);
  const auto& t = c.triangle;
  if (t.leg1() * t.leg1() + t.leg2() * t.leg2() != t.hyp() * t.hyp()) return false;
  if (!(t.leg1() * k == Rational(seed.a) && t.leg2() * k == Rational(seed.b) &&
        t.hyp() * k == Rational(seed.c))) {
    return false;
  }
  return area(t) == Rational(c.value);
}

std::vector<PowerOfTwoResult> audit_conjecture31(unsigned max_power, u64 max_m, unsigned jobs) {
  std::vector<PowerOfTwoResult> out;
  for (unsigned j = 1; j <= max_power; ++j) {
    BigInt value = congruent::pow(BigInt(2), j);
    CertifyResult r = certify(value, max_m, jobs);
    out.push_back({j, std::move(value), std::move(r)});
  }
  return out;
}

}  // namespace congruent
