#include "congruent/triples.hpp"

#include "congruent/factor.hpp"

namespace congruent {

void validate_seed(const BigInt& m, const BigInt& n) {
  if (sgn(n) <= 0) throw ParameterError("seed requires n >= 1, got n = " + n.get_str());
  if (!(m > n)) {
    throw ParameterError("seed requires m > n, got (" + m.get_str() + ", " + n.get_str() + ")");
  }
  if (gcd(m, n) != 1) {
    throw ParameterError("seed requires gcd(m, n) = 1, got (" + m.get_str() + ", " + n.get_str() + ")");
  }
  if (mpz_odd_p(m.get_mpz_t()) == mpz_odd_p(n.get_mpz_t())) {
    throw ParameterError("seed requires m and n of opposite parity, got (" + m.get_str() + ", " +
                         n.get_str() + ")");
  }
}

bool is_valid_seed(const BigInt& m, const BigInt& n) {
  return sgn(n) > 0 && m > n && gcd(m, n) == 1 &&
         mpz_odd_p(m.get_mpz_t()) != mpz_odd_p(n.get_mpz_t());
}

bool is_valid_seed(std::uint64_t m, std::uint64_t n) {
  if (n == 0 || m <= n || ((m ^ n) & 1) == 0) return false;
  std::uint64_t x = m, y = n;
  while (y != 0) {
    x %= y;
    std::swap(x, y);
  }
  return x == 1;
}

PrimitiveTriple euclid_triple(const BigInt& m, const BigInt& n) {
  validate_seed(m, n);
  return {m, n, m * m - n * n, 2 * m * n, m * m + n * n};
}

void for_each_triple(const BigInt& max_c, const std::function<bool(const PrimitiveTriple&)>& visit) {
  // c = m^2 + n^2 > m^2, so m^2 < max_c bounds the outer loop.
  for (BigInt m = 2; m * m < max_c; ++m) {
    for (BigInt n = 1; n < m; ++n) {
      if (m * m + n * n > max_c) break;
      if (!is_valid_seed(m, n)) continue;
      if (!visit({m, n, m * m - n * n, 2 * m * n, m * m + n * n})) return;
    }
  }
}

std::vector<PrimitiveTriple> enumerate_triples(const BigInt& max_c) {
  std::vector<PrimitiveTriple> out;
  for_each_triple(max_c, [&](const PrimitiveTriple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

BigInt sum_diff_gcd(const BigInt& m, const BigInt& n) {
  if (sgn(n) <= 0) throw ParameterError("sum_diff_gcd requires n >= 1");
  if (!(m > n)) throw ParameterError("sum_diff_gcd requires m > n");
  if (gcd(m, n) != 1) throw ParameterError("sum_diff_gcd requires gcd(m, n) = 1");
  const BigInt g = gcd(BigInt(m - n), BigInt(m + n));
  if (g != 1 && g != 2) throw ContractError("gcd(m - n, m + n) outside {1, 2}: " + g.get_str());
  return g;
}

}  // namespace congruent
