// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "congruent/audit.hpp"
#include "congruent/diophantine.hpp"
#include "congruent/factor.hpp"
#include "congruent/generators.hpp"
#include "congruent/oracle.hpp"
#include "congruent/records.hpp"
#include "congruent/triples.hpp"
#include "oracles.hpp"

using namespace congruent;
using u64 = std::uint64_t;

namespace {

const unsigned kJobs = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s && out.ok) {
    out.ok = false;
    out.detail = "runtime limit " + std::to_string(limit_s) + " s exceeded";
  }
  std::printf("%s [%2d] %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", n, title, secs, out.ok ? "" : ": ",
              out.detail.c_str());
  if (!out.ok) ++failures;
}

bool same_triangle(const RationalTriangle& t, Rational a, Rational b, Rational c) {
  return t == make_triangle(std::move(a), std::move(b), std::move(c));
}

bool integer_identity(const RationalTriangle& t) {
  const BigInt da = t.leg2().den() * t.leg1().num(), bc = t.leg1().den() * t.leg2().num();
  return hyp_denominator_law(t) && t.hyp().num() * t.hyp().num() == da * da + bc * bc;
}

}  // namespace

int main() {
  criterion(1, "Euclid enumeration equals brute force for c <= 1000", 1.0, [](Outcome& o) {
    std::set<std::tuple<u64, u64, u64>> got;
    for (const auto& t : enumerate_triples(BigInt(1000))) {
      u64 a = to_u64(t.a), b = to_u64(t.b);
      if (a > b) std::swap(a, b);
      got.emplace(a, b, to_u64(t.c));
    }
    const auto brute = oracle::primitive_triples(1000);
    o.require(got == brute, "sets differ");
    o.require(brute.size() == 158, "unexpected brute-force count " + std::to_string(brute.size()));
  });

  criterion(2, "square_part(n) = brute force for n <= 10^6; multiplicative on 10^4 coprime pairs", 30.0,
            [](Outcome& o) {
              const u64 N = 1000000;
              std::vector<u64> best(N + 1, 1);
              for (u64 d = 2; d * d <= N; ++d) {
                for (u64 k = d * d; k <= N; k += d * d) best[k] = d;
              }
              for (u64 n = 1; n <= N; ++n) {
                if (square_part(n) != best[n]) {
                  o.require(false, "n = " + std::to_string(n));
                  return;
                }
              }
              std::mt19937_64 rng(1729);
              std::uniform_int_distribution<u64> dist(1, 1000000000);
              int pairs = 0;
              while (pairs < 10000) {
                const u64 a = dist(rng), b = dist(rng);
                if (std::gcd(a, b) != 1) continue;
                ++pairs;
                const BigInt lhs = square_part(BigInt(BigInt(a) * b));
                o.require(lhs == BigInt(square_part(a)) * square_part(b),
                          "pair " + std::to_string(a) + ", " + std::to_string(b));
              }
            });

  criterion(3, "Fibonacci triangle: certify(5, 10) and the (5,4) witness with sigmas (3,2)", 0, [](Outcome& o) {
    const auto r = certify(5, 10);
    o.require(std::holds_alternative<Certificate>(r), "5 not certified");
    if (!o.ok) return;
    const auto& c = std::get<Certificate>(r);
    o.require(same_triangle(c.triangle, Rational(3, 2), Rational(20, 3), Rational(41, 6)), "wrong triangle");
    o.require(area(c.triangle) == Rational(5), "area is not 5");
    const auto ws = candidates_from_seed(BigInt(5), BigInt(4));
    const bool has = std::any_of(ws.begin(), ws.end(), [](const CongruentWitness& w) {
      return w.value == 5 && w.sigma1 == 3 && w.sigma2 == 2 && w.klass == CongruenceClass::Proper;
    });
    o.require(has, "(5,4) has no proper value-5 witness with sigmas (3,2)");
  });

  criterion(4, "certify(6, 10) = seed (2,1) k=1; certify(7, 20) = seed (16,9) k=60", 0, [](Outcome& o) {
    struct Case {
      long target, max_m, m, n, k;
    };
    for (const Case& cs : {Case{6, 10, 2, 1, 1}, Case{7, 20, 16, 9, 60}}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = certify(cs.target, cs.max_m, kJobs);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(secs < 1.0, "certify(" + std::to_string(cs.target) + ") took over 1 s");
      o.require(std::holds_alternative<Certificate>(r), std::to_string(cs.target) + " not certified");
      if (!o.ok) return;
      const auto& c = std::get<Certificate>(r);
      o.require(c.seed_m == cs.m && c.seed_n == cs.n && c.scale_k == cs.k,
                "certificate for " + std::to_string(cs.target) + " is " + to_json(c).dump());
      o.require(area(c.triangle) == Rational(cs.target) && verify_certificate(c), "area re-verification failed");
    }
  });

  criterion(5, "thm-4.2 at max_abc = 2000 is verified_in_bounds with no violations", 60.0, [](Outcome& o) {
    const auto r = run_claim("thm-4.2", {{"max_abc", 2000}}, kJobs);
    o.require(r.status == ClaimStatus::VerifiedInBounds, "status " + std::string(to_string(r.status)));
    o.require(r.witnesses.empty(), "violations recorded");
  });

  criterion(6, "thm-4.1 at (50, 10) is a counterexample containing (2,17,2,1,7)", 30.0, [](Outcome& o) {
    const auto r = run_claim("thm-4.1", {{"max_ab", 50}, {"max_xy", 10}}, kJobs);
    o.require(r.status == ClaimStatus::Counterexample, "status " + std::string(to_string(r.status)));
    bool found = false;
    for (const auto& w : r.witnesses) {
      found |= w["a"] == "2" && w["b"] == "17" && w["x"] == "2" && w["y"] == "1" && w["z"] == "7";
    }
    o.require(found, "(2,17,2,1,7) missing from witnesses");
    o.require(2 * 16 + 17 * 1 == 49 && is_perfect_square(BigInt(49)) && !is_perfect_square(BigInt(19)),
              "arithmetic of the witness");
  });

  criterion(7, "lemma-2.1, prop-3.2, prop-3.3 at max_m = 500 are verified_in_bounds", 5.0, [](Outcome& o) {
    for (const char* id : {"lemma-2.1", "prop-3.2", "prop-3.3"}) {
      const auto r = run_claim(id, {{"max_m", 500}}, kJobs);
      o.require(r.status == ClaimStatus::VerifiedInBounds, std::string(id) + " " + std::string(to_string(r.status)));
      o.require(r.checked_count > 0, std::string(id) + " checked nothing");
    }
  });

  criterion(8, "pell_like_search(5) = (41, 9); prime_criterion_search(5, 10) = (3,2,41), value 5", 1.0,
            [](Outcome& o) {
              o.require(pell_like_search(BigInt(5)) == PellSolution{41, 9}, "pell result");
              const auto hit = prime_criterion_search(BigInt(5), 10);
              o.require(hit.has_value(), "no hit for p = 5");
              if (!o.ok) return;
              o.require(hit->equation == "x^4+4p^2y^4=z^2" && hit->solution.a == 1 && hit->solution.b == 100,
                        "wrong equation");
              o.require(hit->solution.x == 3 && hit->solution.y == 2 && hit->solution.z == 41, "wrong solution");
              o.require(hit->congruent_value == 5 && area(hit->triangle) == Rational(5), "reconstructed value");
            });

  criterion(9, "denominator law and e^2 = (da)^2 + (bc)^2 for all witnesses m <= 60 and certificates", 0,
            [](Outcome& o) {
              u64 count = 0;
              for (u64 m = 2; m <= 60; ++m) {
                for (u64 n = 1; n < m; ++n) {
                  if (!is_valid_seed(m, n)) continue;
                  for (const auto& w : candidates_from_seed(BigInt(m), BigInt(n))) {
                    ++count;
                    o.require(integer_identity(w.triangle), "witness " + to_json(w).dump());
                  }
                }
              }
              for (auto [t, mm] : {std::pair{5, 10}, std::pair{6, 10}, std::pair{7, 20}}) {
                const auto r = certify(t, mm);
                o.require(std::holds_alternative<Certificate>(r) &&
                              integer_identity(std::get<Certificate>(r).triangle),
                          "certificate for " + std::to_string(t));
              }
              o.require(count > 0, "no witnesses");
            });

  criterion(10, "table-3.1 report is deterministic and every recomputed value re-verifies", 0, [](Outcome& o) {
    const auto a = audit_table31(), b = audit_table31();
    o.require(to_json(a).dump() == to_json(b).dump(), "reports differ");
    o.require(a.checked_count == 10, "rows checked " + std::to_string(a.checked_count));
    const auto& rows = table31_rows();
    auto eval = [](const std::vector<std::pair<unsigned, unsigned>>& f) {
      mpz_class v = 1;
      for (auto [p, e] : f) {
        for (unsigned i = 0; i < e; ++i) v *= p;
      }
      return v;
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      mpq_class q(eval(rows[i].a) * eval(rows[i].c), 2 * eval(rows[i].b) * eval(rows[i].d));
      q.canonicalize();
      const std::string recomputed = q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
      const auto w = std::find_if(a.witnesses.begin(), a.witnesses.end(),
                                  [&](const json& j) { return j.contains("row") && j["row"] == i + 1; });
      if (w == a.witnesses.end()) {
        o.require(recomputed == rows[i].printed_value, "row " + std::to_string(i + 1) + " unreported mismatch");
      } else {
        o.require((*w)["recomputed_value"] == recomputed, "row " + std::to_string(i + 1) + " recomputation");
      }
    }
  });

  criterion(11, "thm-7.4 for m <= 30 under both count readings; (2,1) agrees", 0, [](Outcome& o) {
    const auto a = run_claim("thm-7.4", {{"max_m", 30}}), b = run_claim("thm-7.4", {{"max_m", 30}}, kJobs);
    o.require(to_json(a).dump() == to_json(b).dump(), "reports differ");
    o.require(a.summary.contains("in_hypothesis_formula_equals_distinct_values") &&
                  a.summary.contains("in_hypothesis_formula_equals_sigma_pairs"),
              "missing an interpretation");
    o.require(a.summary["seed_2_1_agrees"] == true, "(2,1) disagrees");
    const auto f = thm74_count(factorize(BigInt(3)), factorize(BigInt(4)));
    o.require(f == 1 && distinct_values_from_seed(BigInt(2), BigInt(1)).size() == 1, "(2,1) direct check");
  });

  criterion(12, "con-3.1 at (5, 2000) is consistent_up_to_bound with no certificates", 60.0, [](Outcome& o) {
    const auto r = run_claim("con-3.1", {{"max_power", 5}, {"max_m", 2000}}, kJobs);
    o.require(r.status == ClaimStatus::ConsistentUpToBound, "status " + std::string(to_string(r.status)));
    o.require(r.witnesses.empty() && r.checked_count == 5, "certificates or count");
  });

  criterion(13, "every generated value from seeds m <= 40 is certified with bound 40", 0, [](Outcome& o) {
    u64 values = 0;
    for (u64 m = 2; m <= 40; ++m) {
      for (u64 n = 1; n < m; ++n) {
        if (!is_valid_seed(m, n)) continue;
        for (const auto& v : distinct_values_from_seed(BigInt(m), BigInt(n))) {
          ++values;
          const auto r = certify(v, 40, kJobs);
          o.require(std::holds_alternative<Certificate>(r) && verify_certificate(std::get<Certificate>(r)),
                    "value " + v.get_str() + " from (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
      }
    }
    o.require(values > 0, "no values");
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures;
}
