#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacobsthal/factorize.hpp"
#include "jacobsthal/modular.hpp"
#include "jacobsthal/sequence.hpp"

namespace jac {

// The divisibility-sequence laws: gcd(J_m, J_n) = J_gcd(m,n), index
// divisibility, divisor closure, the J_q = lcm(J_m, J_k) * R decomposition,
// 3-adic valuations, and the maximal-divisor check.

// Euclid on the big values, asserted against the strong-divisibility law.
inline Natural gcd_jacobsthal(Index m, Index n) {
  if (m < 1 || n < 1) throw std::invalid_argument("gcd_jacobsthal requires m, n >= 1");
  Natural g;
  Natural jm = jacobsthal(m), jn = jacobsthal(n);
  mpz_gcd(g.get_mpz_t(), jm.get_mpz_t(), jn.get_mpz_t());
  if (g != jacobsthal(std::gcd(m, n))) {
    throw internal_error("strong divisibility law gcd(J_m,J_n) = J_gcd(m,n) failed");
  }
  return g;
}

// Whether J_n | J_m (value test). Coincides with n | m for n >= 3; for
// n in {1, 2} the value is 1 and divides everything, so the printed
// iff fails there (e.g. n=2, m=3).
inline bool divides_index(Index n, Index m) {
  if (n < 1 || m < 1) throw std::invalid_argument("divides_index requires n, m >= 1");
  Natural jn = jacobsthal(n), jm = jacobsthal(m);
  return mpz_divisible_p(jm.get_mpz_t(), jn.get_mpz_t()) != 0;
}

// Proper divisors a of m with their J_a; each J_a divides J_m.
inline std::vector<std::pair<Index, Natural>> divisor_closure(Index m) {
  if (m < 2) throw std::invalid_argument("divisor_closure requires m >= 2");
  std::vector<Index> divs;
  for (Index a = 1; a * a <= m; ++a) {
    if (m % a == 0) {
      divs.push_back(a);
      if (a != 1 && a * a != m) divs.push_back(m / a);
    }
  }
  std::sort(divs.begin(), divs.end());
  Natural jm = jacobsthal(m);
  std::vector<std::pair<Index, Natural>> out;
  out.reserve(divs.size());
  for (Index a : divs) {
    Natural ja = jacobsthal(a);
    if (!mpz_divisible_p(jm.get_mpz_t(), ja.get_mpz_t())) {
      throw internal_error("divisor closure J_a | J_m failed");
    }
    out.emplace_back(a, std::move(ja));
  }
  return out;
}

inline Index smallest_prime_factor_index(Index q) {
  for (Index p = 2; p * p <= q; ++p) {
    if (q % p == 0) return p;
  }
  return q;
}

// J_q = lcm(J_m, J_k) * R with m the largest proper divisor of q and k its
// smallest prime factor. The lcm (not the raw product J_m J_k) keeps the
// division exact when gcd(m, k) > 1.
struct Decomposition {
  Index q = 0;
  Index m = 0;  // largest proper divisor of q
  Index k = 0;  // smallest prime factor of q
  Natural cofactor;
};

inline Decomposition decompose(Index q) {
  if (q <= 4) throw std::invalid_argument("decompose requires q > 4");
  Index spf = smallest_prime_factor_index(q);
  if (spf == q) throw std::invalid_argument("decompose requires composite q");
  Decomposition d;
  d.q = q;
  d.k = spf;
  d.m = q / spf;
  Natural jm = jacobsthal(d.m), jk = jacobsthal(d.k);
  Natural lcm = jm * jk / jacobsthal(std::gcd(d.m, d.k));
  Natural jq = jacobsthal(q);
  Natural rem;
  mpz_tdiv_qr(d.cofactor.get_mpz_t(), rem.get_mpz_t(), jq.get_mpz_t(), lcm.get_mpz_t());
  if (rem != 0) throw internal_error("decomposition lcm(J_m,J_k) does not divide J_q");
  return d;
}

struct ValuationResult {
  Index k = 0;
  Natural prime;            // fixed at 3
  unsigned exponent = 0;    // exact v_3(J_k) by repeated division
  unsigned formula = 0;     // fast path v_3(k); asserted equal
};

inline unsigned v3_of_index(Index k) {
  unsigned e = 0;
  while (k % 3 == 0) {
    k /= 3;
    ++e;
  }
  return e;
}

// Exact 3-adic valuation of J_k by repeated division on the big integer,
// cross-checked against the lifting-the-exponent formula v_3(J_k) = v_3(k).
// The big-integer computation is the source of truth.
inline ValuationResult v3_valuation(Index k) {
  if (k < 1) throw std::invalid_argument("v3_valuation requires k >= 1");
  ValuationResult r;
  r.k = k;
  r.prime = 3;
  Natural v = jacobsthal(k);
  while (mpz_divisible_ui_p(v.get_mpz_t(), 3)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 3);
    ++r.exponent;
  }
  r.formula = v3_of_index(k);
  if (r.exponent != r.formula) {
    throw internal_error("v_3(J_k) disagrees with the index-valuation formula");
  }
  return r;
}

// Whether f | J_f for the family index f = M * 3^n, via modular
// exponentiation so large family members stay cheap.
inline bool check_index_family(Index m_base, Index n) {
  if (m_base < 1) throw std::invalid_argument("check_index_family requires M >= 1");
  Index f = m_base;
  for (Index i = 0; i < n; ++i) f *= 3;
  return jacobsthal_mod(f, f).value == 0;
}

enum class MaxDivisorStatus { holds, fails, budget_exhausted };

struct MaxDivisorVerdict {
  Index q = 0;
  MaxDivisorStatus status = MaxDivisorStatus::budget_exhausted;
  Natural divisor;  // J_q / spf(J_q) when conclusive
};

// Checks that the maximal proper divisor d = J_q / spf(J_q) is not itself a
// Jacobsthal number. A counterexample is a reportable finding (status
// fails), not an assertion failure.
inline MaxDivisorVerdict max_divisor_is_non_jacobsthal(Index q, const Budget& budget,
                                                       std::uint64_t seed = 0) {
  if (q <= 4) throw std::invalid_argument("max divisor check requires q > 4");
  if (smallest_prime_factor_index(q) == q) {
    throw std::invalid_argument("max divisor check requires composite q");
  }
  MaxDivisorVerdict v;
  v.q = q;
  Natural jq = jacobsthal(q);
  if (is_prime_class(is_probable_prime(jq))) {
    throw std::invalid_argument("max divisor check requires composite J_q");
  }
  auto spf = smallest_prime_factor(jq, budget, seed);
  if (!spf) {
    v.status = MaxDivisorStatus::budget_exhausted;
    return v;
  }
  v.divisor = jq / *spf;
  v.status = is_jacobsthal(v.divisor) ? MaxDivisorStatus::fails : MaxDivisorStatus::holds;
  return v;
}

}  // namespace jac
