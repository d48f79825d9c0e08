#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "jacobsthal/factorize.hpp"
#include "jacobsthal/sequence.hpp"

namespace jac {

// Residue arithmetic on J_k without constructing the values: J_k mod n is
// computed as ((2^k - (-1)^k) mod 3n) / 3, exact because 3 | 2^k - (-1)^k
// for every k. This handles moduli divisible by 3 with no case split.

struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;
};

inline Residue jacobsthal_mod(Index k, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("jacobsthal_mod requires n >= 1");
  Natural mod3n = Natural(3) * Natural(static_cast<unsigned long>(n));
  Natural base = 2, exp = static_cast<unsigned long>(k), t;
  mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod3n.get_mpz_t());
  t += is_even(k) ? Natural(mod3n - 1) : Natural(1);
  t %= mod3n;
  Natural r = exact_div3(t, "jacobsthal_mod");
  return Residue{static_cast<std::uint64_t>(r.get_ui()), n};
}

// J_p mod p for prime p > 3; equals 1 by Fermat (2^p = 2 mod p).
inline Residue prime_index_residue(std::uint64_t p) {
  if (p <= 3) throw std::invalid_argument("prime_index_residue requires p > 3");
  if (is_probable_prime(Natural(static_cast<unsigned long>(p))) != PrimeClass::prime) {
    throw std::invalid_argument("prime_index_residue requires prime p");
  }
  return jacobsthal_mod(p, p);
}

// Prime divisor Q of J_q whose residue class mod q is a unit, with the
// inverse x of Q mod q. The conjecture under test is that some Q always
// admits x = 1.
struct UnitWitness {
  Index q = 0;
  std::uint64_t residue_m = 0;  // J_q mod q
  Natural big_q;                // prime divisor of J_q
  std::uint64_t x = 0;          // (Q mod q)^{-1} mod q
};

enum class WitnessStatus {
  found,
  residue_is_zero,
  residue_is_one,
  value_is_prime,
  no_unit_divisor,   // every prime divisor shares a factor with q
  budget_exhausted,  // inconclusive, distinct from absent
};

struct WitnessResult {
  WitnessStatus status = WitnessStatus::budget_exhausted;
  std::optional<UnitWitness> witness;
};

inline const char* witness_status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::found: return "found";
    case WitnessStatus::residue_is_zero: return "residue_is_zero";
    case WitnessStatus::residue_is_one: return "residue_is_one";
    case WitnessStatus::value_is_prime: return "value_is_prime";
    case WitnessStatus::no_unit_divisor: return "no_unit_divisor";
    case WitnessStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

// Searches the prime divisors of J_q for a unit witness. Preference order:
// smallest Q whose inverse is 1, else smallest valid Q, so outputs are
// deterministic and conjecture-relevant.
inline WitnessResult unit_witness(Index q, const Budget& budget,
                                  std::uint64_t seed = 0) {
  if (q < 2) throw std::invalid_argument("unit_witness requires q >= 2");
  WitnessResult res;
  std::uint64_t m = jacobsthal_mod(q, q).value;
  if (m == 0) {
    res.status = WitnessStatus::residue_is_zero;
    return res;
  }
  if (m == 1) {
    res.status = WitnessStatus::residue_is_one;
    return res;
  }
  Natural jq = jacobsthal(q);
  if (is_prime_class(is_probable_prime(jq))) {
    res.status = WitnessStatus::value_is_prime;
    return res;
  }
  Factorization f = factorize(jq, budget, seed);
  if (!f.complete) {
    res.status = WitnessStatus::budget_exhausted;
    return res;
  }
  std::optional<UnitWitness> best;        // smallest Q with x = 1
  std::optional<UnitWitness> best_valid;  // smallest unit Q overall
  for (const auto& [prime, exp] : f.factors) {
    Natural qr = prime % static_cast<unsigned long>(q);
    Natural g;
    Natural qn(static_cast<unsigned long>(q));
    mpz_gcd(g.get_mpz_t(), qr.get_mpz_t(), qn.get_mpz_t());
    if (g != 1) continue;
    Natural inv;
    if (mpz_invert(inv.get_mpz_t(), qr.get_mpz_t(), qn.get_mpz_t()) == 0) continue;
    UnitWitness w;
    w.q = q;
    w.residue_m = m;
    w.big_q = prime;
    w.x = static_cast<std::uint64_t>(inv.get_ui());
    if (!best_valid) best_valid = w;
    if (w.x == 1 && !best) {
      best = w;
      break;  // factors are sorted, first x=1 hit is the smallest
    }
  }
  if (best) {
    res.status = WitnessStatus::found;
    res.witness = *best;
  } else if (best_valid) {
    res.status = WitnessStatus::found;
    res.witness = *best_valid;
  } else {
    res.status = WitnessStatus::no_unit_divisor;
  }
  return res;
}

}  // namespace jac
