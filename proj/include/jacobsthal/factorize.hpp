#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "jacobsthal/primality.hpp"

namespace jac {

// Deterministic cap on factoring work: primes below trial_bound are removed
// by trial division, then Brent-variant Pollard rho spends at most
// rho_iterations squarings in total across all recursive splits.
struct Budget {
  std::uint64_t trial_bound = 100000;
  std::uint64_t rho_iterations = 2000000;

  // Single-knob form used by the CLI: N work units buy N rho iterations and
  // a trial-division bound of min(N, 10^6).
  static Budget from_units(std::uint64_t units) {
    Budget b;
    b.trial_bound = std::min<std::uint64_t>(units, 1000000);
    b.rho_iterations = units;
    return b;
  }
};

struct Factorization {
  Natural n;
  std::vector<std::pair<Natural, unsigned>> factors;  // (prime, exponent), increasing
  std::optional<Natural> cofactor;  // unfactored remainder, composite or unknown
  bool complete = true;

  Natural product() const {
    Natural p = 1;
    for (const auto& [prime, exp] : factors) {
      Natural pe;
      mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), exp);
      p *= pe;
    }
    if (cofactor) p *= *cofactor;
    return p;
  }
};

namespace detail {

inline constexpr std::uint32_t kTrialTableLimit = 1u << 20;

// Sieved once on first use (magic static, safe under concurrent factorize).
inline const std::vector<std::uint32_t>& small_prime_table() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    std::vector<bool> is_comp(kTrialTableLimit + 1, false);
    for (std::uint32_t i = 2; i <= kTrialTableLimit; ++i) {
      if (!is_comp[i]) {
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i;
             j <= kTrialTableLimit; j += i) {
          is_comp[j] = true;
        }
      }
    }
    return out;
  }();
  return primes;
}

// Brent cycle-finding rho with f(x) = x^2 + c. Starts from the documented
// fixed seed x0 = 2, c = 1 (offset by `seed`), bumping c when a cycle
// degenerates. Returns a nontrivial factor or nothing once iters_left hits 0.
inline std::optional<Natural> brent_rho(const Natural& n, std::uint64_t& iters_left,
                                        std::uint64_t seed) {
  if (mpz_even_p(n.get_mpz_t())) return Natural(2);
  for (std::uint64_t c = 1 + seed;; ++c) {
    Natural x = 2, y = 2, d = 1;
    Natural saved_y;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r && iters_left > 0; ++i) {
        y = (y * y + c) % n;
        --iters_left;
      }
      if (iters_left == 0) return std::nullopt;
      std::uint64_t k = 0;
      while (k < r && d == 1) {
        saved_y = y;
        Natural q = 1;
        std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim && iters_left > 0; ++i) {
          y = (y * y + c) % n;
          --iters_left;
          Natural diff = x > y ? x - y : y - x;
          q = (q * diff) % n;
        }
        if (iters_left == 0) return std::nullopt;
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time from the saved point
      Natural y2 = saved_y;
      d = 1;
      while (d == 1 && iters_left > 0) {
        y2 = (y2 * y2 + c) % n;
        --iters_left;
        Natural diff = x > y2 ? x - y2 : y2 - x;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
      if (iters_left == 0) return std::nullopt;
      if (d == n) continue;  // degenerate cycle, bump c
    }
    return d;
  }
}

inline void insert_prime(std::vector<std::pair<Natural, unsigned>>& factors,
                         const Natural& p, unsigned exp) {
  for (auto& [prime, e] : factors) {
    if (prime == p) {
      e += exp;
      return;
    }
  }
  factors.emplace_back(p, exp);
}

// Splits n (odd, no factor below trial_bound, not a probable prime) with the
// shared iteration budget. Unsplit pieces multiply into the cofactor.
inline void rho_split(const Natural& n, std::uint64_t& iters_left, std::uint64_t seed,
                      std::vector<std::pair<Natural, unsigned>>& factors,
                      Natural& cofactor) {
  if (is_prime_class(is_probable_prime(n))) {
    insert_prime(factors, n, 1);
    return;
  }
  // perfect powers defeat rho's gcd trick; take the root first
  for (unsigned long e = 2; mpz_sizeinbase(n.get_mpz_t(), 2) >= e; ++e) {
    Natural root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      for (unsigned long i = 0; i < e; ++i) {
        rho_split(root, iters_left, seed, factors, cofactor);
      }
      return;
    }
    if (e > 64) break;
  }
  auto d = brent_rho(n, iters_left, seed);
  if (!d) {
    cofactor *= n;
    return;
  }
  rho_split(*d, iters_left, seed, factors, cofactor);
  rho_split(Natural(n / *d), iters_left, seed, factors, cofactor);
}

}  // namespace detail

// Trial division below budget.trial_bound, then budgeted Brent rho on what
// remains. Budget exhaustion is encoded as complete = false with the
// unfactored cofactor, never as an error.
inline Factorization factorize(const Natural& n, const Budget& budget,
                               std::uint64_t seed = 0) {
  if (n < 1) throw std::invalid_argument("factorize requires N >= 1");
  Factorization f;
  f.n = n;
  Natural rest = n;
  std::uint32_t bound = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(budget.trial_bound, detail::kTrialTableLimit));
  for (std::uint32_t p : detail::small_prime_table()) {
    if (p > bound || rest == 1) break;
    Natural pp(p);
    if (pp * pp > rest) break;
    unsigned exp = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exp;
    }
    if (exp > 0) f.factors.emplace_back(Natural(p), exp);
  }
  if (rest > 1) {
    if (is_prime_class(is_probable_prime(rest))) {
      detail::insert_prime(f.factors, rest, 1);
    } else {
      Natural cof = 1;
      std::uint64_t iters = budget.rho_iterations;
      detail::rho_split(rest, iters, seed, f.factors, cof);
      if (cof > 1) {
        f.cofactor = cof;
        f.complete = false;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (f.product() != n) throw internal_error("factorization product mismatch");
  return f;
}

// Smallest prime of a factorization when it can be certified: either the
// factorization is complete, or a found prime is at or below the trial bound
// (any divisor hiding in the cofactor must exceed that bound).
inline std::optional<Natural> smallest_prime_factor(const Natural& n,
                                                    const Budget& budget,
                                                    std::uint64_t seed = 0) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor requires N >= 2");
  Factorization f = factorize(n, budget, seed);
  if (f.factors.empty()) return std::nullopt;  // incomplete, nothing found
  const Natural& least = f.factors.front().first;
  if (f.complete || least <= budget.trial_bound) return least;
  return std::nullopt;
}

}  // namespace jac
