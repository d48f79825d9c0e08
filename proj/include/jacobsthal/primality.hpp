#pragma once

#include <array>
#include <cstdint>

#include "jacobsthal/natural.hpp"

namespace jac {

enum class PrimeClass { prime, probable_prime, composite };

namespace detail {

// One strong-pseudoprime round to base a; n odd, n > 3, written as
// n - 1 = d * 2^s.
inline bool miller_rabin_round(const Natural& n, const Natural& nm1,
                               const Natural& d, unsigned long s,
                               const Natural& base) {
  Natural a = base % n;
  if (a == 0) return true;
  Natural x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Strong Lucas test with Selfridge parameter selection (method A):
// D = 5, -7, 9, -11, ... with Jacobi(D, n) = -1; P = 1, Q = (1 - D) / 4.
inline bool strong_lucas_prp(const Natural& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long d_abs = 5;
  int d_sign = 1;
  mpz_class d;
  for (;;) {
    d = d_sign * d_abs;
    int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
    if (j == 0) return false;  // shares a factor with n
    if (j == -1) break;
    d_abs += 2;
    d_sign = -d_sign;
  }
  mpz_class q = (1 - d) / 4;

  // n + 1 = t * 2^s
  Natural np1 = n + 1;
  unsigned long s = mpz_scan1(np1.get_mpz_t(), 0);
  Natural t = np1 >> s;

  // Compute U_t, V_t mod n by binary expansion (P = 1).
  mpz_class u = 0, v = 2, qk = 1;
  long bits = mpz_sizeinbase(t.get_mpz_t(), 2);
  auto mod_n = [&n](mpz_class& x) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  };
  for (long i = bits - 1; i >= 0; --i) {
    // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
    u = u * v;
    mod_n(u);
    v = v * v - 2 * qk;
    mod_n(v);
    qk = qk * qk;
    mod_n(qk);
    if (mpz_tstbit(t.get_mpz_t(), i)) {
      // increment: U_{k+1} = (U + V)/2, V_{k+1} = (D U + V)/2 (P = 1)
      mpz_class u2 = u + v;
      mpz_class v2 = d * u + v;
      if (mpz_odd_p(u2.get_mpz_t())) u2 += n;
      if (mpz_odd_p(v2.get_mpz_t())) v2 += n;
      u = u2 / 2;
      v = v2 / 2;
      mod_n(u);
      mod_n(v);
      qk = qk * q;
      mod_n(qk);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = v * v - 2 * qk;
    mod_n(v);
    if (v == 0) return true;
    qk = qk * qk;
    mod_n(qk);
  }
  return false;
}

}  // namespace detail

// Deterministic below 2^64 (fixed witness set valid to 3.3e24); above that,
// 16 fixed strong-pseudoprime rounds plus a strong Lucas test, reported as
// probable_prime only.
inline PrimeClass is_probable_prime(const Natural& n) {
  if (n < 2) return PrimeClass::composite;
  static constexpr std::array<unsigned, 15> small_primes = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (unsigned p : small_primes) {
    if (n == p) return PrimeClass::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return PrimeClass::composite;
  }
  Natural nm1 = n - 1;
  unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
  Natural d = nm1 >> s;

  bool deterministic = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  // Witnesses {2..37} decide primality for all n < 3.3e24, covering 2^64.
  static constexpr std::array<unsigned, 12> det_bases = {2,  3,  5,  7,  11, 13,
                                                         17, 19, 23, 29, 31, 37};
  static constexpr std::array<unsigned, 16> prp_bases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (deterministic) {
    for (unsigned b : det_bases) {
      if (!detail::miller_rabin_round(n, nm1, d, s, Natural(b))) {
        return PrimeClass::composite;
      }
    }
    return PrimeClass::prime;
  }
  for (unsigned b : prp_bases) {
    if (!detail::miller_rabin_round(n, nm1, d, s, Natural(b))) {
      return PrimeClass::composite;
    }
  }
  if (!detail::strong_lucas_prp(n)) return PrimeClass::composite;
  return PrimeClass::probable_prime;
}

inline bool is_prime_class(PrimeClass c) {
  return c == PrimeClass::prime || c == PrimeClass::probable_prime;
}

}  // namespace jac
