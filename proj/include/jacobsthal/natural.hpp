#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace jac {

// Arbitrary-precision unsigned integer. All arithmetic in this library is
// exact; any operation that would produce a negative or fractional Natural
// is an internal invariant failure.
using Natural = mpz_class;

// Sequence position. Machine-width; indices beyond ~1e7 are out of the
// supported range (documented, not enforced).
using Index = std::uint64_t;

class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline Natural pow2(Index k) {
  Natural r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

// Exact division by 3; a nonzero remainder means an algorithm bug.
inline Natural exact_div3(const Natural& n, const char* what) {
  Natural q, r;
  mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), 3);
  if (r != 0) {
    throw internal_error(std::string("exact division by 3 failed in ") + what);
  }
  return q;
}

inline bool is_even(Index k) { return (k & 1) == 0; }

// If n == 2^e returns e, otherwise nothing.
inline bool power_of_two_exponent(const Natural& n, Index& e) {
  if (n <= 0) return false;
  if (mpz_popcount(n.get_mpz_t()) != 1) return false;
  e = mpz_scan1(n.get_mpz_t(), 0);
  return true;
}

inline std::string to_decimal(const Natural& n) { return n.get_str(10); }

}  // namespace jac
