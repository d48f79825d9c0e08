#pragma once

#include <optional>

#include "jacobsthal/natural.hpp"

namespace jac {

// Exact computation of the Jacobsthal numbers J_k (0, 1, 1, 3, 5, 11, ...)
// and their companion Jacobsthal-Lucas numbers j_k = 2^k + (-1)^k by three
// independent algorithms: closed form, linear recurrence, fast doubling.

struct SequencePair {
  Natural jk;   // J_k
  Natural jk1;  // J_{k+1}
};

// Closed form J_k = (2^k - (-1)^k) / 3. Canonical evaluation path.
inline Natural jacobsthal(Index k) {
  Natural t = pow2(k);
  if (is_even(k)) {
    t -= 1;
  } else {
    t += 1;
  }
  return exact_div3(t, "jacobsthal closed form");
}

// j_k = 2^k + (-1)^k.
inline Natural jacobsthal_lucas(Index k) {
  Natural t = pow2(k);
  if (is_even(k)) {
    t += 1;
  } else {
    t -= 1;
  }
  return t;
}

// Linear iteration from J_0 = 0, J_1 = 1 with J_{k+2} = J_{k+1} + 2 J_k.
// In-repo oracle for the other two algorithms.
inline Natural jacobsthal_by_recurrence(Index k) {
  if (k == 0) return 0;
  Natural a = 0, b = 1;
  for (Index i = 1; i < k; ++i) {
    Natural c = b + 2 * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

// Fast doubling, O(log k) big-integer steps. Uses
//   J_{2t}   = 3 J_t^2 + 2 s J_t        with s = (-1)^t
//   J_{2t+1} = 6 J_t^2 + 4 s J_t + 1
// and the recurrence for the second pair element.
inline SequencePair jacobsthal_pair(Index k) {
  if (k == 0) return {Natural(0), Natural(1)};
  Natural a = 0;  // J_t
  int sign = 1;   // (-1)^t
  for (int bit = 63 - __builtin_clzll(k); bit >= 0; --bit) {
    Natural sq3 = 3 * a * a;
    Natural sa2 = 2 * sign * a;
    Natural even = sq3 + sa2;            // J_{2t}
    Natural odd = 2 * even + 1;          // J_{2t+1} = 6 J_t^2 + 4 s J_t + 1
    if ((k >> bit) & 1) {
      a = std::move(odd);
      sign = -1;
    } else {
      a = std::move(even);
      sign = 1;
    }
  }
  // J_{k+1} = 2 J_k + (-1)^k, from 3 J_{k+1} = 2 (3 J_k + (-1)^k) + (-1)^k.
  Natural next = 2 * a + sign;
  return {std::move(a), std::move(next)};
}

// Smallest k with J_k = n, if n is a Jacobsthal number. Solves
// 3n = 2^k + 1 (k odd) or 3n = 2^k - 1 (k even) by bit inspection.
// The only tie is n = 1 (J_1 = J_2 = 1), resolved to index 1.
inline std::optional<Index> is_jacobsthal(const Natural& n) {
  Natural t = 3 * n;
  std::optional<Index> best;
  Index e = 0;
  if (power_of_two_exponent(t - 1, e) && !is_even(e)) best = e;
  if (power_of_two_exponent(t + 1, e) && is_even(e)) {
    if (!best || e < *best) best = e;
  }
  return best;
}

}  // namespace jac
