#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacobsthal/sequence.hpp"

namespace jac {

// Numeric verification of the algebraic identities around J_k: the
// double-index product, the odd-index cofactor factorization, the
// triple-index identity (in its printed and corrected forms), and the two
// geometric-sum factorizations of 2^n +- 1.

struct IdentityVerdict {
  std::string name;
  Index index = 0;
  Index index2 = 0;  // second parameter for two-index identities, else 0
  bool holds = false;
  Natural lhs;
  Natural rhs;
};

struct IdentityReport {
  std::string name;
  Index lo = 0;
  Index hi = 0;
  std::uint64_t checked = 0;
  std::vector<IdentityVerdict> failures;
};

enum class TripleMode { literal, corrected };

// a_M = (2^{2M} - 2^M + 1) / 3 for odd M, the cofactor in
// J_{3M} = 3 J_M a_M.
inline Natural cofactor_a(Index m) {
  if (is_even(m) || m < 1) {
    throw std::invalid_argument("cofactor_a requires odd M >= 1");
  }
  Natural a = exact_div3(pow2(2 * m) - pow2(m) + 1, "cofactor_a");
  if (3 * jacobsthal(m) * a != jacobsthal(3 * m)) {
    throw internal_error("cofactor identity 3*J_M*a_M = J_3M failed");
  }
  return a;
}

// J_{2k} = J_k * j_k.
inline IdentityVerdict check_double_index(Index k) {
  IdentityVerdict v;
  v.name = "double";
  v.index = k;
  v.lhs = jacobsthal(2 * k);
  v.rhs = jacobsthal(k) * jacobsthal_lucas(k);
  v.holds = (v.lhs == v.rhs);
  return v;
}

// Triple-index identity for odd M. The literal printed form
// J_{3M} = J_M (3 J_{2M} - 3 J_M + 1) fails for every odd M (the two sides
// differ by exactly 2 J_M); the corrected form J_{3M} = 3 J_M (J_{2M} - J_M + 1)
// holds universally.
inline IdentityVerdict check_triple_index(Index m, TripleMode mode) {
  if (is_even(m) || m < 1) {
    throw std::invalid_argument("check_triple_index requires odd M >= 1");
  }
  IdentityVerdict v;
  v.name = mode == TripleMode::literal ? "triple-literal" : "triple-corrected";
  v.index = m;
  v.lhs = jacobsthal(3 * m);
  Natural jm = jacobsthal(m);
  Natural j2m = jacobsthal(2 * m);
  if (mode == TripleMode::literal) {
    v.rhs = jm * (3 * j2m - 3 * jm + 1);
  } else {
    v.rhs = 3 * jm * (j2m - jm + 1);
  }
  v.holds = (v.lhs == v.rhs);
  return v;
}

// S = sum_{i=0}^{b-1} (-2)^{ia} with (2^a + 1) S = 2^{ab} + 1. Odd b keeps
// the final term positive; the partial sums alternate in sign so the
// accumulation runs signed and narrows at the end.
inline Natural alt_geometric_factor(Index a, Index b) {
  if (a < 1 || b < 1 || is_even(b)) {
    throw std::invalid_argument("alt_geometric_factor requires a >= 1 and odd b >= 1");
  }
  mpz_class sum = 0;
  mpz_class term = 1;
  Natural step = pow2(a);
  for (Index i = 0; i < b; ++i) {
    sum += term;
    term *= step;
    mpz_neg(term.get_mpz_t(), term.get_mpz_t());
  }
  if (sum < 0) {
    throw internal_error("alternating geometric sum came out negative");
  }
  if ((pow2(a) + 1) * sum != pow2(a * b) + 1) {
    throw internal_error("alternating factor identity (2^a+1)*S = 2^{ab}+1 failed");
  }
  return sum;
}

// S = sum_{i=0}^{d-1} 2^{ic} with (2^c - 1) S = 2^{cd} - 1.
inline Natural geometric_factor(Index c, Index d) {
  if (c < 1 || d < 1) {
    throw std::invalid_argument("geometric_factor requires c, d >= 1");
  }
  Natural sum = 0;
  for (Index i = 0; i < d; ++i) sum += pow2(i * c);
  if ((pow2(c) - 1) * sum != pow2(c * d) - 1) {
    throw internal_error("geometric factor identity (2^c-1)*S = 2^{cd}-1 failed");
  }
  return sum;
}

namespace detail {

inline IdentityVerdict identity_assert_verdict(const std::string& name, Index i,
                                               Index j, const Natural& value) {
  IdentityVerdict v;
  v.name = name;
  v.index = i;
  v.index2 = j;
  v.holds = true;
  v.lhs = value;
  v.rhs = value;
  return v;
}

}  // namespace detail

// Batch driver. Runs the named check across [lo, hi] (odd indices only where
// the identity requires them) and collects every failing verdict. For the
// two geometric identities the range applies to the first exponent; the
// second sweeps a fixed small set (odd b <= 15, d <= 16).
inline IdentityReport sweep_identity(const std::string& name, Index lo, Index hi) {
  if (hi < lo) throw std::invalid_argument("empty sweep range");
  IdentityReport rep;
  rep.name = name;
  rep.lo = lo;
  rep.hi = hi;
  auto record = [&rep](IdentityVerdict v) {
    ++rep.checked;
    if (!v.holds) rep.failures.push_back(std::move(v));
  };
  if (name == "double") {
    for (Index k = lo; k <= hi; ++k) record(check_double_index(k));
  } else if (name == "triple-literal" || name == "triple-corrected") {
    TripleMode mode =
        name == "triple-literal" ? TripleMode::literal : TripleMode::corrected;
    for (Index m = lo | 1; m <= hi; m += 2) record(check_triple_index(m, mode));
  } else if (name == "cofactor") {
    for (Index m = lo | 1; m <= hi; m += 2) {
      record(detail::identity_assert_verdict(name, m, 0, cofactor_a(m)));
    }
  } else if (name == "alt-geometric") {
    for (Index a = std::max<Index>(lo, 1); a <= hi; ++a) {
      for (Index b = 1; b <= 15; b += 2) {
        record(detail::identity_assert_verdict(name, a, b,
                                               alt_geometric_factor(a, b)));
      }
    }
  } else if (name == "geometric") {
    for (Index c = std::max<Index>(lo, 1); c <= hi; ++c) {
      for (Index d = 1; d <= 16; ++d) {
        record(detail::identity_assert_verdict(name, c, d,
                                               geometric_factor(c, d)));
      }
    }
  } else {
    throw std::invalid_argument("unknown identity tag: " + name);
  }
  return rep;
}

}  // namespace jac
