#include <doctest.h>

#include <numeric>
#include <random>

#include "jacobsthal/divisibility.hpp"

using namespace jac;

TEST_CASE("gcd law examples") {
  CHECK(gcd_jacobsthal(12, 18) == 21);  // J_6
  CHECK(gcd_jacobsthal(5, 5) == 11);    // J_5
  CHECK(gcd_jacobsthal(7, 11) == 1);    // coprime indices
}

TEST_CASE("gcd law on seeded random pairs") {
  std::mt19937_64 rng(0x6a61636f);  // fixed recorded seed
  for (int i = 0; i < 1000; ++i) {
    Index m = 1 + rng() % 2000;
    Index n = 1 + rng() % 2000;
    // gcd_jacobsthal throws internal_error if the law fails
    CHECK_NOTHROW(gcd_jacobsthal(m, n));
  }
}

TEST_CASE("index divisibility law") {
  CHECK(divides_index(3, 9));
  CHECK(9 % 3 == 0);
  CHECK(!divides_index(4, 10));
  CHECK(divides_index(2, 3));  // J_2 = 1 divides J_3 = 3 while 2 does not divide 3

  for (Index n = 3; n <= 50; ++n) {
    for (Index m = 1; m <= 1000; ++m) {
      REQUIRE(divides_index(n, m) == (m % n == 0));
    }
  }
  // the n in {1, 2} carve-out: J-value is 1, divides everything
  for (Index m = 1; m <= 100; ++m) {
    CHECK(divides_index(1, m));
    CHECK(divides_index(2, m));
  }
}

TEST_CASE("divisor closure") {
  auto six = divisor_closure(6);
  REQUIRE(six.size() == 3);
  CHECK(six[0] == std::pair<Index, Natural>{1, 1});
  CHECK(six[1] == std::pair<Index, Natural>{2, 1});
  CHECK(six[2] == std::pair<Index, Natural>{3, 3});

  auto nine = divisor_closure(9);
  REQUIRE(nine.size() == 2);
  CHECK(nine[1].second == 3);

  auto five = divisor_closure(5);
  REQUIRE(five.size() == 1);
  CHECK(five[0].first == 1);

  // closure throws internal_error on any J_a not dividing J_m
  for (Index m = 2; m <= 500; ++m) {
    CHECK_NOTHROW(divisor_closure(m));
  }
}

TEST_CASE("decompose") {
  auto d6 = decompose(6);
  CHECK(d6.m == 3);
  CHECK(d6.k == 2);
  CHECK(d6.cofactor == 7);

  auto d9 = decompose(9);
  CHECK(d9.m == 3);
  CHECK(d9.k == 3);
  CHECK(d9.cofactor == 57);

  auto d15 = decompose(15);
  CHECK(d15.m == 5);
  CHECK(d15.k == 3);
  CHECK(d15.cofactor == 331);

  CHECK_THROWS_AS(decompose(7), std::invalid_argument);   // prime
  CHECK_THROWS_AS(decompose(4), std::invalid_argument);   // q <= 4

  for (Index q = 5; q <= 200; ++q) {
    if (smallest_prime_factor_index(q) == q) continue;
    auto d = decompose(q);
    Natural jm = jacobsthal(d.m), jk = jacobsthal(d.k);
    Natural lcm = jm * jk / jacobsthal(std::gcd(d.m, d.k));
    CHECK(lcm * d.cofactor == jacobsthal(q));
    CHECK(d.cofactor >= 1);
  }
}

TEST_CASE("3-adic valuation") {
  CHECK(v3_valuation(9).exponent == 2);
  CHECK(v3_valuation(4).exponent == 0);
  CHECK(v3_valuation(27).exponent == 3);

  // valuation law: v_3(J_k) = v_3(k); v3_valuation throws on disagreement
  for (Index k = 1; k <= 3000; ++k) {
    CHECK_NOTHROW(v3_valuation(k));
  }
  Index p = 1;
  for (unsigned n = 0; n <= 7; ++n) {
    if (n > 0) p *= 3;
    if (n == 0) continue;
    CHECK(v3_valuation(p).exponent == n);
  }
}

TEST_CASE("index families M * 3^n") {
  CHECK(check_index_family(19, 2));   // 171 | J_171
  CHECK(!check_index_family(19, 1));  // 57 does not divide J_57
  CHECK(check_index_family(1, 3));    // 27 | J_27

  for (Index n = 2; n <= 6; ++n) {
    CHECK(check_index_family(19, n));
  }
  // 19^n * 3^{n+2} for n = 1, 2
  CHECK(check_index_family(19, 3));       // 19 * 27 = 513
  CHECK(check_index_family(19 * 19, 4));  // 361 * 81 = 29241
}

TEST_CASE("maximal divisor of J_q is non-Jacobsthal") {
  Budget b;
  auto v6 = max_divisor_is_non_jacobsthal(6, b);
  CHECK(v6.status == MaxDivisorStatus::holds);
  CHECK(v6.divisor == 7);

  auto v8 = max_divisor_is_non_jacobsthal(8, b);
  CHECK(v8.status == MaxDivisorStatus::holds);
  CHECK(v8.divisor == 17);

  auto v12 = max_divisor_is_non_jacobsthal(12, b);
  CHECK(v12.status == MaxDivisorStatus::holds);
  CHECK(v12.divisor == 455);

  CHECK_THROWS_AS(max_divisor_is_non_jacobsthal(7, b), std::invalid_argument);
}
