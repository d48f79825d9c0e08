#include <doctest.h>

#include <vector>

#include "jacobsthal/sequence.hpp"

using namespace jac;

namespace {

// Independent oracle: the defining recurrence, run incrementally.
std::vector<Natural> recurrence_table(Index up_to) {
  std::vector<Natural> t;
  t.reserve(up_to + 1);
  t.push_back(0);
  t.push_back(1);
  for (Index k = 2; k <= up_to; ++k) {
    t.push_back(t[k - 1] + 2 * t[k - 2]);
  }
  return t;
}

const char* kJ171 =
    "997718451084563058827048845800982541418449949338283";

}  // namespace

TEST_CASE("closed form matches the listed values") {
  const Natural expected[] = {0, 1, 1, 3, 5, 11, 21, 43, 85};
  for (Index k = 0; k < 9; ++k) {
    CHECK(jacobsthal(k) == expected[k]);
  }
  CHECK(jacobsthal(7) == 43);
  CHECK(jacobsthal(1) == 1);
  CHECK(to_decimal(jacobsthal(171)) == kJ171);
}

TEST_CASE("jacobsthal_lucas base cases and recurrence oracle") {
  CHECK(jacobsthal_lucas(0) == 2);
  CHECK(jacobsthal_lucas(1) == 1);
  CHECK(jacobsthal_lucas(4) == 17);
  // j follows the same recurrence with seeds 2, 1
  Natural a = 2, b = 1;
  for (Index k = 2; k <= 300; ++k) {
    Natural c = b + 2 * a;
    a = b;
    b = c;
    CHECK(jacobsthal_lucas(k) == b);
  }
}

TEST_CASE("recurrence evaluation") {
  CHECK(jacobsthal_by_recurrence(8) == 85);
  CHECK(jacobsthal_by_recurrence(2) == 1);
  CHECK(jacobsthal_by_recurrence(12) == 1365);
}

TEST_CASE("fast doubling pair") {
  auto p4 = jacobsthal_pair(4);
  CHECK(p4.jk == 5);
  CHECK(p4.jk1 == 11);
  auto p0 = jacobsthal_pair(0);
  CHECK(p0.jk == 0);
  CHECK(p0.jk1 == 1);
  auto p10 = jacobsthal_pair(10);
  CHECK(p10.jk == 341);
  CHECK(p10.jk1 == 683);
}

TEST_CASE("three algorithms agree up to 5000") {
  auto table = recurrence_table(5001);
  for (Index k = 0; k <= 5000; ++k) {
    Natural closed = jacobsthal(k);
    REQUIRE(closed == table[k]);
    auto pair = jacobsthal_pair(k);
    REQUIRE(pair.jk == table[k]);
    REQUIRE(pair.jk1 == table[k + 1]);
  }
}

TEST_CASE("parity closed forms") {
  for (Index k = 0; k <= 500; ++k) {
    Natural three_j = 3 * jacobsthal(k);
    if (is_even(k)) {
      CHECK(three_j == pow2(k) - 1);
    } else {
      CHECK(three_j == pow2(k) + 1);
    }
  }
}

TEST_CASE("strict monotonicity from k = 2") {
  auto table = recurrence_table(400);
  for (Index k = 2; k < 400; ++k) {
    CHECK(table[k + 1] > table[k]);
  }
}

TEST_CASE("is_jacobsthal against a brute-force table") {
  CHECK(is_jacobsthal(Natural(85)) == Index(8));
  CHECK(is_jacobsthal(Natural(1)) == Index(1));  // tie J_1 = J_2 resolved low
  CHECK(!is_jacobsthal(Natural(7)).has_value());

  auto table = recurrence_table(200);
  // complete: every table value maps back to its smallest index
  for (Index k = 0; k <= 200; ++k) {
    auto found = is_jacobsthal(table[k]);
    REQUIRE(found.has_value());
    if (k == 2) {
      CHECK(*found == 1);
    } else {
      CHECK(*found == k);
    }
  }
  // sound: values strictly between consecutive table entries are rejected
  for (Index k = 4; k <= 60; ++k) {
    CHECK(!is_jacobsthal(table[k] + 1).has_value());
    CHECK(!is_jacobsthal(table[k] - 1).has_value());
  }
}

TEST_CASE("double-index smoke link") {
  for (Index k = 0; k <= 100; ++k) {
    CHECK(jacobsthal(2 * k) == jacobsthal(k) * jacobsthal_lucas(k));
  }
}
