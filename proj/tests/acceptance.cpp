// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Scan-based criteria exercise the CLI binary itself.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jacobsthal/jacobsthal.hpp"

using namespace jac;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(JACOBSTHAL_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    r.output.append(buf.data(), n);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  const Natural expected[] = {0, 1, 1, 3, 5, 11, 21, 43, 85};
  bool ok = true;
  for (Index k = 0; k < 9; ++k) ok = ok && jacobsthal(k) == expected[k];
  Natural a = 0, b = 1;  // recurrence pair J_k, J_{k+1}
  for (Index k = 0; k <= 5000 && ok; ++k) {
    Natural closed = jacobsthal(k);
    auto pair = jacobsthal_pair(k);
    ok = closed == a && pair.jk == a && pair.jk1 == b;
    Natural c = b + 2 * a;
    a = b;
    b = c;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  report(1, "sequence correctness, three algorithms to k=5000", ok,
         std::to_string(dt) + "s");
}

void criterion_2() {
  const std::string paper_value =
      "997718451084563058827048845800982541418449949338283";
  bool ok = to_decimal(jacobsthal(171)) == paper_value &&
            jacobsthal_mod(171, 171).value == 0;
  report(2, "J_171 digits and 171 | J_171", ok);
}

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (Index k = 0; k <= 2000 && ok; ++k) ok = check_double_index(k).holds;
  for (Index m = 1; m <= 999 && ok; m += 2) {
    ok = 3 * jacobsthal(m) * cofactor_a(m) == jacobsthal(3 * m) &&
         check_triple_index(m, TripleMode::corrected).holds;
  }
  for (Index a = 1; a <= 32 && ok; ++a) {
    for (Index b = 1; b <= 15 && ok; b += 2) {
      ok = (pow2(a) + 1) * alt_geometric_factor(a, b) == pow2(a * b) + 1;
    }
  }
  for (Index c = 1; c <= 32 && ok; ++c) {
    for (Index d = 1; d <= 16 && ok; ++d) {
      ok = (pow2(c) - 1) * geometric_factor(c, d) == pow2(c * d) - 1;
    }
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  report(3, "identity suites exact over their ranges", ok, std::to_string(dt) + "s");
}

void criterion_4() {
  bool ok = true;
  for (Index m = 1; m <= 99 && ok; m += 2) {
    auto lit = check_triple_index(m, TripleMode::literal);
    ok = !lit.holds && lit.lhs - lit.rhs == 2 * jacobsthal(m);
  }
  report(4, "errata: triple-literal fails by exactly 2*J_M for odd M <= 99", ok);
}

void criterion_5() {
  std::mt19937_64 rng(0x6a61636f);  // fixed recorded seed
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    Index m = 1 + rng() % 2000;
    Index n = 1 + rng() % 2000;
    try {
      gcd_jacobsthal(m, n);
    } catch (const internal_error&) {
      ok = false;
    }
  }
  report(5, "strong divisibility on 1000 seeded pairs in [1,2000]", ok);
}

void criterion_6() {
  bool ok = true;
  for (Index n = 3; n <= 50 && ok; ++n) {
    for (Index m = 1; m <= 1000 && ok; ++m) {
      ok = divides_index(n, m) == (m % n == 0);
    }
  }
  auto r = run_cli("divides 2 3 --format records");
  ok = ok && r.exit_code == 0 &&
       r.output.find("\"iff_holds\":false") != std::string::npos &&
       r.output.find("\"value_divides\":true") != std::string::npos;
  report(6, "divisibility law for n >= 3 plus emitted n=2,m=3 counterexample", ok);
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  // sieve the primes below 100000
  constexpr std::uint32_t limit = 100000;
  std::vector<bool> composite(limit, false);
  for (std::uint32_t i = 2; static_cast<std::uint64_t>(i) * i < limit; ++i) {
    if (!composite[i]) {
      for (std::uint32_t j = i * i; j < limit; j += i) composite[j] = true;
    }
  }
  bool ok = true;
  for (std::uint32_t p = 5; p < limit && ok; ++p) {
    if (composite[p]) continue;
    ok = prime_index_residue(p).value == 1;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  report(7, "J_p = 1 mod p for all primes 3 < p < 100000", ok,
         std::to_string(dt) + "s");
}

void criterion_8() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (Index k = 1; k <= 3000 && ok; ++k) {
    try {
      v3_valuation(k);  // throws if big-integer and formula valuations differ
    } catch (const internal_error&) {
      ok = false;
    }
  }
  Index power = 1;
  for (unsigned n = 1; n <= 7 && ok; ++n) {
    power *= 3;
    ok = v3_valuation(power).exponent == n;
  }
  for (Index n = 2; n <= 6 && ok; ++n) ok = check_index_family(19, n);
  ok = ok && check_index_family(19, 3);        // 19^1 * 3^3
  ok = ok && check_index_family(19 * 19, 4);   // 19^2 * 3^4
  double dt = seconds_since(t0);
  ok = ok && dt < 5.0;
  report(8, "valuation law and M*3^n families", ok, std::to_string(dt) + "s");
}

// Shared scan over 2..200 for criteria 9 and 10.
const std::vector<ScanRecord>& census_scan() {
  static const std::vector<ScanRecord> recs = [] {
    Budget budget;  // default budget
    return jacobsthal_prime_scan(2, 200, budget, 0, nullptr, 4);
  }();
  return recs;
}

void criterion_9() {
  auto t0 = std::chrono::steady_clock::now();
  std::set<Index> composite_index_jprime;
  for (const auto& r : census_scan()) {
    if (r.index_class == IndexClass::composite && is_prime_class(r.value_class)) {
      composite_index_jprime.insert(r.q);
    }
  }
  bool ok = composite_index_jprime == std::set<Index>{4};
  report(9, "composite indices with prime J_q in [2,200] are exactly {4}", ok,
         std::to_string(seconds_since(t0)) + "s");
}

void criterion_10() {
  bool ok = false;
  std::size_t further = 0;
  bool all_accounted = true;
  for (const auto& r : census_scan()) {
    if (r.q == 29) {
      ok = r.index_class == IndexClass::prime &&
           r.value_class == PrimeClass::composite && r.factors &&
           r.factors->complete && r.factors->factors.size() == 2 &&
           r.factors->factors[0].first == 59 &&
           r.factors->factors[1].first == 3033169;
    }
    if (r.q > 2 && r.q < 60 && r.q != 29 && r.index_class == IndexClass::prime &&
        r.value_class == PrimeClass::composite) {
      ++further;
    }
    if (r.value_class == PrimeClass::composite && r.q > 2) {
      // every composite record carries factors or an explicit incompleteness
      if (!r.factors || (!r.factors->complete && r.notes.empty())) {
        all_accounted = false;
      }
    }
  }
  ok = ok && further >= 2 && all_accounted;
  report(10, "composite J_29 = 59 * 3033169 plus further prime-index composites",
         ok, std::to_string(further) + " further below 60");
}

void criterion_11() {
  Budget budget;
  bool ok = true;
  for (Index q = 4; q <= 40 && ok; ++q) {
    if (is_probable_prime(Natural(static_cast<unsigned long>(q))) == PrimeClass::prime)
      continue;
    auto r = unit_witness(q, budget);
    if (r.status != WitnessStatus::found) continue;  // residue 0/1, prime, etc.
    ok = r.witness->x == 1;
    if (q == 6) ok = ok && r.witness->big_q == 7;
    if (q == 8) ok = ok && r.witness->big_q == 17;
  }
  // the CLI reports a counterexample via exit code 1 instead of crashing;
  // on the real data the scan completes clean
  auto cli = run_cli("scan unit-witness --range 4..40");
  ok = ok && cli.exit_code == 0;
  report(11, "x = 1 unit witnesses exist for composite q <= 40", ok);
}

void criterion_12() {
  fs::path out1 = fs::temp_directory_path() / "jac_accept_scan1.jsonl";
  fs::path out2 = fs::temp_directory_path() / "jac_accept_scan2.jsonl";
  fs::path out3 = fs::temp_directory_path() / "jac_accept_scan3.jsonl";
  for (const auto& p : {out1, out2, out3}) fs::remove(p);
  auto r1 = run_cli("scan primes --range 2..80 --seed 9 --workers 1 --out " +
                    out1.string());
  auto r2 = run_cli("scan primes --range 2..80 --seed 9 --workers 1 --out " +
                    out2.string());
  auto r3 = run_cli("scan primes --range 2..80 --seed 9 --workers 6 --out " +
                    out3.string());
  std::string b1 = slurp(out1), b2 = slurp(out2), b3 = slurp(out3);
  bool ok = r1.exit_code == 0 && r2.exit_code == 0 && r3.exit_code == 0 &&
            !b1.empty() && b1 == b2 && b1 == b3;
  for (const auto& p : {out1, out2, out3}) fs::remove(p);
  report(12, "byte-identical scan records across reruns and worker counts", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(g_failures) + " CRITERIA FAILED")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
