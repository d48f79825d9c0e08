#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "jacobsthal/cache.hpp"
#include "jacobsthal/divisibility.hpp"
#include "jacobsthal/modular.hpp"

namespace jac {

// Conjecture-scan drivers. Per-index work fans out to a bounded worker
// pool; results land in an index-ordered vector so output is deterministic
// regardless of worker count.

namespace detail {

template <typename Result, typename Fn>
std::vector<Result> parallel_index_map(Index lo, Index hi, unsigned workers, Fn fn) {
  std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Result> results(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(lo + i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(lo + i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace detail

enum class IndexClass { prime, composite };

// One row of a `scan primes` run (Jacobsthal prime / composite census).
struct ScanRecord {
  Index q = 0;
  IndexClass index_class = IndexClass::composite;
  std::size_t value_digits = 0;
  PrimeClass value_class = PrimeClass::composite;
  std::optional<Factorization> factors;  // for composite J_q, budget allowing
  std::chrono::nanoseconds elapsed{0};   // not serialized; records must be
                                         // byte-stable across reruns
  std::string notes;
};

inline const char* index_class_name(IndexClass c) {
  return c == IndexClass::prime ? "prime" : "composite";
}

inline const char* prime_class_name(PrimeClass c) {
  switch (c) {
    case PrimeClass::prime: return "prime";
    case PrimeClass::probable_prime: return "probable-prime";
    case PrimeClass::composite: return "composite";
  }
  return "?";
}

inline ScanRecord scan_one_index(Index q, const Budget& budget, std::uint64_t seed,
                                 FactorCache* cache) {
  auto start = std::chrono::steady_clock::now();
  ScanRecord rec;
  rec.q = q;
  rec.index_class = is_probable_prime(Natural(static_cast<unsigned long>(q))) ==
                            PrimeClass::prime
                        ? IndexClass::prime
                        : IndexClass::composite;
  Natural jq = jacobsthal(q);
  rec.value_digits = to_decimal(jq).size();
  rec.value_class = is_probable_prime(jq);
  if (rec.value_class == PrimeClass::composite && jq > 1) {
    Factorization f = factorize_cached(jq, budget, seed, cache);
    if (!f.complete) rec.notes = "budget exhausted";
    rec.factors = std::move(f);
  } else if (jq <= 1) {
    rec.notes = "unit value";
  }
  rec.elapsed = std::chrono::steady_clock::now() - start;
  return rec;
}

inline std::vector<ScanRecord> jacobsthal_prime_scan(Index lo, Index hi,
                                                     const Budget& budget,
                                                     std::uint64_t seed = 0,
                                                     FactorCache* cache = nullptr,
                                                     unsigned workers = 1) {
  return detail::parallel_index_map<ScanRecord>(lo, hi, workers, [&](Index q) {
    return scan_one_index(q, budget, seed, cache);
  });
}

struct WitnessScanRecord {
  Index q = 0;
  bool index_composite = false;
  WitnessResult result;
};

inline std::vector<WitnessScanRecord> unit_witness_scan(Index lo, Index hi,
                                                        const Budget& budget,
                                                        std::uint64_t seed = 0,
                                                        unsigned workers = 1) {
  return detail::parallel_index_map<WitnessScanRecord>(lo, hi, workers, [&](Index q) {
    WitnessScanRecord rec;
    rec.q = q;
    rec.index_composite =
        q > 1 && is_probable_prime(Natural(static_cast<unsigned long>(q))) !=
                     PrimeClass::prime;
    rec.result = unit_witness(q, budget, seed);
    return rec;
  });
}

struct MaxDivisorScanRecord {
  Index q = 0;
  bool applicable = false;  // q composite > 4 with composite J_q
  MaxDivisorVerdict verdict;
};

inline std::vector<MaxDivisorScanRecord> max_divisor_scan(Index lo, Index hi,
                                                          const Budget& budget,
                                                          std::uint64_t seed = 0,
                                                          unsigned workers = 1) {
  return detail::parallel_index_map<MaxDivisorScanRecord>(lo, hi, workers,
                                                          [&](Index q) {
    MaxDivisorScanRecord rec;
    rec.q = q;
    if (q > 4 && smallest_prime_factor_index(q) != q &&
        !is_prime_class(is_probable_prime(jacobsthal(q)))) {
      rec.applicable = true;
      rec.verdict = max_divisor_is_non_jacobsthal(q, budget, seed);
    }
    return rec;
  });
}

struct FamilyScanRecord {
  Index m_base = 0;
  Index n = 0;
  Index family_index = 0;  // M * 3^n
  bool divides = false;
};

inline std::vector<FamilyScanRecord> family_scan(Index m_base, Index n_lo, Index n_hi,
                                                 unsigned workers = 1) {
  return detail::parallel_index_map<FamilyScanRecord>(n_lo, n_hi, workers,
                                                      [&](Index n) {
    FamilyScanRecord rec;
    rec.m_base = m_base;
    rec.n = n;
    rec.family_index = m_base;
    for (Index i = 0; i < n; ++i) rec.family_index *= 3;
    rec.divides = check_index_family(m_base, n);
    return rec;
  });
}

}  // namespace jac
