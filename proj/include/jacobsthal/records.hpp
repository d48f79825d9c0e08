#pragma once

#include <string>

#include <json.hpp>

#include "jacobsthal/identities.hpp"
#include "jacobsthal/scan.hpp"

namespace jac {

// Line-delimited report rows. Every row is self-describing via "command"
// and "schema_version"; nlohmann::json keeps object keys sorted, so the
// serialized bytes are stable across runs and worker counts.

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

inline Json row_base(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

inline Json factorization_json(const Factorization& f) {
  Json j;
  j["value"] = to_decimal(f.n);
  Json fac = Json::array();
  for (const auto& [p, e] : f.factors) {
    fac.push_back(Json{{"prime", to_decimal(p)}, {"exponent", e}});
  }
  j["factors"] = fac;
  j["complete"] = f.complete;
  if (f.cofactor) j["cofactor"] = to_decimal(*f.cofactor);
  return j;
}

inline Json scan_record_json(const ScanRecord& r) {
  Json j = row_base("scan-primes");
  j["q"] = r.q;
  j["index_class"] = index_class_name(r.index_class);
  j["value_digits"] = r.value_digits;
  j["value_class"] = prime_class_name(r.value_class);
  if (r.factors) j["factors"] = factorization_json(*r.factors);
  j["notes"] = r.notes;
  return j;
}

inline Json witness_record_json(const WitnessScanRecord& r) {
  Json j = row_base("scan-unit-witness");
  j["q"] = r.q;
  j["index_composite"] = r.index_composite;
  j["status"] = witness_status_name(r.result.status);
  if (r.result.witness) {
    const UnitWitness& w = *r.result.witness;
    j["residue"] = w.residue_m;
    j["Q"] = to_decimal(w.big_q);
    j["x"] = w.x;
  }
  return j;
}

inline Json max_divisor_record_json(const MaxDivisorScanRecord& r) {
  Json j = row_base("scan-max-divisor");
  j["q"] = r.q;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    switch (r.verdict.status) {
      case MaxDivisorStatus::holds:
        j["status"] = "holds";
        j["max_divisor"] = to_decimal(r.verdict.divisor);
        break;
      case MaxDivisorStatus::fails:
        j["status"] = "fails";
        j["max_divisor"] = to_decimal(r.verdict.divisor);
        break;
      case MaxDivisorStatus::budget_exhausted:
        j["status"] = "budget_exhausted";
        break;
    }
  }
  return j;
}

inline Json family_record_json(const FamilyScanRecord& r) {
  Json j = row_base("scan-family");
  j["M"] = r.m_base;
  j["n"] = r.n;
  j["family_index"] = r.family_index;
  j["divides"] = r.divides;
  return j;
}

inline Json identity_verdict_json(const IdentityVerdict& v) {
  Json j = row_base("identity");
  j["identity"] = v.name;
  j["index"] = v.index;
  if (v.index2 != 0) j["index2"] = v.index2;
  j["holds"] = v.holds;
  j["lhs"] = to_decimal(v.lhs);
  j["rhs"] = to_decimal(v.rhs);
  return j;
}

inline Json identity_report_json(const IdentityReport& r) {
  Json j = row_base("identity-summary");
  j["identity"] = r.name;
  j["range"] = std::to_string(r.lo) + ".." + std::to_string(r.hi);
  j["checked"] = r.checked;
  j["failures"] = r.failures.size();
  return j;
}

inline std::string record_line(const Json& j) { return j.dump(); }

}  // namespace jac
