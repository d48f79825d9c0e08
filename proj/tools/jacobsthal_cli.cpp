// Command-line surface for the Jacobsthal divisibility toolkit.
//
// Exit codes: 0 = ran and matched the expected profile, 1 = completed but
// found an unexpected mathematical result (counterexample), 2 = usage or
// I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacobsthal/jacobsthal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct Range {
  jac::Index lo = 0;
  jac::Index hi = 0;
};

bool parse_range(const std::string& s, Range& r) {
  auto pos = s.find("..");
  if (pos == std::string::npos) return false;
  try {
    r.lo = std::stoull(s.substr(0, pos));
    r.hi = std::stoull(s.substr(pos + 2));
  } catch (const std::exception&) {
    return false;
  }
  return r.lo <= r.hi;
}

struct Options {
  std::string format = "text";
  std::string cache_path;
  std::string out_path;
  std::uint64_t budget_units = 2000000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

bool records_format(const Options& o) { return o.format == "records"; }

// Writes rows to --out (always as records) and echoes them to stdout in the
// selected format.
class RowSink {
public:
  explicit RowSink(const Options& o) : opts_(o) {
    if (!opts_.out_path.empty()) {
      out_.open(opts_.out_path, std::ios::trunc);
      if (!out_) throw std::runtime_error("cannot open output file: " + opts_.out_path);
    }
  }

  void row(const jac::Json& j, const std::string& text_line) {
    ++count_;
    if (out_.is_open()) out_ << jac::record_line(j) << '\n';
    if (records_format(opts_)) {
      std::cout << jac::record_line(j) << '\n';
    } else if (!text_line.empty()) {
      std::cout << text_line << '\n';
    }
  }

  std::size_t count() const { return count_; }

private:
  const Options& opts_;
  std::ofstream out_;
  std::size_t count_ = 0;
};

std::string fact_text(const jac::Factorization& f) {
  std::string s;
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    if (!first) s += " * ";
    first = false;
    s += jac::to_decimal(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (f.cofactor) {
    if (!first) s += " * ";
    s += "C" + jac::to_decimal(*f.cofactor);
  }
  return s;
}

int cmd_compute(jac::Index k, bool lucas, std::uint64_t mod, bool has_mod,
                const Options& opts) {
  using namespace jac;
  Json j = row_base("compute");
  j["k"] = k;
  j["variant"] = lucas ? "j" : "J";
  std::string value;
  if (has_mod) {
    if (lucas) {
      // j_k mod n = (3 J_k + 2 (-1)^k) mod n, via the residue path
      Natural t = Natural(3) * Natural(static_cast<unsigned long>(jacobsthal_mod(k, mod).value));
      t += is_even(k) ? 2 : -2;
      t += 2 * Natural(static_cast<unsigned long>(mod));
      t %= static_cast<unsigned long>(mod);
      value = to_decimal(t);
    } else {
      value = std::to_string(jacobsthal_mod(k, mod).value);
    }
    j["mod"] = mod;
  } else {
    value = to_decimal(lucas ? jacobsthal_lucas(k) : ::jac::jacobsthal(k));
  }
  j["value"] = value;
  if (records_format(opts)) {
    std::cout << record_line(j) << '\n';
  } else {
    std::cout << value << '\n';
  }
  return kExitOk;
}

int cmd_identity(const std::string& name, const Range& range, const Options& opts) {
  using namespace jac;
  IdentityReport rep = sweep_identity(name, range.lo, range.hi);
  RowSink sink(opts);
  sink.row(identity_report_json(rep),
           "identity " + name + " range " + std::to_string(range.lo) + ".." +
               std::to_string(range.hi) + ": checked=" + std::to_string(rep.checked) +
               " failures=" + std::to_string(rep.failures.size()));
  for (const auto& v : rep.failures) {
    sink.row(identity_verdict_json(v),
             "  FAIL at index " + std::to_string(v.index) + ": lhs=" + to_decimal(v.lhs) +
                 " rhs=" + to_decimal(v.rhs));
  }
  // triple-literal is the documented erratum: every check is expected to fail
  bool expect_all_fail = (name == "triple-literal");
  bool matched = expect_all_fail ? rep.failures.size() == rep.checked
                                 : rep.failures.empty();
  return matched ? kExitOk : kExitFinding;
}

int cmd_divides(jac::Index n, jac::Index m, const Options& opts) {
  using namespace jac;
  bool value_div = divides_index(n, m);
  bool index_div = (m % n == 0);
  Json j = row_base("divides");
  j["n"] = n;
  j["m"] = m;
  j["value_divides"] = value_div;
  j["index_divides"] = index_div;
  j["iff_holds"] = (value_div == index_div);
  if (value_div != index_div) {
    j["note"] = "literal iff fails; J_1 = J_2 = 1 divide everything";
  }
  RowSink sink(opts);
  std::string text = "J_" + std::to_string(n) + (value_div ? " | " : " ∤ ") + "J_" +
                     std::to_string(m) + "; " + std::to_string(n) +
                     (index_div ? " | " : " ∤ ") + std::to_string(m) +
                     (value_div == index_div ? "" : "  (literal iff fails here)");
  sink.row(j, text);
  return kExitOk;
}

int cmd_gcd_law(const Range& range, std::uint64_t pairs, const Options& opts) {
  using namespace jac;
  std::mt19937_64 rng(opts.seed);
  auto draw = [&] {
    return range.lo + static_cast<Index>(rng() % (range.hi - range.lo + 1));
  };
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    Index m = draw(), n = draw();
    try {
      gcd_jacobsthal(m, n);
    } catch (const internal_error&) {
      ++failures;
      std::cout << "gcd law FAILED at (" << m << ", " << n << ")\n";
    }
  }
  Json j = row_base("gcd-law");
  j["pairs"] = pairs;
  j["seed"] = opts.seed;
  j["range"] = std::to_string(range.lo) + ".." + std::to_string(range.hi);
  j["failures"] = failures;
  RowSink sink(opts);
  sink.row(j, "gcd law: " + std::to_string(pairs) + " pairs, " +
                  std::to_string(failures) + " failures");
  return failures == 0 ? kExitOk : kExitFinding;
}

int cmd_valuation(jac::Index k, const Options& opts) {
  using namespace jac;
  ValuationResult r = v3_valuation(k);
  Json j = row_base("valuation");
  j["k"] = k;
  j["prime"] = 3;
  j["exponent"] = r.exponent;
  j["formula"] = r.formula;
  j["agree"] = (r.exponent == r.formula);
  if (records_format(opts)) {
    std::cout << record_line(j) << '\n';
  } else {
    std::cout << "v_3(J_" << k << ") = " << r.exponent << " (formula v_3(" << k
              << ") = " << r.formula << ", agree)\n";
  }
  return kExitOk;
}

int cmd_decompose(jac::Index q, const Options& opts) {
  using namespace jac;
  Decomposition d = decompose(q);
  Json j = row_base("decompose");
  j["q"] = q;
  j["m"] = d.m;
  j["k"] = d.k;
  j["cofactor"] = to_decimal(d.cofactor);
  if (records_format(opts)) {
    std::cout << record_line(j) << '\n';
  } else {
    std::cout << "J_" << q << " = lcm(J_" << d.m << ", J_" << d.k << ") * "
              << to_decimal(d.cofactor) << '\n';
  }
  return kExitOk;
}

int cmd_scan_primes(const Range& range, const Options& opts) {
  using namespace jac;
  FactorCache cache(opts.cache_path);
  FactorCache* cp = opts.cache_path.empty() ? nullptr : &cache;
  Budget budget = Budget::from_units(opts.budget_units);
  auto records = jacobsthal_prime_scan(range.lo, range.hi, budget, opts.seed, cp,
                                       opts.workers);
  RowSink sink(opts);
  std::uint64_t unexpected = 0;
  for (const auto& r : records) {
    bool jprime = is_prime_class(r.value_class);
    // Cor 6: J_4 = 5 is expected to be the only Jacobsthal prime with
    // composite index.
    if (r.index_class == IndexClass::composite && jprime && r.q != 4) ++unexpected;
    std::string text = "q=" + std::to_string(r.q) + " [" +
                       index_class_name(r.index_class) + " index] J_q (" +
                       std::to_string(r.value_digits) + " digits) " +
                       prime_class_name(r.value_class);
    if (r.factors) text += " = " + fact_text(*r.factors);
    if (!r.notes.empty()) text += " (" + r.notes + ")";
    sink.row(scan_record_json(r), text);
  }
  if (cp) cache.save_if_dirty();
  std::cout << "scan primes " << range.lo << ".." << range.hi << ": "
            << sink.count() << " records, " << unexpected
            << " unexpected composite-index primes\n";
  return unexpected == 0 ? kExitOk : kExitFinding;
}

int cmd_scan_witness(const Range& range, const Options& opts) {
  using namespace jac;
  Budget budget = Budget::from_units(opts.budget_units);
  auto records = unit_witness_scan(range.lo, range.hi, budget, opts.seed, opts.workers);
  RowSink sink(opts);
  std::uint64_t counterexamples = 0;
  for (const auto& r : records) {
    std::string text = "q=" + std::to_string(r.q) + " " +
                       witness_status_name(r.result.status);
    if (r.result.witness) {
      const auto& w = *r.result.witness;
      text += ": M=" + std::to_string(w.residue_m) + " Q=" + to_decimal(w.big_q) +
              " x=" + std::to_string(w.x);
      // Conjecture 12 says a witness with x = 1 should exist.
      if (w.x != 1) {
        ++counterexamples;
        text += "  <- no x=1 witness (conjecture counterexample)";
      }
    }
    sink.row(witness_record_json(r), text);
  }
  std::cout << "scan unit-witness " << range.lo << ".." << range.hi << ": "
            << sink.count() << " records, " << counterexamples
            << " conjecture counterexamples\n";
  return counterexamples == 0 ? kExitOk : kExitFinding;
}

int cmd_scan_max_divisor(const Range& range, const Options& opts) {
  using namespace jac;
  Budget budget = Budget::from_units(opts.budget_units);
  auto records = max_divisor_scan(range.lo, range.hi, budget, opts.seed, opts.workers);
  RowSink sink(opts);
  std::uint64_t findings = 0;
  for (const auto& r : records) {
    std::string text = "q=" + std::to_string(r.q) + " ";
    if (!r.applicable) {
      text += "not applicable";
    } else if (r.verdict.status == MaxDivisorStatus::holds) {
      text += "holds: max divisor " + to_decimal(r.verdict.divisor) + " is non-Jacobsthal";
    } else if (r.verdict.status == MaxDivisorStatus::fails) {
      text += "FAILS: max divisor " + to_decimal(r.verdict.divisor) + " is Jacobsthal";
      ++findings;
    } else {
      text += "inconclusive (budget exhausted)";
    }
    sink.row(max_divisor_record_json(r), text);
  }
  std::cout << "scan max-divisor " << range.lo << ".." << range.hi << ": "
            << sink.count() << " records, " << findings << " findings\n";
  return findings == 0 ? kExitOk : kExitFinding;
}

int cmd_scan_family(jac::Index m_base, const Range& range, const Options& opts) {
  using namespace jac;
  auto records = family_scan(m_base, range.lo, range.hi, opts.workers);
  RowSink sink(opts);
  for (const auto& r : records) {
    sink.row(family_record_json(r),
             std::to_string(r.family_index) + " = " + std::to_string(r.m_base) +
                 "*3^" + std::to_string(r.n) +
                 (r.divides ? " divides" : " does not divide") + " J_" +
                 std::to_string(r.family_index));
  }
  std::cout << "scan family M=" << m_base << " n=" << range.lo << ".." << range.hi
            << ": " << sink.count() << " records\n";
  return kExitOk;
}

int cmd_cache_show(const Options& opts) {
  using namespace jac;
  FactorCache cache(opts.cache_path);
  cache.for_each([](const std::string& key, const Factorization& f) {
    std::cout << FactorCache::format_entry(key, f) << '\n';
  });
  return kExitOk;
}

int cmd_cache_verify(const Options& opts) {
  using namespace jac;
  FactorCache cache(opts.cache_path);
  auto bad = cache.verify();
  std::cout << "cache " << opts.cache_path << ": " << cache.size() << " entries, "
            << bad.size() << " invalid\n";
  for (const auto& k : bad) std::cout << "  invalid: " << k << '\n';
  return bad.empty() ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobsthal number divisibility toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain valid after a subcommand name

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->envname("JACOBSTHAL_FORMAT");
  app.add_option("--cache", opts.cache_path, "Factor cache file")
      ->envname("JACOBSTHAL_CACHE");
  app.add_option("--budget", opts.budget_units,
                 "Factoring work units (rho iterations; trial bound = min(units, 1e6))")
      ->envname("JACOBSTHAL_BUDGET");
  app.add_option("--seed", opts.seed, "Deterministic seed")->envname("JACOBSTHAL_SEED");
  app.add_option("--workers", opts.workers, "Worker threads for scans")
      ->check(CLI::PositiveNumber)
      ->envname("JACOBSTHAL_WORKERS");
  app.add_option("--out", opts.out_path, "Record output file (JSON lines)")
      ->envname("JACOBSTHAL_OUT");

  std::string range_str;
  jac::Index arg_k = 0, arg_n = 0, arg_m = 0;
  std::uint64_t arg_mod = 0, arg_pairs = 1000;
  bool arg_lucas = false;
  std::string identity_name;

  auto* compute = app.add_subcommand("compute", "Compute J_k (or j_k with --lucas)");
  compute->add_option("k", arg_k, "Sequence index")->required();
  compute->add_flag("--lucas", arg_lucas, "Jacobsthal-Lucas variant j_k");
  auto* mod_opt = compute->add_option("--mod", arg_mod, "Reduce modulo N");

  auto* identity = app.add_subcommand("identity", "Sweep an identity over a range");
  identity->add_option("name", identity_name, "Identity tag")
      ->required()
      ->check(CLI::IsMember({"double", "triple-literal", "triple-corrected",
                             "cofactor", "alt-geometric", "geometric"}));
  identity->add_option("--range", range_str, "Index range A..B")->required();

  auto* divides = app.add_subcommand("divides", "Test J_n | J_m against n | m");
  divides->add_option("n", arg_n)->required();
  divides->add_option("m", arg_m)->required();

  auto* gcd_law = app.add_subcommand("gcd-law", "Random-pair strong divisibility check");
  gcd_law->add_option("--range", range_str, "Index range A..B")->required();
  gcd_law->add_option("--pairs", arg_pairs, "Number of random pairs");

  auto* valuation = app.add_subcommand("valuation", "3-adic valuation of J_k");
  valuation->add_option("k", arg_k)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "J_q = lcm(J_m,J_k) * R");
  decompose_cmd->add_option("q", arg_k)->required();

  auto* scan = app.add_subcommand("scan", "Conjecture evidence scans");
  scan->require_subcommand(1);
  auto* scan_primes = scan->add_subcommand("primes", "Jacobsthal prime census");
  scan_primes->add_option("--range", range_str)->required();
  auto* scan_witness = scan->add_subcommand("unit-witness", "Unit witness search");
  scan_witness->add_option("--range", range_str)->required();
  auto* scan_maxdiv = scan->add_subcommand("max-divisor", "Maximal divisor check");
  scan_maxdiv->add_option("--range", range_str)->required();
  auto* scan_family = scan->add_subcommand("family", "M*3^n index family");
  scan_family->add_option("M", arg_m, "Family base")->required();
  scan_family->add_option("--range", range_str, "Exponent range A..B")->required();

  auto* cache_cmd = app.add_subcommand("cache", "Factor cache inspection");
  cache_cmd->require_subcommand(1);
  auto* cache_show = cache_cmd->add_subcommand("show", "Print all entries");
  auto* cache_verify = cache_cmd->add_subcommand("verify", "Re-check all entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Range range;
  if (!range_str.empty() && !parse_range(range_str, range)) {
    std::cerr << "invalid range: " << range_str << " (expected A..B with A <= B)\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(arg_k, arg_lucas, arg_mod, mod_opt->count() > 0, opts);
    }
    if (identity->parsed()) return cmd_identity(identity_name, range, opts);
    if (divides->parsed()) return cmd_divides(arg_n, arg_m, opts);
    if (gcd_law->parsed()) return cmd_gcd_law(range, arg_pairs, opts);
    if (valuation->parsed()) return cmd_valuation(arg_k, opts);
    if (decompose_cmd->parsed()) return cmd_decompose(arg_k, opts);
    if (scan_primes->parsed()) return cmd_scan_primes(range, opts);
    if (scan_witness->parsed()) return cmd_scan_witness(range, opts);
    if (scan_maxdiv->parsed()) return cmd_scan_max_divisor(range, opts);
    if (scan_family->parsed()) return cmd_scan_family(arg_m, range, opts);
    if (cache_show->parsed()) return cmd_cache_show(opts);
    if (cache_verify->parsed()) return cmd_cache_verify(opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
