#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jacobsthal/factorize.hpp"

namespace jac {

// Persistent map from decimal values to known factorizations, reused across
// scans. Plain text, one entry per line:
//
//   value=p1^e1,p2^e2[,C<cofactor>]
//
// Loaded fully at startup; entries failing the product check are discarded
// with a warning. Saved by write-temp-then-rename.
class FactorCache {
public:
  FactorCache() = default;
  explicit FactorCache(std::filesystem::path path) : path_(std::move(path)) {
    if (!path_.empty() && std::filesystem::exists(path_)) load();
  }

  std::optional<Factorization> get(const Natural& n) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(to_decimal(n));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void put(const Factorization& f) {
    std::lock_guard lock(mu_);
    entries_[to_decimal(f.n)] = f;
    dirty_ = true;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

  // Re-checks every entry: product invariant plus primality of each listed
  // prime. Returns the keys of offending entries.
  std::vector<std::string> verify() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> bad;
    for (const auto& [key, f] : entries_) {
      if (to_decimal(f.product()) != key) {
        bad.push_back(key);
        continue;
      }
      for (const auto& [p, e] : f.factors) {
        if (!is_prime_class(is_probable_prime(p))) {
          bad.push_back(key);
          break;
        }
      }
    }
    return bad;
  }

  void save() const {
    std::lock_guard lock(mu_);
    if (path_.empty()) return;
    std::filesystem::path tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write cache file: " + tmp.string());
      for (const auto& [key, f] : entries_) {
        out << format_entry(key, f) << '\n';
      }
    }
    std::filesystem::rename(tmp, path_);
    dirty_ = false;
  }

  void save_if_dirty() const {
    if (dirty_) save();
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    std::lock_guard lock(mu_);
    for (const auto& [key, f] : entries_) fn(key, f);
  }

  static std::string format_entry(const std::string& key, const Factorization& f) {
    std::string line = key;
    line += '=';
    bool first = true;
    for (const auto& [p, e] : f.factors) {
      if (!first) line += ',';
      first = false;
      line += to_decimal(p);
      line += '^';
      line += std::to_string(e);
    }
    if (f.cofactor) {
      if (!first) line += ',';
      line += 'C';
      line += to_decimal(*f.cofactor);
    }
    return line;
  }

private:
  void load() {
    std::ifstream in(path_);
    std::string line;
    std::size_t discarded = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto parsed = parse_entry(line);
      if (!parsed) {
        ++discarded;
        continue;
      }
      entries_[to_decimal(parsed->n)] = std::move(*parsed);
    }
    if (discarded > 0) {
      std::cerr << "warning: discarded " << discarded
                << " corrupt cache entr" << (discarded == 1 ? "y" : "ies")
                << " from " << path_.string() << '\n';
    }
  }

  static std::optional<Factorization> parse_entry(const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) return std::nullopt;
    Factorization f;
    try {
      f.n = Natural(line.substr(0, eq));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    std::size_t pos = eq + 1;
    while (pos < line.size()) {
      auto end = line.find(',', pos);
      if (end == std::string::npos) end = line.size();
      std::string part = line.substr(pos, end - pos);
      pos = end + 1;
      if (part.empty()) return std::nullopt;
      try {
        if (part[0] == 'C') {
          f.cofactor = Natural(part.substr(1));
          f.complete = false;
        } else {
          auto caret = part.find('^');
          if (caret == std::string::npos) return std::nullopt;
          Natural p(part.substr(0, caret));
          unsigned long e = std::stoul(part.substr(caret + 1));
          if (e == 0) return std::nullopt;
          f.factors.emplace_back(std::move(p), static_cast<unsigned>(e));
        }
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    if (f.product() != f.n) return std::nullopt;
    for (std::size_t i = 1; i < f.factors.size(); ++i) {
      if (!(f.factors[i - 1].first < f.factors[i].first)) return std::nullopt;
    }
    return f;
  }

  std::filesystem::path path_;
  std::map<std::string, Factorization> entries_;
  mutable std::mutex mu_;
  mutable bool dirty_ = false;
};

// Cache-aware factorize: consult before working, record after.
inline Factorization factorize_cached(const Natural& n, const Budget& budget,
                                      std::uint64_t seed, FactorCache* cache) {
  if (cache) {
    if (auto hit = cache->get(n)) return *hit;
  }
  Factorization f = factorize(n, budget, seed);
  if (cache) cache->put(f);
  return f;
}

}  // namespace jac
