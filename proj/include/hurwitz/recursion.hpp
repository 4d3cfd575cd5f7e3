#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/zalgebra.hpp"

namespace hurwitz {

/// Multiset of (lambda_i, nu_i) pairs, kept sorted in decreasing order.
class XKey {
 public:
  using Entry = std::pair<int, int>;

  XKey() = default;
  /// Throws std::invalid_argument on negative entries.
  explicit XKey(std::vector<Entry> entries);
  XKey(std::initializer_list<Entry> entries) : XKey(std::vector<Entry>(entries)) {}
  /// (lambda_1, 0), ..., (lambda_r, 0).
  static XKey from_partition(const Partition& lambda);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int lambda_weight() const;
  int nu_weight() const;

  auto operator<=>(const XKey&) const = default;
  bool operator==(const XKey&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// "(2,0)(1,1)"
std::string to_string(const XKey& k);
/// Inverse of to_string. Throws std::invalid_argument.
XKey parse_xkey(std::string_view text);

/// x with every lambda_i = 0: multinomial(|nu|; nu) z_{|nu|,r}.
ZPoly initial_x(std::span<const int> nu);

struct XEntry {
  ZPoly value;
  std::string rule;  // "initial", "recursion pivot (s,m)" or "cache"
};

/// Memoized coefficient-level recursion for the correlators x_{lambda,nu}.
/// Readers share the table; a computed entry is inserted once and never changes.
class RecursionEngine {
 public:
  RecursionEngine() = default;
  RecursionEngine(const RecursionEngine&) = delete;
  RecursionEngine& operator=(const RecursionEngine&) = delete;

  /// Canonical pivot: largest lambda, ties broken by larger nu.
  ZPoly compute(const XKey& key);
  /// Same correlator with the top-level step raising entry `pivot` (needs lambda >= 1).
  ZPoly compute_with_pivot(const XKey& key, std::size_t pivot);

  /// Every key with lambda weight <= L, nu weight <= N and 1 <= r <= R, level by level in parallel.
  void compute_all(int max_lambda_weight, int max_r, int max_nu_weight = 0);

  std::map<XKey, XEntry> snapshot() const;
  std::optional<XEntry> lookup(const XKey& key) const;
  std::size_t size() const;

  /// JSON cache with a version stamp. load() returns false (and leaves the table
  /// untouched) if the file is missing or stamped with another version.
  void save(const std::filesystem::path& file) const;
  bool load(const std::filesystem::path& file);

  static const char* cache_version();

 private:
  ZPoly step(const XKey& key, std::size_t pivot);
  void store(const XKey& key, ZPoly value, std::string rule);

  mutable std::shared_mutex mu_;
  std::map<XKey, XEntry> table_;
};

/// All keys with the given bounds (lambda weight, nu weight, size), deterministic order.
std::vector<XKey> enumerate_keys(int max_lambda_weight, int max_nu_weight, int max_r, int min_r = 1);

struct IdentityCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// String and dilaton equations on correlators:
///   x_{(0,0) u R} = sum_{j: nu_j >= 1} x_{R, nu_j - 1} + E(x_R)
///   x_{(0,1) u R} = (|R| - 2) x_R + D(x_R)
/// for every key with the given bounds containing (0,0) resp. (0,1) and |R| >= 1.
std::vector<IdentityCheck> check_string_dilaton(RecursionEngine& engine, const ZEvaluator& eval,
                                                int max_lambda_weight, int max_nu_weight, int max_r);

}  // namespace hurwitz
