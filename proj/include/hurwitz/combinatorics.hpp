#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Parts may be given in any order; they are sorted. Throws on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int value) const;

  /// Plain lexicographic order on the part vectors (map-key order).
  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// True iff a precedes b in reverse lexicographic order, e.g. (3) < (2,1) < (1,1,1).
bool reverse_lex_less(const Partition& a, const Partition& b);

/// All partitions of n (parts <= max_part if given), reverse lexicographic order.
std::vector<Partition> partitions_of(int n, std::optional<int> max_part = std::nullopt);

/// Product over distinct part values of (multiplicity)!.
BigInt aut_order(const Partition& p);

/// Centralizer order z = prod_i i^{m_i} m_i!.
BigInt centralizer_order(const Partition& p);

/// Number of permutations of S_|p| with cycle type p.
BigInt class_size(const Partition& p);

/// Falling-factorial binomial a(a-1)...(a-d+1)/d!, valid for negative a.
Rational gen_binomial(const BigInt& a, int d);

/// (sum nu)! / prod nu_i!  for nonnegative entries.
BigInt multinomial(std::span<const int> nu);

/// Ordered tuples of `parts` positive integers summing to `total`.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace hurwitz
