#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// chi^lambda at the class mu, by border-strip removal. Memoized, thread safe.
/// Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// Character table of S_K; rows and columns in reverse lexicographic order.
class CharTable {
 public:
  explicit CharTable(int K);

  int degree() const { return K_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::int64_t value(const Partition& lambda, const Partition& mu) const;
  std::int64_t value(std::size_t row, std::size_t col) const { return values_[row * parts_.size() + col]; }
  /// z_mu of a column.
  BigInt centralizer(std::size_t col) const { return centralizer_order(parts_[col]); }

 private:
  int K_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::int64_t> values_;
};

/// s_lambda = sum_mu chi^lambda_mu x_mu / z_mu in the power sums of one alphabet (P or Q).
GradedSeries schur_in_power_sums(const Partition& lambda, const Truncation& trunc,
                                 Alphabet alphabet = Alphabet::P);

/// Eigenvalue of the cut-and-join operator on s_lambda:
/// 1/2 sum_i ((lambda_i - i + 1/2)^2 - (-i + 1/2)^2).
Rational central_weight(const Partition& lambda);

/// Sum of contents of the diagram; equals central_weight.
BigInt content_sum(const Partition& lambda);

}  // namespace hurwitz
