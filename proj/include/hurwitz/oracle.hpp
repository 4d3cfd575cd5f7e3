#pragma once

#include <stdexcept>

#include "hurwitz/combinatorics.hpp"

namespace hurwitz {

/// A brute-force computation would exceed its budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_degree = 6;
  int max_transpositions = 6;
};

struct OracleResult {
  BigInt raw_count;    // lists (sigma, tau_1..tau_m, rho) found
  Rational literal;    // raw_count / K!
  Rational calibrated; // literal * |Aut lambda| * |Aut mu|
  int transpositions = 0;
};

/// Transitive factorizations rho tau_m ... tau_1 sigma = id with sigma of type lambda,
/// rho of type mu and m = l(lambda) + l(mu) + 2g - 2 transpositions, by exhaustive search.
/// Throws std::invalid_argument on bad input, ResourceError past the budget.
OracleResult oracle_count(int genus, const Partition& lambda, const Partition& mu, OracleBudget budget = {});

namespace kernels {
BigInt count_factorizations_serial(const Partition& lambda, const Partition& mu, int m);
BigInt count_factorizations_parallel(const Partition& lambda, const Partition& mu, int m);
}  // namespace kernels

}  // namespace hurwitz
