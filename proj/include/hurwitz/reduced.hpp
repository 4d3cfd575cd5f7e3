#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hurwitz/recursion.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/zalgebra.hpp"

namespace hurwitz {

/// Correlator of the reduced potential: one distinguished entry (s,m) that may
/// carry both a degeneracy and a psi power, plus p-entries (lambda >= 1, nu = 0)
/// and t-entries (lambda = 0).
struct ReducedKey {
  int s = 0;
  int m = 0;
  std::vector<int> p;  // lambda values, sorted decreasing
  std::vector<int> t;  // nu values, sorted decreasing

  ReducedKey() = default;
  ReducedKey(int s_, int m_, std::vector<int> p_, std::vector<int> t_);

  /// Succeeds iff at most one entry has lambda >= 1 and nu >= 1.
  static std::optional<ReducedKey> from_xkey(const XKey& key);
  XKey to_xkey() const;

  auto operator<=>(const ReducedKey&) const = default;
  bool operator==(const ReducedKey&) const = default;
};

/// Psi-bar_{a,l} in p_i (VarId::p) and t_j (VarId::t(0, j)):
/// sum_{k,j} (1/j! sum_{lambda_i >= 1, sum = a} p_lambda) (1/k! sum_{sum nu = l+k+j-3} multinomial(nu) t_nu).
/// P weight is bounded by a; T weight (t_j weighs j+1) by t_weight_bound.
GradedSeries psibar_series(int a, int ell, int t_weight_bound);

/// The reduced recursion, evaluated through materialized Psi-bar series.
class ReducedEngine {
 public:
  ZPoly compute(const ReducedKey& key);
  ZPoly compute(const XKey& key);  // throws std::invalid_argument if not reducible

  /// One raising step: the correlator of (s+1, m) u rest from the smaller ones.
  ZPoly reduced_step(int s, int m, const std::vector<int>& p, const std::vector<int>& t);

 private:
  Rational psibar_correlator(int a, int ell, int m, const std::vector<int>& p, const std::vector<int>& t);

  std::mutex mu_;
  std::map<ReducedKey, ZPoly> memo_;
  std::map<std::pair<int, int>, GradedSeries> psibar_;
};

}  // namespace hurwitz
