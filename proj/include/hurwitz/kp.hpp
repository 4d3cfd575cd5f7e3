#pragma once

#include <string>

#include "hurwitz/series.hpp"

namespace hurwitz {

// KP times t_k live in the P alphabet (weight k); psi and xi are unbounded scalars.

/// psi^{-shift} * body, where body may contain nonnegative psi powers only.
/// Confined to this module; public results are plain series.
struct PsiLaurentSeries {
  GradedSeries body;
  int psi_shift = 0;

  /// Cancels common psi factors so psi_shift is minimal (0 when zero).
  PsiLaurentSeries normalized() const;
  bool is_zero() const { return body.is_zero(); }
  PsiLaurentSeries diff(VarId v) const { return {body.diff(v), psi_shift}; }
  PsiLaurentSeries restricted(const Truncation& t) const { return {body.restricted(t), psi_shift}; }
  /// Lowest monomial with a negative psi power after normalization, as text; "" if none.
  std::string first_negative_term() const;
};

PsiLaurentSeries operator+(const PsiLaurentSeries& a, const PsiLaurentSeries& b);
PsiLaurentSeries operator-(const PsiLaurentSeries& a, const PsiLaurentSeries& b);
PsiLaurentSeries operator*(const PsiLaurentSeries& a, const PsiLaurentSeries& b);
PsiLaurentSeries operator*(const PsiLaurentSeries& a, const GradedSeries& scalar);

std::string to_string(const PsiLaurentSeries& s);

/// Weight-k part of exp(-(t_1 + t_2 + ...)/psi).
PsiLaurentSeries scaled_schur(int k, int t_weight_bound);

struct KpOptions {
  /// Flip the sign of the t_1^2 coefficient of s~_2 (detector sanity).
  bool perturb = false;
};

/// R from exp(-(xi/psi) R) = 1 + sum_k xi(xi+psi)...(xi+(k-1)psi) s~_k, up to t-weight N.
/// Throws std::domain_error if log(tau) is not divisible by xi.
PsiLaurentSeries r_series_laurent(int t_weight_bound, KpOptions opts = {});

/// Same, as a polynomial in psi and xi. Throws std::domain_error on a surviving negative psi power.
GradedSeries r_series(int t_weight_bound);

/// d^2R/dt_2^2 - 2 psi xi (d^2R/dt_1^2)^2 - 4/3 d^2R/dt_1 dt_3 + 1/3 psi^2 d^4R/dt_1^4,
/// exact up to t-weight N (R is built four weights higher).
PsiLaurentSeries kp_residual(int t_weight_bound, KpOptions opts = {});

}  // namespace hurwitz
