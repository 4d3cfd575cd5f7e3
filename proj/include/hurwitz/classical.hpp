#pragma once

#include <string_view>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// W acting on a series in the p variables (parallel kernel).
GradedSeries cut_join_apply(const GradedSeries& s);

/// Q and P weights bounded by q_weight_bound, beta degree by beta_bound.
Truncation potential_truncation(int q_weight_bound, int beta_bound);

struct HurwitzPotential {
  GradedSeries eH;
  GradedSeries H;
  Truncation truncation;
};

/// e^H = e^{beta W} e^{sum p_n q_n / n}, expanded to beta^beta_bound; H = log e^H.
HurwitzPotential evolve(int q_weight_bound, int beta_bound);

/// e^H = sum_lambda e^{w(lambda) beta} s_lambda(p) s_lambda(q).
GradedSeries frobenius_eH(int q_weight_bound, int beta_bound);

/// Keeps beta^m p_lambda q_mu with m = l(lambda) + l(mu) - 2.
GradedSeries genus0_part(const GradedSeries& H);

/// h_lambda(q) for several lambda sharing one genus-0 potential.
class HSeriesBuilder {
 public:
  explicit HSeriesBuilder(int q_weight_bound);

  int q_weight_bound() const { return bound_; }
  /// |Aut lambda| times the p_lambda coefficient of H0(p_1 + 1, p_2, ...; q) at beta = 1.
  GradedSeries h_lambda(const Partition& lambda) const;

 private:
  int bound_;
  GradedSeries shifted_;  // genus 0, beta = 1, p_1 -> p_1 + 1
};

GradedSeries h_lambda_series(const Partition& lambda, int q_weight_bound);

enum class HurwitzMethod { Oracle, Frobenius, CutJoin };
HurwitzMethod parse_method(std::string_view name);

/// Double Hurwitz number in the calibrated convention: the coefficient of
/// beta^m p_lambda q_mu in H times m! |Aut lambda| |Aut mu|.
Rational hurwitz_number(HurwitzMethod method, int genus, const Partition& lambda, const Partition& mu);

/// Coefficient of beta^m p_lambda q_mu in a potential.
Rational potential_coefficient(const GradedSeries& H, int m, const Partition& lambda, const Partition& mu);

}  // namespace hurwitz
