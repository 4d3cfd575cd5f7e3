#include "hurwitz/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "hurwitz/oracle.hpp"
#include "hurwitz/series_kernels.hpp"
#include "hurwitz/symmetric_group.hpp"

namespace hurwitz {

GradedSeries cut_join_apply(const GradedSeries& s) { return kernels::cut_join_parallel(s); }

Truncation potential_truncation(int q_weight_bound, int beta_bound) {
  if (q_weight_bound < 1 || beta_bound < 0) throw std::invalid_argument("potential: bounds must be positive");
  return Truncation{}.with(Alphabet::Q, q_weight_bound).with(Alphabet::P, q_weight_bound).with(Alphabet::Beta, beta_bound);
}

HurwitzPotential evolve(int q_weight_bound, int beta_bound) {
  const Truncation t = potential_truncation(q_weight_bound, beta_bound);
  GradedSeries h0(t);
  for (int n = 1; n <= q_weight_bound; ++n)
    h0.add_term(Monomial({{VarId::p(n), 1}, {VarId::q(n), 1}}), ratio(1, n));
  GradedSeries cur = series_exp(h0, Grading::of(Alphabet::Q));
  GradedSeries eH(t);
  Rational inv_fact = 1;
  for (int m = 0; m <= beta_bound; ++m) {
    if (m > 0) {
      cur = cut_join_apply(cur);
      inv_fact /= m;
    }
    eH += GradedSeries::term(t, Monomial::var(VarId::beta(), m), inv_fact) * cur;
  }
  GradedSeries H = series_log(eH, Grading::of(Alphabet::Q));
  return {std::move(eH), std::move(H), t};
}

GradedSeries frobenius_eH(int q_weight_bound, int beta_bound) {
  const Truncation t = potential_truncation(q_weight_bound, beta_bound);
  GradedSeries out = GradedSeries::constant(t, 1);
  for (int K = 1; K <= q_weight_bound; ++K)
    for (const auto& lambda : partitions_of(K)) {
      GradedSeries flow(t);
      const Rational w = central_weight(lambda);
      Rational c = 1;
      for (int m = 0; m <= beta_bound; ++m) {
        if (m > 0) c = c * w / m;
        flow.add_term(Monomial::var(VarId::beta(), m), c);
      }
      out += flow * schur_in_power_sums(lambda, t, Alphabet::P) * schur_in_power_sums(lambda, t, Alphabet::Q);
    }
  return out;
}

GradedSeries genus0_part(const GradedSeries& H) {
  GradedSeries out(H.truncation());
  for (const auto& [m, c] : H.terms())
    if (m.exponent(VarId::beta()) == m.count(Alphabet::P) + m.count(Alphabet::Q) - 2) out.add_term(m, c);
  return out;
}

HSeriesBuilder::HSeriesBuilder(int q_weight_bound) : bound_(q_weight_bound) {
  // Genus 0 needs beta up to l(lambda) + l(mu) - 2 <= 2K - 2.
  const int beta_bound = std::max(1, 2 * q_weight_bound - 2);
  const GradedSeries g0 = genus0_part(evolve(q_weight_bound, beta_bound).H);
  GradedSeries at_one(g0.truncation().without(Alphabet::Beta));
  for (const auto& [m, c] : g0.terms()) at_one.add_term(m.with_exponent(VarId::beta(), 0), c);
  shifted_ = substitute_p1_shift(at_one);
}

GradedSeries HSeriesBuilder::h_lambda(const Partition& lambda) const {
  if (lambda.empty()) throw std::invalid_argument("h_lambda: empty partition");
  std::vector<Monomial::Factor> pf;
  for (int x : lambda.parts()) pf.emplace_back(VarId::p(x), 1);
  const Monomial target(std::move(pf));
  const Rational aut = aut_order(lambda);
  GradedSeries out(Truncation{}.with(Alphabet::Q, bound_));
  for (const auto& [m, c] : shifted_.terms()) {
    std::vector<Monomial::Factor> pf2, qf;
    for (const auto& f : m.factors()) (f.first.alphabet == Alphabet::P ? pf2 : qf).push_back(f);
    if (Monomial(std::move(pf2)) == target) out.add_term(Monomial(std::move(qf)), c * aut);
  }
  return out;
}

GradedSeries h_lambda_series(const Partition& lambda, int q_weight_bound) {
  return HSeriesBuilder(q_weight_bound).h_lambda(lambda);
}

HurwitzMethod parse_method(std::string_view name) {
  if (name == "oracle") return HurwitzMethod::Oracle;
  if (name == "frobenius") return HurwitzMethod::Frobenius;
  if (name == "cutjoin") return HurwitzMethod::CutJoin;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

Rational potential_coefficient(const GradedSeries& H, int m, const Partition& lambda, const Partition& mu) {
  std::vector<Monomial::Factor> f;
  if (m > 0) f.emplace_back(VarId::beta(), m);
  for (int x : lambda.parts()) f.emplace_back(VarId::p(x), 1);
  for (int x : mu.parts()) f.emplace_back(VarId::q(x), 1);
  return H.coefficient(Monomial(std::move(f)));
}

Rational hurwitz_number(HurwitzMethod method, int genus, const Partition& lambda, const Partition& mu) {
  if (lambda.empty() || lambda.weight() != mu.weight())
    throw std::invalid_argument("profiles must be nonempty partitions of the same degree");
  const int m = static_cast<int>(lambda.length() + mu.length()) + 2 * genus - 2;
  if (genus < 0 || m < 0) throw std::invalid_argument("no covers with this genus and profiles");
  if (method == HurwitzMethod::Oracle) return oracle_count(genus, lambda, mu).calibrated;
  const int K = lambda.weight();
  const GradedSeries H = method == HurwitzMethod::CutJoin
                             ? evolve(K, m).H
                             : series_log(frobenius_eH(K, m), Grading::of(Alphabet::Q));
  return potential_coefficient(H, m, lambda, mu) * factorial(static_cast<unsigned long>(m)) * aut_order(lambda) *
         aut_order(mu);
}

}  // namespace hurwitz
