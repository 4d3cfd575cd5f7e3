#include "hurwitz/verify.hpp"

#include <stdexcept>

#include "hurwitz/classical.hpp"
#include "hurwitz/kp.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/reduced.hpp"
#include "hurwitz/series_kernels.hpp"
#include "hurwitz/symmetric_group.hpp"

namespace hurwitz {

namespace {

std::string first_difference(const GradedSeries& a, const GradedSeries& b) {
  if (a == b) return "";
  if (!(a.truncation() == b.truncation())) return "truncations differ";
  const GradedSeries d = a - b;
  const auto& [m, c] = *d.terms().begin();
  return "coefficient of " + to_string(m) + ": " + to_string(a.coefficient(m)) + " vs " + to_string(b.coefficient(m));
}

IdentityCheck compare(std::string name, const GradedSeries& a, const GradedSeries& b) {
  std::string d = first_difference(a, b);
  return {std::move(name), d.empty(), std::move(d)};
}

IdentityCheck compare(std::string name, const Rational& a, const Rational& b) {
  const bool ok = a == b;
  return {std::move(name), ok, ok ? "" : to_string(a) + " vs " + to_string(b)};
}

std::string profile(const Partition& l, const Partition& m) { return to_string(l) + "/" + to_string(m); }

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const std::vector<KnownExample>& known_examples() {
  static const std::vector<KnownExample> ex = {
      {{2}, "z_{0,1} + z_{1,1}"},
      {{3}, "z_{0,1} - 1/2*z_{0,1}^2 + 3*z_{1,1} + 2*z_{2,1}"},
      {{4}, "z_{0,1} - 5/2*z_{0,1}^2 + 6*z_{1,1} - 2*z_{0,1}*z_{1,1} + 11*z_{2,1} + 6*z_{3,1}"},
      {{5},
       "z_{0,1} - 15/2*z_{0,1}^2 + 5/6*z_{0,1}^3 + 10*z_{1,1} - 15*z_{0,1}*z_{1,1} - 2*z_{1,1}^2"
       " + 35*z_{2,1} - 6*z_{0,1}*z_{2,1} + 50*z_{3,1} + 24*z_{4,1}"},
      {{2, 2}, "-6*z_{0,1} + z_{0,1}^2 + z_{0,2} - 11*z_{1,1} + 2*z_{1,2} - 6*z_{2,1} + 2*z_{2,2}"},
      {{3, 2},
       "-10*z_{0,1} + 9*z_{0,1}^2 + z_{0,2} - z_{0,1}*z_{0,2} - 35*z_{1,1} + 6*z_{0,1}*z_{1,1} + 4*z_{1,2}"
       " - z_{0,1}*z_{1,2} - 50*z_{2,1} + 8*z_{2,2} - 24*z_{3,1} + 6*z_{3,2}"},
      {{2, 2, 2},
       "85*z_{0,1} - 40*z_{0,1}^2 - 18*z_{0,2} + 6*z_{0,1}*z_{0,2} + z_{0,3} + 225*z_{1,1} - 24*z_{0,1}*z_{1,1}"
       " - 51*z_{1,2} + 6*z_{0,1}*z_{1,2} + 3*z_{1,3} + 274*z_{2,1} - 84*z_{2,2} + 6*z_{2,3} + 120*z_{3,1}"
       " - 54*z_{3,2} + 6*z_{3,3}"},
  };
  return ex;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"paper-examples", "triple-agreement", "string-dilaton",
                                                 "psi-string-dilaton", "eqzred", "kp",
                                                 "pivot-independence", "bridge"};
  return names;
}

SuiteReport run_suite(std::string_view name, VerifyContext& ctx) {
  auto merge = [](SuiteReport into, const SuiteReport& more) {
    into.checks.insert(into.checks.end(), more.checks.begin(), more.checks.end());
    return into;
  };
  SuiteReport r;
  if (name == "paper-examples") r = suite_paper_examples(ctx);
  else if (name == "triple-agreement") r = merge(merge(suite_triple_agreement(), suite_two_formula()), suite_eigenbasis());
  else if (name == "string-dilaton") r = suite_string_dilaton(ctx);
  else if (name == "psi-string-dilaton") r = suite_psi_string_dilaton();
  else if (name == "eqzred") r = suite_eqzred();
  else if (name == "kp") r = suite_kp();
  else if (name == "pivot-independence") r = merge(suite_pivot_independence(ctx), suite_reduced_agreement(ctx));
  else if (name == "bridge") r = merge(suite_bridge(ctx), suite_special_degree(ctx));
  else throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  r.suite = std::string(name);
  return r;
}

SuiteReport suite_paper_examples(VerifyContext& ctx) {
  SuiteReport r{"paper-examples", {}};
  for (const auto& ex : known_examples()) {
    const ZPoly got = ctx.engine.compute(XKey::from_partition(ex.lambda));
    const ZPoly want = parse_zpoly(ex.polynomial);
    IdentityCheck c = compare("h" + to_string(ex.lambda), ctx.eval.eval(got), ctx.eval.eval(want));
    if (c.ok) c.detail = got == want ? "exact polynomial match" : "series match, polynomial form differs: " + to_string(got);
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_triple_agreement(int max_degree, int max_m) {
  SuiteReport r{"triple-agreement", {}};
  const GradedSeries Hcj = evolve(max_degree, max_m).H;
  const GradedSeries Hfr = series_log(frobenius_eH(max_degree, max_m), Grading::of(Alphabet::Q));
  for (int K = 1; K <= max_degree; ++K)
    for (const auto& lambda : partitions_of(K))
      for (const auto& mu : partitions_of(K))
        for (int g = 0;; ++g) {
          const int m = static_cast<int>(lambda.length() + mu.length()) + 2 * g - 2;
          if (m > max_m) break;
          if (m < 0) continue;
          const Rational norm = factorial(static_cast<unsigned long>(m)) * aut_order(lambda) * aut_order(mu);
          const Rational oracle = oracle_count(g, lambda, mu).calibrated;
          const Rational cj = potential_coefficient(Hcj, m, lambda, mu) * norm;
          const Rational fr = potential_coefficient(Hfr, m, lambda, mu) * norm;
          const std::string tag = "g" + std::to_string(g) + " " + profile(lambda, mu);
          r.checks.push_back(compare("oracle vs cut-and-join " + tag, oracle, cj));
          r.checks.push_back(compare("frobenius vs cut-and-join " + tag, fr, cj));
        }
  // sentinel: literal count 1/2, calibrated 1, potential coefficient 1/2
  const OracleResult s = oracle_count(0, Partition{2}, Partition{1, 1});
  const bool ok = s.literal == Rational(1, 2) && s.calibrated == 1 &&
                  potential_coefficient(Hcj, 1, Partition{2}, Partition{1, 1}) == Rational(1, 2);
  r.checks.push_back({"sentinel (2)/(1,1)", ok,
                      "literal " + to_string(s.literal) + ", calibrated " + to_string(s.calibrated)});
  return r;
}

SuiteReport suite_two_formula(int q_weight_bound, int beta_bound) {
  SuiteReport r{"two-formula", {}};
  r.checks.push_back(compare("evolve vs frobenius e^H", evolve(q_weight_bound, beta_bound).eH,
                             frobenius_eH(q_weight_bound, beta_bound)));
  return r;
}

SuiteReport suite_eigenbasis(int max_degree) {
  SuiteReport r{"eigenbasis", {}};
  const Truncation t = Truncation{}.with(Alphabet::P, max_degree);
  for (int K = 1; K <= max_degree; ++K)
    for (const auto& lambda : partitions_of(K)) {
      const GradedSeries s = schur_in_power_sums(lambda, t);
      const Rational w = central_weight(lambda);
      IdentityCheck c = compare("W s" + to_string(lambda), cut_join_apply(s), s * w);
      if (c.ok && w != Rational(content_sum(lambda))) {
        c.ok = false;
        c.detail = "eigenvalue differs from content sum";
      }
      r.checks.push_back(std::move(c));
    }
  return r;
}

SuiteReport suite_string_dilaton(VerifyContext& ctx) {
  return {"string-dilaton", check_string_dilaton(ctx.engine, ctx.eval, 3, 2, 3)};
}

SuiteReport suite_psi_string_dilaton(int max_a, int max_ell, int W) {
  SuiteReport r{"psi-string-dilaton", {}};
  const Truncation t = Truncation{}.with(Alphabet::T, W);
  const Truncation t1 = t.lowered(Alphabet::T, 1), t2 = t.lowered(Alphabet::T, 2);
  for (int a = 0; a <= max_a; ++a)
    for (int ell = 1; ell <= max_ell; ++ell) {
      const GradedSeries psi = psi_series(a, ell, t);
      const std::string tag = "(" + std::to_string(a) + "," + std::to_string(ell) + ")";

      const GradedSeries lhs = psi.diff(VarId::t(0, 0));
      const GradedSeries next = psi_series(a, ell + 1, t).restricted(t1);
      GradedSeries shift_sum(t1);
      for (int i = 0; i < W; ++i)
        for (int j = 0; i + j + 1 <= W; ++j) {
          const GradedSeries d = psi.diff(VarId::t(i, j));
          for (const auto& [m, c] : d.terms()) shift_sum.add_term(m * Monomial::var(VarId::t(i, j + 1)), c);
        }
      // forgetting a point is defined on M_{0,n} for n >= 4; the M_{0,3} terms are added back
      GradedSeries unstable(t1);
      if (ell == 1) unstable.add_term(Monomial::var(VarId::t(a, 0)), 1);
      if (ell == 2 && a == 0) unstable.add_term(Monomial(), 1);
      // As stated the identity counts the forgotten point twice; report the exact residual.
      IdentityCheck printed = compare("string Psi" + tag + " as stated", lhs, next + shift_sum);
      if (!printed.ok && (next + shift_sum) - lhs == next - unstable)
        printed.detail += unstable.is_zero() ? "; residual rhs - lhs = Psi_{a,l+1} exactly"
                                             : "; residual rhs - lhs = Psi_{a,l+1} minus the M_{0,3} terms";
      r.checks.push_back(std::move(printed));
      r.checks.push_back(compare("string Psi" + tag + ": dPsi/dt00 = Psi_{a,l+1}", lhs, next));
      r.checks.push_back(compare("string Psi" + tag + ": dPsi/dt00 = sum t_{i,j+1} dPsi/dt_{i,j} + unstable", lhs,
                                 shift_sum + unstable));

      const GradedSeries dil = (psi.euler(Alphabet::T, false) + psi * Rational(ell - 2)).restricted(t2);
      r.checks.push_back(compare("dilaton Psi" + tag, psi.diff(VarId::t(0, 1)), dil));
    }
  return r;
}

SuiteReport suite_eqzred(int max_d, int max_r, int q_weight_bound) {
  SuiteReport r{"eqzred", {}};
  for (int d = 0; d <= max_d; ++d)
    for (int rr = 1; rr <= max_r; ++rr) {
      const EqzredReport e = check_eqzred(d, rr, q_weight_bound);
      r.checks.push_back({"z_{" + std::to_string(d) + "," + std::to_string(rr) + "}", e.ok(), e.detail});
    }
  return r;
}

SuiteReport suite_kp(int residual_bound, int polynomial_bound) {
  SuiteReport r{"kp", {}};
  const GradedSeries R = r_series(3);
  const Truncation t = R.truncation();
  const Grading g = Grading::of(Alphabet::P);
  auto v = [&](VarId x, int e = 1) { return GradedSeries::term(t, Monomial::var(x, e)); };
  const GradedSeries xp = v(VarId::xi()) + v(VarId::psi());
  const GradedSeries x2p = v(VarId::xi()) + v(VarId::psi()) * Rational(2);
  const std::vector<GradedSeries> want = {
      v(VarId::p(1)),
      v(VarId::p(1), 2) * Rational(-1, 2) + xp * v(VarId::p(2)),
      v(VarId::p(1), 3) * Rational(1, 3) - xp * v(VarId::p(1)) * v(VarId::p(2)) * Rational(2) +
          xp * x2p * v(VarId::p(3)),
  };
  for (int k = 1; k <= 3; ++k)
    r.checks.push_back(compare("R weight " + std::to_string(k), R.homogeneous_part(g, k), want[static_cast<std::size_t>(k - 1)]));

  const PsiLaurentSeries res = kp_residual(residual_bound);
  r.checks.push_back({"residual up to weight " + std::to_string(residual_bound), res.is_zero(),
                      res.is_zero() ? "" : "first term " + to_string(res.body.terms().begin()->first)});
  try {
    (void)r_series(polynomial_bound);
    r.checks.push_back({"polynomial in psi, xi up to weight " + std::to_string(polynomial_bound), true, ""});
  } catch (const std::domain_error& e) {
    r.checks.push_back({"polynomial in psi, xi up to weight " + std::to_string(polynomial_bound), false, e.what()});
  }
  return r;
}

SuiteReport suite_pivot_independence(VerifyContext& ctx, int max_lambda_weight, int max_r, int max_nu_weight) {
  SuiteReport r{"pivot-independence", {}};
  for (const auto& key : enumerate_keys(max_lambda_weight, max_nu_weight, max_r)) {
    if (key.lambda_weight() == 0) continue;
    const GradedSeries base = ctx.eval.eval(ctx.engine.compute(key));
    for (std::size_t i = 1; i < key.size(); ++i) {
      if (key.entries()[i].first < 1 || key.entries()[i] == key.entries()[i - 1]) continue;
      r.checks.push_back(compare(to_string(key) + " pivot " + std::to_string(i),
                                 ctx.eval.eval(ctx.engine.compute_with_pivot(key, i)), base));
    }
  }
  return r;
}

SuiteReport suite_reduced_agreement(VerifyContext& ctx, int max_lambda_weight, int max_r, int max_nu_weight) {
  SuiteReport r{"reduced-agreement", {}};
  ReducedEngine reduced;
  for (const auto& key : enumerate_keys(max_lambda_weight, max_nu_weight, max_r)) {
    if (!ReducedKey::from_xkey(key)) continue;
    r.checks.push_back(compare("reduced " + to_string(key), ctx.eval.eval(reduced.compute(key)),
                               ctx.eval.eval(ctx.engine.compute(key))));
  }
  return r;
}

SuiteReport suite_bridge(VerifyContext& ctx, int max_degree, int max_length, int q_weight_bound) {
  SuiteReport r{"bridge", {}};
  const HSeriesBuilder classical(q_weight_bound);
  const ZEvaluator eval(ZSeriesOptions{q_weight_bound, std::nullopt, false});
  for (int K = 1; K <= max_degree; ++K)
    for (const auto& lambda : partitions_of(K)) {
      if (static_cast<int>(lambda.length()) > max_length) continue;
      r.checks.push_back(compare("h" + to_string(lambda), eval.eval(ctx.engine.compute(XKey::from_partition(lambda))),
                                 classical.h_lambda(lambda)));
    }
  return r;
}

SuiteReport suite_special_degree(VerifyContext& ctx, int max_k) {
  SuiteReport r{"special-degree", {}};
  for (int k = 1; k <= max_k; ++k) {
    const GradedSeries h = ctx.eval.eval(ctx.engine.compute(XKey{{k, 0}}));
    r.checks.push_back(compare("q_" + std::to_string(k) + " in h(" + std::to_string(k) + ")",
                               h.coefficient(Monomial::var(VarId::q(k))), Rational(1, k)));
  }
  return r;
}

io::Json to_json(const SuiteReport& r) {
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks)
    checks.push_back(io::Json{{"name", c.name}, {"status", c.ok ? "pass" : "fail"}, {"detail", c.detail}});
  return io::Json{{"suite", r.suite}, {"checks", std::move(checks)}};
}

}  // namespace hurwitz
