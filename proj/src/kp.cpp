#include "hurwitz/kp.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace hurwitz {

namespace {

GradedSeries times_psi(const GradedSeries& s, int e) {
  return e == 0 ? s : s.times_monomial(Monomial::var(VarId::psi(), e));
}

Truncation kp_truncation(int N) { return Truncation{}.with(Alphabet::P, N); }

}  // namespace

PsiLaurentSeries PsiLaurentSeries::normalized() const {
  if (body.is_zero()) return {body, 0};
  int low = INT_MAX;
  for (const auto& [m, c] : body.terms()) low = std::min(low, m.exponent(VarId::psi()));
  const int cancel = std::min(low, psi_shift);
  if (cancel <= 0) return *this;
  GradedSeries out(body.truncation());
  for (const auto& [m, c] : body.terms())
    out.add_term(m.with_exponent(VarId::psi(), m.exponent(VarId::psi()) - cancel), c);
  return {std::move(out), psi_shift - cancel};
}

std::string PsiLaurentSeries::first_negative_term() const {
  const PsiLaurentSeries n = normalized();
  for (const auto& [m, c] : n.body.terms()) {
    const int e = m.exponent(VarId::psi()) - n.psi_shift;
    if (e < 0)
      return to_string(c) + "*" + to_string(m.with_exponent(VarId::psi(), 0)) + "*psi^" + std::to_string(e);
  }
  return "";
}

PsiLaurentSeries operator+(const PsiLaurentSeries& a, const PsiLaurentSeries& b) {
  const int shift = std::max(a.psi_shift, b.psi_shift);
  return PsiLaurentSeries{times_psi(a.body, shift - a.psi_shift) + times_psi(b.body, shift - b.psi_shift), shift}
      .normalized();
}

PsiLaurentSeries operator-(const PsiLaurentSeries& a, const PsiLaurentSeries& b) {
  return a + PsiLaurentSeries{-b.body, b.psi_shift};
}

PsiLaurentSeries operator*(const PsiLaurentSeries& a, const PsiLaurentSeries& b) {
  return PsiLaurentSeries{a.body * b.body, a.psi_shift + b.psi_shift}.normalized();
}

PsiLaurentSeries operator*(const PsiLaurentSeries& a, const GradedSeries& scalar) {
  return PsiLaurentSeries{a.body * scalar, a.psi_shift}.normalized();
}

std::string to_string(const PsiLaurentSeries& s) {
  const PsiLaurentSeries n = s.normalized();
  if (n.psi_shift == 0) return to_string(n.body);
  return "psi^-" + std::to_string(n.psi_shift) + " * (" + to_string(n.body) + ")";
}

namespace {

// exp(-sum_i psi^{i-1} t_i): its weight-k part is psi^k s~_k.
GradedSeries scaled_exponential(int N) {
  const Truncation t = kp_truncation(N);
  GradedSeries arg(t);
  for (int i = 1; i <= N; ++i) arg.add_term(Monomial({{VarId::p(i), 1}, {VarId::psi(), i - 1}}), -1);
  return series_exp(arg, Grading::of(Alphabet::P));
}

}  // namespace

PsiLaurentSeries scaled_schur(int k, int t_weight_bound) {
  if (k < 0 || t_weight_bound < k) throw std::invalid_argument("scaled_schur: need 0 <= k <= bound");
  const GradedSeries e = scaled_exponential(std::max(1, t_weight_bound));
  return PsiLaurentSeries{e.homogeneous_part(Grading::of(Alphabet::P), k), k}.normalized();
}

PsiLaurentSeries r_series_laurent(int N, KpOptions opts) {
  if (N < 1) throw std::invalid_argument("r_series: bound must be positive");
  const Truncation t = kp_truncation(N);
  const Grading g = Grading::of(Alphabet::P);
  const GradedSeries e = scaled_exponential(N);
  const Monomial t1sq = Monomial::var(VarId::p(1), 2);

  // tau after t_i -> psi^i t_i; every coefficient is a polynomial in psi, xi
  GradedSeries tau = GradedSeries::constant(t, 1);
  GradedSeries c = GradedSeries::constant(t, 1);
  for (int k = 1; k <= N; ++k) {
    GradedSeries factor(t);
    factor.add_term(Monomial::var(VarId::xi()), 1);
    factor.add_term(Monomial::var(VarId::psi()), k - 1);
    c = c * factor;
    GradedSeries part = e.homogeneous_part(g, k);
    if (opts.perturb && k == 2) {
      // t1sq carries psi^0 in the scaled variables
      const Rational v = part.coefficient(t1sq);
      part.add_term(t1sq, -2 * v);
    }
    tau += c * part;
  }
  const GradedSeries L = series_log(tau, g);

  // R_k = -psi L_k / (xi psi^k); store with a common shift of N.
  GradedSeries body(t);
  for (const auto& [m, coeff] : L.terms()) {
    const int xe = m.exponent(VarId::xi());
    if (xe < 1) throw std::domain_error("log(tau) term " + to_string(m) + " is not divisible by xi");
    const int k = m.degree(Alphabet::P);
    Monomial out = m.with_exponent(VarId::xi(), xe - 1).with_exponent(VarId::psi(), m.exponent(VarId::psi()) + 1 - k + N);
    body.add_term(out, -coeff);
  }
  return PsiLaurentSeries{std::move(body), N}.normalized();
}

GradedSeries r_series(int N) {
  PsiLaurentSeries r = r_series_laurent(N);
  if (r.psi_shift > 0) throw std::domain_error("R has a negative psi power: " + r.first_negative_term());
  return r.body;
}

PsiLaurentSeries kp_residual(int N, KpOptions opts) {
  if (N < 4) throw std::invalid_argument("kp_residual: bound must be at least 4");
  const PsiLaurentSeries R = r_series_laurent(N + 4, opts);
  const Truncation t = kp_truncation(N);
  const VarId t1 = VarId::p(1), t2 = VarId::p(2), t3 = VarId::p(3);

  auto scalar = [&](std::vector<Monomial::Factor> f, const Rational& c) {
    return GradedSeries::term(t, Monomial(std::move(f)), c);
  };
  const PsiLaurentSeries lhs = R.diff(t2).diff(t2).restricted(t);
  const PsiLaurentSeries r11 = R.diff(t1).diff(t1).restricted(t);
  const PsiLaurentSeries r13 = R.diff(t1).diff(t3).restricted(t);
  const PsiLaurentSeries r1111 = R.diff(t1).diff(t1).diff(t1).diff(t1).restricted(t);

  const PsiLaurentSeries rhs = (r11 * r11) * scalar({{VarId::psi(), 1}, {VarId::xi(), 1}}, 2) +
                               r13 * scalar({}, Rational(4, 3)) +
                               r1111 * scalar({{VarId::psi(), 2}}, Rational(-1, 3));
  return (lhs - rhs).normalized();
}

}  // namespace hurwitz
