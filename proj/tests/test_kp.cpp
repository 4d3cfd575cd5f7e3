#include "catch_amalgamated.hpp"
#include "hurwitz/kp.hpp"

using namespace hurwitz;

namespace {

Monomial t(int k, int e = 1) { return Monomial::var(VarId::p(k), e); }

}  // namespace

TEST_CASE("scaled Schur functions") {
  const PsiLaurentSeries s0 = scaled_schur(0, 4);
  CHECK(s0.psi_shift == 0);
  CHECK(s0.body.constant_term() == 1);

  const PsiLaurentSeries s1 = scaled_schur(1, 4);
  CHECK(s1.psi_shift == 1);
  CHECK(s1.body.size() == 1);
  CHECK(s1.body.coefficient(t(1)) == -1);

  // -t_2/psi + t_1^2/(2 psi^2)
  const PsiLaurentSeries s2 = scaled_schur(2, 4);
  CHECK(s2.psi_shift == 2);
  CHECK(s2.body.size() == 2);
  CHECK(s2.body.coefficient(t(1, 2)) == ratio(1, 2));
  CHECK(s2.body.coefficient(t(2) * Monomial::var(VarId::psi())) == -1);
  CHECK_THROWS_AS(scaled_schur(5, 4), std::invalid_argument);
}

TEST_CASE("Laurent normalization") {
  const Truncation tr = Truncation{}.with(Alphabet::P, 3);
  GradedSeries body(tr);
  body.add_term(t(1) * Monomial::var(VarId::psi(), 2), 3);
  const PsiLaurentSeries n = PsiLaurentSeries{body, 3}.normalized();
  CHECK(n.psi_shift == 1);
  CHECK(n.body.coefficient(t(1)) == 3);
  CHECK(n.first_negative_term() != "");
  CHECK(PsiLaurentSeries{GradedSeries(tr), 4}.normalized().psi_shift == 0);
}

TEST_CASE("R is a polynomial in psi and xi") {
  const GradedSeries R = r_series(3);
  const Grading g = Grading::of(Alphabet::P);
  const Monomial xi = Monomial::var(VarId::xi()), psi = Monomial::var(VarId::psi());
  CHECK(R.homogeneous_part(g, 1).size() == 1);
  CHECK(R.coefficient(t(1)) == 1);
  // -t_1^2/2 + (xi + psi) t_2
  CHECK(R.homogeneous_part(g, 2).size() == 3);
  CHECK(R.coefficient(t(1, 2)) == ratio(-1, 2));
  CHECK(R.coefficient(t(2) * xi) == 1);
  CHECK(R.coefficient(t(2) * psi) == 1);
  // t_1^3/3 - 2(xi + psi) t_1 t_2 + (xi + psi)(xi + 2 psi) t_3
  CHECK(R.coefficient(t(1, 3)) == ratio(1, 3));
  CHECK(R.coefficient(t(1) * t(2) * xi) == -2);
  CHECK(R.coefficient(t(3) * xi * xi) == 1);
  CHECK(R.coefficient(t(3) * xi * psi) == 3);
  CHECK(R.coefficient(t(3) * psi * psi) == 2);
  CHECK_NOTHROW(r_series(8));
}

TEST_CASE("first KP equation") {
  CHECK(kp_residual(4).is_zero());
  CHECK(kp_residual(6).is_zero());
  const PsiLaurentSeries bad = kp_residual(4, {true});
  CHECK_FALSE(bad.is_zero());
}
