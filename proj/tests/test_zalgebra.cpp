#include "catch_amalgamated.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/zalgebra.hpp"
#include "test_util.hpp"

using namespace hurwitz;

namespace {

Rational coeff(const GradedSeries& s, std::vector<int> parts) {
  std::vector<Monomial::Factor> f;
  for (int x : parts) f.emplace_back(VarId::q(x), 1);
  return s.coefficient(Monomial(std::move(f)));
}

}  // namespace

TEST_CASE("generator series") {
  const ZSeriesOptions o{6, std::nullopt, false};
  const GradedSeries z01 = z_series(0, 1, o), z11 = z_series(1, 1, o);
  CHECK(coeff(z01, {1}) == 1);
  CHECK(coeff(z01, {2}) == 1);
  CHECK(coeff(z11, {2}) == ratio(-1, 2));
  // n = 2, K = 2: binom(0,0) 2^0 / 2! * (1 * 1), ordered tuples (1,1)
  CHECK(coeff(z01, {1, 1}) == ratio(1, 2));
  CHECK(z_series(-1, 2, o).is_zero());
  // n-bound only removes longer compositions
  const GradedSeries n1 = z_series(0, 1, {6, 1, false});
  CHECK(coeff(n1, {1, 1}) == 0);
  CHECK(coeff(n1, {3}) == coeff(z01, {3}));
}

TEST_CASE("dropping the negative-top terms changes h_(2)") {
  const ZPoly h2 = parse_zpoly("z_{0,1} + z_{1,1}");
  const GradedSeries with = ZEvaluator({4, std::nullopt, false}).eval(h2);
  const GradedSeries without = ZEvaluator({4, std::nullopt, true}).eval(h2);
  CHECK(coeff(with, {2}) == ratio(1, 2));
  CHECK(coeff(without, {2}) == 1);
}

TEST_CASE("ZPoly arithmetic, display and parsing") {
  const ZPoly h22 = parse_zpoly("-6*z_{0,1} + z_{0,1}^2 + z_{0,2} - 11*z_{1,1} + 2*z_{1,2} - 6*z_{2,1} + 2*z_{2,2}");
  CHECK(to_string(h22) == "-6*z_{0,1} + z_{0,1}^2 + z_{0,2} - 11*z_{1,1} + 2*z_{1,2} - 6*z_{2,1} + 2*z_{2,2}");
  const ZPoly mixed = parse_zpoly("-2*z_{1,1}*z_{0,1} + 1/2*z_{0,1}^2");
  CHECK(to_string(mixed) == "1/2*z_{0,1}^2 - 2*z_{0,1}*z_{1,1}");
  CHECK(mixed.coefficient({{0, 1}, {1, 1}}) == -2);
  CHECK((mixed - mixed).is_zero());
  CHECK(to_string(ZPoly()) == "0");
  CHECK(to_string(ZPoly::constant(ratio(-3, 2))) == "-3/2");
  CHECK_THROWS_AS(parse_zpoly("z_{0,"), std::invalid_argument);
  CHECK(io::to_json(ZPoly::gen({0, 1}) * ZPoly::gen({1, 1})).dump() == R"([{"gens":[[0,1],[1,1]],"coeff":"1/1"}])");
  CHECK(io::zpoly_from_json(io::to_json(h22)) == h22);
}

TEST_CASE("evaluation is a ring homomorphism") {
  const ZEvaluator ev({6, std::nullopt, false});
  CHECK(ev.eval(ZPoly::constant(1)) == GradedSeries::constant(ev.truncation(), 1));
  CHECK(coeff(ev.eval(parse_zpoly("z_{0,1} + z_{1,1}")), {2}) == ratio(1, 2));
  // z01^2 at q_1^2 by hand: only q_1 * q_1 contributes, c(q_1)^2 = 1
  const GradedSeries sq = ev.eval(parse_zpoly("z_{0,1}^2"));
  CHECK(coeff(sq, {1, 1}) == 1);
  CHECK(coeff(sq, {1}) == 0);
  // weight 3: 2 * c(q_1) * c(q_2) with c(q_2) = 1
  CHECK(coeff(sq, {2, 1}) == 2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const ZPoly a = testutil::random_zpoly(rng, 4), b = testutil::random_zpoly(rng, 4);
    CHECK(ev.eval(a * b) == ev.eval(a) * ev.eval(b));
    CHECK(ev.eval(a + b) == ev.eval(a) + ev.eval(b));
  }
}

TEST_CASE("Euler derivations on generators match the q-operators") {
  const ZEvaluator ev({7, std::nullopt, false});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const ZPoly p = testutil::random_zpoly(rng, 4);
    CHECK(ev.eval(weighted_euler(p)) == ev.eval(p).euler(Alphabet::Q, true));
    CHECK(ev.eval(plain_euler(p)) == ev.eval(p).euler(Alphabet::Q, false));
  }
}

TEST_CASE("q-Euler identities and detector") {
  for (int d = 0; d <= 3; ++d)
    for (int r = 1; r <= 3; ++r) CHECK(check_eqzred(d, r, 8).ok());
  CHECK(check_eqzred(2, 3, 6).ok());
  const ZSeriesOptions o{6, std::nullopt, false};
  auto perturbed = [&](int d, int r) {
    GradedSeries s = z_series(d, r, o);
    if (d == 0 && r == 2) s.add_term(Monomial::var(VarId::q(3)), 1);
    return s;
  };
  const EqzredReport rep = check_eqzred(0, 1, 6, perturbed);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.weighted_ok);
}

TEST_CASE("psi intersections") {
  CHECK(psi_intersection(std::vector<int>{0, 0, 0}, 3) == 1);
  CHECK(psi_intersection(std::vector<int>{1, 0, 0, 0}, 4) == 1);
  CHECK(psi_intersection(std::vector<int>{2, 0, 0}, 3) == 0);
  CHECK(psi_intersection(std::vector<int>{1, 1}, 5) == 2);
  CHECK_THROWS_AS(psi_intersection(std::vector<int>{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(psi_intersection(std::vector<int>{0, 0, 0, 0}, 3), std::invalid_argument);
}

TEST_CASE("Psi series") {
  const Truncation t = Truncation{}.with(Alphabet::T, 8);
  CHECK(psi_series(0, 3, t).constant_term() == 1);
  CHECK(psi_series(1, 3, t).constant_term() == 0);
  CHECK(psi_series(2, 2, t).coefficient(Monomial::var(VarId::t(2, 0))) == 1);
  CHECK(psi_series(2, 2, t).coefficient(Monomial::var(VarId::t(2, 1))) == 0);
  CHECK(psi_series(0, 2, t).coefficient(Monomial({{VarId::t(0, 1), 1}, {VarId::t(0, 0), 1}})) == 1);
  CHECK_THROWS_AS(psi_series(0, 2, Truncation{}), std::invalid_argument);

  // every coefficient times |Aut| is the intersection number on M_{0,l+k}
  for (int a = 0; a <= 2; ++a)
    for (int ell = 1; ell <= 5; ++ell) {
      const GradedSeries s = psi_series(a, ell, t);
      for (const auto& [m, c] : s.terms()) {
        std::vector<int> nu;
        int lam = 0;
        for (const auto& [v, e] : m.factors())
          for (int i = 0; i < e; ++i) {
            nu.push_back(v.j);
            lam += v.i;
          }
        const int n = ell + static_cast<int>(nu.size());
        if (n > 7) continue;
        CHECK(lam == a);
        CHECK(c * m.aut() == psi_intersection(nu, n));
      }
    }
}
