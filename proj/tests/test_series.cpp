#include "catch_amalgamated.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/series.hpp"
#include "test_util.hpp"

using namespace hurwitz;

namespace {

Truncation qp(int w) { return Truncation{}.with(Alphabet::Q, w).with(Alphabet::P, w); }
Monomial pq(std::vector<Monomial::Factor> f) { return Monomial(std::move(f)); }

bool canonical(const GradedSeries& s) {
  for (const auto& [m, c] : s.terms())
    if (c == 0 || !s.truncation().admits(m)) return false;
  return true;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const Truncation t = qp(4);
  GradedSeries h0(t);
  for (int n = 1; n <= 4; ++n) h0.add_term(pq({{VarId::p(n), 1}, {VarId::q(n), 1}}), ratio(1, n));
  CHECK(h0.coefficient(pq({{VarId::p(1), 1}, {VarId::q(1), 1}})) == 1);

  GradedSeries q1sq = GradedSeries::term(t, Monomial::var(VarId::q(1), 2));
  CHECK(q1sq.diff(VarId::q(1)).coefficient(Monomial::var(VarId::q(1))) == 2);

  GradedSeries x = GradedSeries::term(t, pq({{VarId::p(1), 1}, {VarId::q(1), 1}}));
  CHECK((x * x).terms().size() == 1);
  CHECK((x * x).coefficient(pq({{VarId::p(1), 2}, {VarId::q(1), 2}})) == 1);

  CHECK_THROWS_AS(h0.coefficient(Monomial::var(VarId::q(5))), std::domain_error);
  CHECK_THROWS_AS(h0 + GradedSeries(qp(3)), TruncationMismatch);
  CHECK_THROWS_AS(h0 * GradedSeries(qp(3)), TruncationMismatch);
}

TEST_CASE("products are pruned at the truncation") {
  const Truncation t = qp(2);
  GradedSeries a = GradedSeries::term(t, Monomial::var(VarId::q(2)));
  CHECK((a * a).is_zero());
  GradedSeries b = GradedSeries::term(t, Monomial::var(VarId::q(1)), 3);
  CHECK((b * b).coefficient(Monomial::var(VarId::q(1), 2)) == 9);
}

TEST_CASE("exp and log") {
  const Truncation t = qp(2);
  CHECK(series_exp(GradedSeries(t)) == GradedSeries::constant(t, 1));

  GradedSeries h0(t);
  h0.add_term(pq({{VarId::p(1), 1}, {VarId::q(1), 1}}), 1);
  h0.add_term(pq({{VarId::p(2), 1}, {VarId::q(2), 1}}), ratio(1, 2));
  GradedSeries want = GradedSeries::constant(t, 1);
  want.add_term(pq({{VarId::p(1), 1}, {VarId::q(1), 1}}), 1);
  want.add_term(pq({{VarId::p(2), 1}, {VarId::q(2), 1}}), ratio(1, 2));
  want.add_term(pq({{VarId::p(1), 2}, {VarId::q(1), 2}}), ratio(1, 2));
  CHECK(series_exp(h0) == want);

  const Truncation tq = Truncation{}.with(Alphabet::Q, 5);
  GradedSeries onep = GradedSeries::constant(tq, 1) + GradedSeries::term(tq, Monomial::var(VarId::q(1)));
  GradedSeries mercator(tq);
  for (int n = 1; n <= 5; ++n) mercator.add_term(Monomial::var(VarId::q(1), n), ratio(n % 2 ? 1 : -1, n));
  CHECK(series_log(onep) == mercator);

  CHECK_THROWS_AS(series_exp(onep), std::domain_error);
  CHECK_THROWS_AS(series_log(mercator), std::domain_error);
}

TEST_CASE("ring laws and exp/log round trip on random series") {
  std::mt19937 rng(20261015);
  const Truncation t = qp(8);
  for (int trial = 0; trial < 6; ++trial) {
    const auto a = testutil::random_qp_series(rng, t, 15);
    const auto b = testutil::random_qp_series(rng, t, 15);
    const auto c = testutil::random_qp_series(rng, t, 15);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(canonical(a * b));
    CHECK(canonical(a - a));
    CHECK((a - a).is_zero());

    const auto s = testutil::random_qp_series(rng, t, 10, false);
    CHECK(series_log(series_exp(s)) == s);
    CHECK(canonical(series_exp(s)));

    CHECK(a.diff(VarId::q(1)).diff(VarId::q(2)) == a.diff(VarId::q(2)).diff(VarId::q(1)));
    CHECK(canonical(a.diff(VarId::p(1))));
  }
}

TEST_CASE("diff lowers the bound of its alphabet") {
  const Truncation t = qp(4);
  GradedSeries s = GradedSeries::term(t, Monomial::var(VarId::q(2), 2));
  const GradedSeries d = s.diff(VarId::q(2));
  CHECK(d.truncation().bound(Alphabet::Q) == 2);
  CHECK(d.coefficient(Monomial::var(VarId::q(2))) == 2);
}

TEST_CASE("p_1 shift") {
  const Truncation t = qp(4);
  auto shift = [&](const Monomial& m) { return substitute_p1_shift(GradedSeries::term(t, m)); };
  GradedSeries want(t);
  want.add_term(Monomial::var(VarId::p(1), 2), 1);
  want.add_term(Monomial::var(VarId::p(1)), 2);
  want.add_term(Monomial(), 1);
  CHECK(shift(Monomial::var(VarId::p(1), 2)) == want);

  const Monomial p2q2({{VarId::p(2), 1}, {VarId::q(2), 1}});
  CHECK(shift(p2q2) == GradedSeries::term(t, p2q2));

  const Monomial p1p2({{VarId::p(1), 1}, {VarId::p(2), 1}});
  CHECK(shift(p1p2) == GradedSeries::term(t, p1p2) + GradedSeries::term(t, Monomial::var(VarId::p(2))));
}

TEST_CASE("json round trip is bit exact") {
  std::mt19937 rng(7);
  const Truncation t = qp(6).with(Alphabet::Beta, 3);
  auto s = testutil::random_qp_series(rng, t, 20);
  s += GradedSeries::term(t, Monomial({{VarId::beta(), 2}, {VarId::q(1), 1}}), ratio(-5, 3));
  const std::string text = io::to_json(s).dump();
  const GradedSeries back = io::series_from_json(io::Json::parse(text));
  CHECK(back == s);
  CHECK(io::to_json(back).dump() == text);

  const Truncation tt = Truncation{}.with(Alphabet::T, 5);
  GradedSeries ts = GradedSeries::term(tt, Monomial({{VarId::t(1, 2), 1}, {VarId::t(0, 0), 1}}), ratio(1, 2));
  CHECK(io::series_from_json(io::to_json(ts)) == ts);
  CHECK(io::to_json(Monomial({{VarId::q(2), 1}, {VarId::p(1), 2}})).dump() == R"([["q",2,1],["p",1,2]])");
  CHECK_THROWS_AS(io::series_from_json(io::Json::parse(R"({"truncation":{"zz":1},"terms":[]})")), std::invalid_argument);
}
