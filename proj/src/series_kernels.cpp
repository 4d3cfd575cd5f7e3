#include "hurwitz/series_kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace hurwitz::kernels {

namespace {

struct FlatTerm {
  const Monomial* mono;
  Degrees deg;
  const Rational* coeff;
};

std::vector<FlatTerm> flatten(const GradedSeries& s) {
  std::vector<FlatTerm> out;
  out.reserve(s.size());
  for (const auto& [m, c] : s.terms()) out.push_back({&m, m.degrees(), &c});
  return out;
}

void check_compatible(const GradedSeries& a, const GradedSeries& b) {
  if (!(a.truncation() == b.truncation()))
    throw TruncationMismatch("multiply: " + to_string(a.truncation()) + " vs " + to_string(b.truncation()));
}

Degrees add(const Degrees& x, const Degrees& y) {
  Degrees d;
  for (std::size_t i = 0; i < kAlphabetCount; ++i) d[i] = x[i] + y[i];
  return d;
}

void accumulate_row(const FlatTerm& x, const std::vector<FlatTerm>& rhs, const Truncation& t,
                    GradedSeries::TermMap& acc) {
  Rational prod;
  for (const auto& y : rhs) {
    if (!t.admits(add(x.deg, y.deg))) continue;
    mpq_mul(prod.get_mpq_t(), x.coeff->get_mpq_t(), y.coeff->get_mpq_t());
    auto [it, inserted] = acc.try_emplace(*x.mono * *y.mono, prod);
    if (!inserted) it->second += prod;
  }
}

GradedSeries assemble(const Truncation& t, const GradedSeries::TermMap& acc) {
  GradedSeries out(t);
  for (const auto& [m, c] : acc)
    if (c != 0) out.add_term(m, c);
  return out;
}

}  // namespace

GradedSeries multiply_serial(const GradedSeries& a, const GradedSeries& b) {
  check_compatible(a, b);
  const auto lhs = flatten(a);
  const auto rhs = flatten(b);
  GradedSeries::TermMap acc;
  for (const auto& x : lhs) accumulate_row(x, rhs, a.truncation(), acc);
  return assemble(a.truncation(), acc);
}

GradedSeries multiply_parallel(const GradedSeries& a, const GradedSeries& b) {
  check_compatible(a, b);
  const auto lhs = flatten(a);
  const auto rhs = flatten(b);
  const std::size_t work = lhs.size() * rhs.size();
  if (work < 4096 || omp_get_max_threads() == 1) {
    GradedSeries::TermMap acc;
    for (const auto& x : lhs) accumulate_row(x, rhs, a.truncation(), acc);
    return assemble(a.truncation(), acc);
  }
  const int threads = omp_get_max_threads();
  std::vector<GradedSeries::TermMap> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::ptrdiff_t>(lhs.size());
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) accumulate_row(lhs[static_cast<std::size_t>(i)], rhs, a.truncation(), acc);
  }
  // Exact addition: the merge order does not affect the result.
  GradedSeries::TermMap merged = std::move(partial[0]);
  for (std::size_t k = 1; k < partial.size(); ++k)
    for (auto& [m, c] : partial[k]) {
      auto [it, inserted] = merged.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  return assemble(a.truncation(), merged);
}

}  // namespace hurwitz::kernels

namespace hurwitz::kernels {

namespace {

void cut_join_term(const Monomial& m, const Rational& c, const Truncation& t, GradedSeries::TermMap& acc) {
  auto emit = [&](const Monomial& out, const Rational& v) {
    if (v == 0 || !t.admits(out)) return;
    auto [it, inserted] = acc.try_emplace(out, v);
    if (!inserted) it->second += v;
  };
  std::vector<std::pair<int, int>> ps;  // (k, exponent of p_k)
  for (const auto& [v, e] : m.factors())
    if (v.alphabet == Alphabet::P) ps.emplace_back(v.i, e);

  // cut: p_k -> p_i p_{k-i}
  for (auto [k, e] : ps) {
    Monomial base = m.with_exponent(VarId::p(k), e - 1);
    Rational w = c * ratio(e * k, 2);
    for (int i = 1; i < k; ++i) emit(base * Monomial({{VarId::p(i), 1}, {VarId::p(k - i), 1}}), w);
  }
  // join: p_i p_j -> p_{i+j}
  for (std::size_t a = 0; a < ps.size(); ++a) {
    auto [i, ei] = ps[a];
    if (ei >= 2) {
      Monomial out = m.with_exponent(VarId::p(i), ei - 2) * Monomial::var(VarId::p(2 * i));
      emit(out, c * ratio(i * i * ei * (ei - 1), 2));
    }
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      auto [j, ej] = ps[b];
      Monomial out = m.with_exponent(VarId::p(i), ei - 1).with_exponent(VarId::p(j), ej - 1) *
                     Monomial::var(VarId::p(i + j));
      emit(out, c * (i * j * ei * ej));
    }
  }
}

}  // namespace

GradedSeries cut_join_serial(const GradedSeries& s) {
  GradedSeries::TermMap acc;
  for (const auto& [m, c] : s.terms()) cut_join_term(m, c, s.truncation(), acc);
  return assemble(s.truncation(), acc);
}

GradedSeries cut_join_parallel(const GradedSeries& s) {
  std::vector<std::pair<const Monomial*, const Rational*>> items;
  items.reserve(s.size());
  for (const auto& [m, c] : s.terms()) items.emplace_back(&m, &c);
  const int threads = omp_get_max_threads();
  if (items.size() < 256 || threads == 1) return cut_join_serial(s);
  std::vector<GradedSeries::TermMap> partial(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel num_threads(threads)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto& [m, c] = items[static_cast<std::size_t>(i)];
      cut_join_term(*m, *c, s.truncation(), acc);
    }
  }
  GradedSeries::TermMap merged = std::move(partial[0]);
  for (std::size_t k = 1; k < partial.size(); ++k)
    for (auto& [m, c] : partial[k]) {
      auto [it, inserted] = merged.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  return assemble(s.truncation(), merged);
}

}  // namespace hurwitz::kernels
