#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Alphabet : std::uint8_t { Q = 0, P, T, Beta, Psi, Xi };
inline constexpr std::size_t kAlphabetCount = 6;

std::string_view alphabet_name(Alphabet a);
std::optional<Alphabet> alphabet_from_name(std::string_view name);

/// One formal variable: q_k, p_k, t_{i,j}, beta, psi or xi.
struct VarId {
  Alphabet alphabet = Alphabet::Q;
  int i = 0;
  int j = 0;

  static VarId q(int k) { return {Alphabet::Q, k, 0}; }
  static VarId p(int k) { return {Alphabet::P, k, 0}; }
  static VarId t(int i, int j) { return {Alphabet::T, i, j}; }
  static VarId beta() { return {Alphabet::Beta, 0, 0}; }
  static VarId psi() { return {Alphabet::Psi, 0, 0}; }
  static VarId xi() { return {Alphabet::Xi, 0, 0}; }

  /// q_k and p_k weigh k, t_{i,j} weighs i+j+1, the scalar symbols weigh 1.
  int weight() const;

  auto operator<=>(const VarId&) const = default;
  bool operator==(const VarId&) const = default;
};

std::string to_string(const VarId& v);

/// Per-alphabet weighted degree of a monomial, indexed by Alphabet.
using Degrees = std::array<int, kAlphabetCount>;

inline int& at(Degrees& d, Alphabet a) { return d[static_cast<std::size_t>(a)]; }
inline int at(const Degrees& d, Alphabet a) { return d[static_cast<std::size_t>(a)]; }

/// Sparse exponent vector, sorted by VarId, all exponents positive.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  /// Merges repeated variables and drops zero exponents. Throws on negatives.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial var(VarId v, int exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(VarId v) const;
  Degrees degrees() const;
  int degree(Alphabet a) const { return at(degrees(), a); }
  /// Number of variable factors counted with multiplicity, restricted to one alphabet.
  int count(Alphabet a) const;
  /// Product of factorials of the exponents.
  BigInt aut() const;
  /// Copy with the exponent of v replaced (0 removes v).
  Monomial with_exponent(VarId v, int exponent) const;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

std::string to_string(const Monomial& m);

/// Optional upper bound per alphabet on the weighted degree.
class Truncation {
 public:
  Truncation() = default;

  Truncation with(Alphabet a, int bound) const;
  Truncation without(Alphabet a) const;
  std::optional<int> bound(Alphabet a) const { return bounds_[static_cast<std::size_t>(a)]; }

  bool admits(const Degrees& d) const;
  bool admits(const Monomial& m) const { return admits(m.degrees()); }
  /// Every bound of *this is at least as tight as the corresponding one of `other`.
  bool within(const Truncation& other) const;
  /// Bounds of the given alphabet lowered by `amount` (unbounded stays unbounded).
  Truncation lowered(Alphabet a, int amount) const;
  /// Every bounded alphabet raised by the monomial's degree in it.
  Truncation raised(const Degrees& d) const;

  bool operator==(const Truncation&) const = default;

 private:
  std::array<std::optional<int>, kAlphabetCount> bounds_{};
};

std::string to_string(const Truncation& t);

/// Thrown when binary operations meet different truncations.
class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear grading used by exp/log; every non-constant monomial must get a positive degree.
struct Grading {
  std::array<int, kAlphabetCount> weights{};

  static Grading of(Alphabet a);
  /// Weight one on every alphabet bounded by `t`.
  static Grading bounded_alphabets(const Truncation& t);
  int degree(const Degrees& d) const;
  /// Largest degree a monomial admitted by `t` can have. Throws if unbounded.
  int max_degree(const Truncation& t) const;
};

/// Truncated multivariate power series over the rationals.
///
/// Canonical form: no stored zero coefficient, every stored monomial admitted
/// by the truncation. Under that form structural equality is mathematical
/// equality up to the truncation.
class GradedSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  GradedSeries() = default;
  explicit GradedSeries(Truncation t) : trunc_(std::move(t)) {}

  static GradedSeries constant(Truncation t, const Rational& c);
  static GradedSeries term(Truncation t, const Monomial& m, const Rational& c = 1);

  const Truncation& truncation() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Exact coefficient. Throws std::domain_error if m lies outside the truncation.
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c*m; monomials outside the truncation are dropped.
  void add_term(const Monomial& m, const Rational& c);

  GradedSeries& operator+=(const GradedSeries& other);
  GradedSeries& operator-=(const GradedSeries& other);
  GradedSeries& operator*=(const Rational& c);
  GradedSeries operator-() const;

  /// Formal partial derivative. The bound of v's alphabet drops by v.weight()
  /// so every retained coefficient stays exact.
  GradedSeries diff(VarId v) const;
  /// Same series under a tighter truncation.
  GradedSeries restricted(const Truncation& t) const;
  /// c*m*S; the truncation rises by deg m.
  GradedSeries times_monomial(const Monomial& m, const Rational& c = 1) const;
  GradedSeries homogeneous_part(const Grading& g, int degree) const;
  /// sum_k k q_k d/dq_k (weighted) or sum_k q_k d/dq_k (plain) over one alphabet.
  GradedSeries euler(Alphabet a, bool weighted) const;

  bool operator==(const GradedSeries&) const = default;

 private:
  Truncation trunc_;
  TermMap terms_;
};

GradedSeries operator+(GradedSeries a, const GradedSeries& b);
GradedSeries operator-(GradedSeries a, const GradedSeries& b);
GradedSeries operator*(GradedSeries a, const Rational& c);
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);

GradedSeries pow(const GradedSeries& s, int n);

/// exp(S) for S without constant term. `grading` defaults to the bounded alphabets.
GradedSeries series_exp(const GradedSeries& s, std::optional<Grading> grading = std::nullopt);
/// log(S) for S with constant term 1.
GradedSeries series_log(const GradedSeries& s, std::optional<Grading> grading = std::nullopt);

/// p_1 -> p_1 + 1 by binomial re-expansion of every p_1 power.
GradedSeries substitute_p1_shift(const GradedSeries& s);

std::string to_string(const GradedSeries& s);

}  // namespace hurwitz
