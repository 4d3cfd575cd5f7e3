#pragma once

#include <compare>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/series.hpp"

namespace hurwitz {

/// Formal generator z_{d,r}.
struct ZGen {
  int d = 0;
  int r = 1;
  auto operator<=>(const ZGen&) const = default;
  bool operator==(const ZGen&) const = default;
};

/// Polynomial in the generators z_{d,r}. Keys are generator multisets sorted
/// in decreasing (d,r) order, so map order is the display order.
class ZPoly {
 public:
  using Key = std::vector<ZGen>;
  using TermMap = std::map<Key, Rational>;

  ZPoly() = default;
  static ZPoly constant(const Rational& c);
  static ZPoly gen(ZGen g, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(Key key) const;
  /// Key in any order; zero sums are removed.
  void add_term(Key key, const Rational& c);

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const Rational& c);
  ZPoly operator-() const;

  /// Structural equality; mathematical equality needs evaluation.
  bool operator==(const ZPoly&) const = default;

 private:
  TermMap terms_;
};

ZPoly operator+(ZPoly a, const ZPoly& b);
ZPoly operator-(ZPoly a, const ZPoly& b);
ZPoly operator*(ZPoly a, const Rational& c);
ZPoly operator*(const ZPoly& a, const ZPoly& b);

/// e.g. "-6*z_{0,1} + z_{0,1}^2 + z_{0,2}"
std::string to_string(const ZPoly& p);
/// Inverse of to_string; whitespace is ignored. Throws std::invalid_argument.
ZPoly parse_zpoly(std::string_view text);

/// Derivations induced on generators by the two q-Euler operators:
/// sum k q_k d/dq_k : z_{d,r} -> z_{d,r+1} - z_{d-1,r}
/// sum q_k d/dq_k   : z_{d,r} -> (d+1) z_{d+1,r+1} + (2-r) z_{d,r}
ZPoly weighted_euler(const ZPoly& p);
ZPoly plain_euler(const ZPoly& p);

struct ZSeriesOptions {
  int q_weight_bound = 10;
  std::optional<int> n_bound;       // defaults to q_weight_bound
  bool drop_negative_top = false;   // zero the terms with n+r-3 < 0 and d >= 1
};

/// z_{d,r}(q) = sum_{K,n} 1/n! binom(n+r-3, d) K^{n+r-3-d} [q-weight K] A^n,
/// A = sum_k k^k/k! q_k, binomial by falling factorial. z_{-1,r} = 0.
GradedSeries z_series(int d, int r, const ZSeriesOptions& opts);

/// Caches generator series and evaluates ZPolys into the q-series ring.
class ZEvaluator {
 public:
  explicit ZEvaluator(ZSeriesOptions opts = {});

  const ZSeriesOptions& options() const { return opts_; }
  Truncation truncation() const;
  GradedSeries z(ZGen g) const;
  GradedSeries eval(const ZPoly& p) const;
  bool equal(const ZPoly& a, const ZPoly& b) const { return eval(a) == eval(b); }

 private:
  ZSeriesOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<ZGen, GradedSeries> cache_;
};

GradedSeries zpoly_eval(const ZPoly& p, int q_weight_bound, std::optional<int> n_bound = std::nullopt);

/// Genus-0 psi intersection number on M_{0,n}: multinomial(n-3; nu) if sum nu = n-3, else 0.
/// Throws std::invalid_argument if n < 3 or nu has more than n entries.
Rational psi_intersection(std::span<const int> nu, int n);

/// Psi_{a,l} = sum_k 1/k! sum_{sum nu = l+k-3, sum lambda = a} multinomial(nu) prod t_{lambda_i,nu_i}.
/// The T alphabet of `trunc` must be bounded.
GradedSeries psi_series(int a, int ell, const Truncation& trunc);

struct EqzredReport {
  bool weighted_ok = true;
  bool plain_ok = true;
  std::string detail;
  bool ok() const { return weighted_ok && plain_ok; }
};

using ZSource = std::function<GradedSeries(int d, int r)>;

/// Checks both q-Euler identities on z_{d,r} up to the q-weight bound.
/// `source` replaces z_series (tests inject perturbed generators).
EqzredReport check_eqzred(int d, int r, int q_weight_bound, const ZSource& source = {});

}  // namespace hurwitz
