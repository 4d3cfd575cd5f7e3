#include "hurwitz/series.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/series_kernels.hpp"

namespace hurwitz {

namespace {

constexpr std::array<std::string_view, kAlphabetCount> kNames = {"q", "p", "t", "beta", "psi", "xi"};

std::size_t idx(Alphabet a) { return static_cast<std::size_t>(a); }

}  // namespace

std::string_view alphabet_name(Alphabet a) { return kNames[idx(a)]; }

std::optional<Alphabet> alphabet_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kAlphabetCount; ++i)
    if (kNames[i] == name) return static_cast<Alphabet>(i);
  return std::nullopt;
}

int VarId::weight() const {
  switch (alphabet) {
    case Alphabet::Q:
    case Alphabet::P:
      return i;
    case Alphabet::T:
      return i + j + 1;
    default:
      return 1;
  }
}

std::string to_string(const VarId& v) {
  std::string name(alphabet_name(v.alphabet));
  switch (v.alphabet) {
    case Alphabet::Q:
    case Alphabet::P:
      return name + "_" + std::to_string(v.i);
    case Alphabet::T:
      return name + "_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
    default:
      return name;
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
}

Monomial Monomial::var(VarId v, int exponent) { return Monomial({{v, exponent}}); }

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VarId& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Degrees Monomial::degrees() const {
  Degrees d{};
  for (const auto& [v, e] : factors_) at(d, v.alphabet) += v.weight() * e;
  return d;
}

int Monomial::count(Alphabet a) const {
  int n = 0;
  for (const auto& [v, e] : factors_)
    if (v.alphabet == a) n += e;
  return n;
}

BigInt Monomial::aut() const {
  BigInt r = 1;
  for (const auto& f : factors_) {
    BigInt x;
    mpz_fac_ui(x.get_mpz_t(), static_cast<unsigned long>(f.second));
    r *= x;
  }
  return r;
}

Monomial Monomial::with_exponent(VarId v, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && !(f.first < v)) {
      if (exponent > 0) out.factors_.emplace_back(v, exponent);
      placed = true;
      if (f.first == v) continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && exponent > 0) out.factors_.emplace_back(v, exponent);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first)
      out.factors_.push_back(*a++);
    else if (b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, ae);
  out.factors_.insert(out.factors_.end(), b, be);
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += " ";
    s += to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Truncation / Grading

Truncation Truncation::with(Alphabet a, int bound) const {
  Truncation t = *this;
  t.bounds_[idx(a)] = bound;
  return t;
}

Truncation Truncation::without(Alphabet a) const {
  Truncation t = *this;
  t.bounds_[idx(a)].reset();
  return t;
}

bool Truncation::admits(const Degrees& d) const {
  for (std::size_t i = 0; i < kAlphabetCount; ++i)
    if (bounds_[i] && d[i] > *bounds_[i]) return false;
  return true;
}

bool Truncation::within(const Truncation& other) const {
  for (std::size_t i = 0; i < kAlphabetCount; ++i) {
    if (!other.bounds_[i]) continue;
    if (!bounds_[i] || *bounds_[i] > *other.bounds_[i]) return false;
  }
  return true;
}

Truncation Truncation::lowered(Alphabet a, int amount) const {
  Truncation t = *this;
  if (auto& b = t.bounds_[idx(a)]) *b -= amount;
  return t;
}

Truncation Truncation::raised(const Degrees& d) const {
  Truncation t = *this;
  for (std::size_t i = 0; i < kAlphabetCount; ++i)
    if (t.bounds_[i]) *t.bounds_[i] += d[i];
  return t;
}

std::string to_string(const Truncation& t) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < kAlphabetCount; ++i) {
    auto b = t.bound(static_cast<Alphabet>(i));
    if (!b) continue;
    if (!first) s += ", ";
    first = false;
    s += std::string(kNames[i]) + "<=" + std::to_string(*b);
  }
  return s + "}";
}

Grading Grading::of(Alphabet a) {
  Grading g;
  g.weights[idx(a)] = 1;
  return g;
}

Grading Grading::bounded_alphabets(const Truncation& t) {
  Grading g;
  for (std::size_t i = 0; i < kAlphabetCount; ++i)
    if (t.bound(static_cast<Alphabet>(i))) g.weights[i] = 1;
  return g;
}

int Grading::degree(const Degrees& d) const {
  int s = 0;
  for (std::size_t i = 0; i < kAlphabetCount; ++i) s += weights[i] * d[i];
  return s;
}

int Grading::max_degree(const Truncation& t) const {
  int s = 0;
  for (std::size_t i = 0; i < kAlphabetCount; ++i) {
    if (weights[i] == 0) continue;
    auto b = t.bound(static_cast<Alphabet>(i));
    if (!b) throw std::domain_error("grading uses an unbounded alphabet");
    s += weights[i] * std::max(*b, 0);
  }
  return s;
}

// ---------------------------------------------------------------------------
// GradedSeries

GradedSeries GradedSeries::constant(Truncation t, const Rational& c) {
  GradedSeries s(std::move(t));
  s.add_term(Monomial(), c);
  return s;
}

GradedSeries GradedSeries::term(Truncation t, const Monomial& m, const Rational& c) {
  GradedSeries s(std::move(t));
  s.add_term(m, c);
  return s;
}

Rational GradedSeries::coefficient(const Monomial& m) const {
  if (!trunc_.admits(m))
    throw std::domain_error("monomial " + to_string(m) + " lies outside truncation " + to_string(trunc_));
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedSeries::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || !trunc_.admits(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& other) {
  if (!(trunc_ == other.trunc_))
    throw TruncationMismatch("add: " + to_string(trunc_) + " vs " + to_string(other.trunc_));
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& other) {
  if (!(trunc_ == other.trunc_))
    throw TruncationMismatch("subtract: " + to_string(trunc_) + " vs " + to_string(other.trunc_));
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

GradedSeries GradedSeries::diff(VarId v) const {
  GradedSeries out(trunc_.lowered(v.alphabet, v.weight()));
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.with_exponent(v, e - 1), c * e);
  }
  return out;
}

GradedSeries GradedSeries::restricted(const Truncation& t) const {
  if (!t.within(trunc_))
    throw TruncationMismatch("restrict: " + to_string(t) + " is not within " + to_string(trunc_));
  GradedSeries out(t);
  for (const auto& [m, c] : terms_)
    if (t.admits(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

GradedSeries GradedSeries::times_monomial(const Monomial& mono, const Rational& c) const {
  GradedSeries out(trunc_.raised(mono.degrees()));
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.add_term(m * mono, v * c);
  return out;
}

GradedSeries GradedSeries::homogeneous_part(const Grading& g, int degree) const {
  GradedSeries out(trunc_);
  for (const auto& [m, c] : terms_)
    if (g.degree(m.degrees()) == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

GradedSeries GradedSeries::euler(Alphabet a, bool weighted) const {
  GradedSeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    int factor = weighted ? m.degree(a) : m.count(a);
    if (factor != 0) out.terms_.emplace_hint(out.terms_.end(), m, c * factor);
  }
  return out;
}

GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
GradedSeries operator*(GradedSeries a, const Rational& c) { return a *= c; }
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return kernels::multiply_parallel(a, b); }

GradedSeries pow(const GradedSeries& s, int n) {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  GradedSeries result = GradedSeries::constant(s.truncation(), 1);
  GradedSeries base = s;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

namespace {

std::vector<GradedSeries> split_by_degree(const GradedSeries& s, const Grading& g, int max_degree) {
  std::vector<GradedSeries> parts(static_cast<std::size_t>(max_degree) + 1, GradedSeries(s.truncation()));
  for (const auto& [m, c] : s.terms()) {
    if (m.is_one()) continue;
    int d = g.degree(m.degrees());
    if (d <= 0) throw std::domain_error("grading assigns degree 0 to non-constant monomial " + to_string(m));
    parts[static_cast<std::size_t>(d)].add_term(m, c);
  }
  return parts;
}

}  // namespace

// Both recurrences come from D exp(L) = D(L) exp(L) with D the Euler operator of
// the grading: n E_n = sum_{j=1}^n j L_j E_{n-j}.
GradedSeries series_exp(const GradedSeries& s, std::optional<Grading> grading) {
  if (s.constant_term() != 0) throw std::domain_error("series_exp: constant term must be 0");
  const Grading g = grading.value_or(Grading::bounded_alphabets(s.truncation()));
  const int n_max = g.max_degree(s.truncation());
  auto parts = split_by_degree(s, g, n_max);
  std::vector<GradedSeries> e(static_cast<std::size_t>(n_max) + 1, GradedSeries(s.truncation()));
  e[0] = GradedSeries::constant(s.truncation(), 1);
  for (int n = 1; n <= n_max; ++n) {
    GradedSeries acc(s.truncation());
    for (int j = 1; j <= n; ++j) {
      const auto& lj = parts[static_cast<std::size_t>(j)];
      const auto& rest = e[static_cast<std::size_t>(n - j)];
      if (lj.is_zero() || rest.is_zero()) continue;
      acc += (lj * rest) * Rational(j);
    }
    e[static_cast<std::size_t>(n)] = acc * Rational(1, n);
  }
  GradedSeries out(s.truncation());
  for (const auto& part : e) out += part;
  return out;
}

GradedSeries series_log(const GradedSeries& s, std::optional<Grading> grading) {
  if (s.constant_term() != 1) throw std::domain_error("series_log: constant term must be 1");
  const Grading g = grading.value_or(Grading::bounded_alphabets(s.truncation()));
  const int n_max = g.max_degree(s.truncation());
  auto e = split_by_degree(s, g, n_max);
  std::vector<GradedSeries> l(static_cast<std::size_t>(n_max) + 1, GradedSeries(s.truncation()));
  for (int n = 1; n <= n_max; ++n) {
    GradedSeries acc(s.truncation());
    for (int j = 1; j < n; ++j) {
      const auto& lj = l[static_cast<std::size_t>(j)];
      const auto& rest = e[static_cast<std::size_t>(n - j)];
      if (lj.is_zero() || rest.is_zero()) continue;
      acc += (lj * rest) * Rational(j);
    }
    l[static_cast<std::size_t>(n)] = e[static_cast<std::size_t>(n)] - acc * Rational(1, n);
  }
  GradedSeries out(s.truncation());
  for (const auto& part : l) out += part;
  return out;
}

GradedSeries substitute_p1_shift(const GradedSeries& s) {
  const VarId p1 = VarId::p(1);
  GradedSeries out(s.truncation());
  for (const auto& [m, c] : s.terms()) {
    int e = m.exponent(p1);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    BigInt binom = 1;  // binom(e, j) for j = e, e-1, ...
    for (int j = e; j >= 0; --j) {
      out.add_term(m.with_exponent(p1, j), c * Rational(binom));
      binom = binom * j / (e - j + 1);
    }
  }
  return out;
}

std::string to_string(const GradedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << " ";
      os << to_string(m);
    }
  }
  return os.str();
}

}  // namespace hurwitz
