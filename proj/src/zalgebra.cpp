#include "hurwitz/zalgebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "hurwitz/combinatorics.hpp"

namespace hurwitz {

// ---- ZPoly

ZPoly ZPoly::constant(const Rational& c) {
  ZPoly p;
  p.add_term({}, c);
  return p;
}

ZPoly ZPoly::gen(ZGen g, const Rational& c) {
  ZPoly p;
  p.add_term({g}, c);
  return p;
}

Rational ZPoly::coefficient(Key key) const {
  std::sort(key.begin(), key.end(), std::greater<>());
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZPoly::add_term(Key key, const Rational& c) {
  if (c == 0) return;
  std::sort(key.begin(), key.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ZPoly& ZPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ZPoly ZPoly::operator-() const {
  ZPoly p = *this;
  p *= -1;
  return p;
}

ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
ZPoly operator*(ZPoly a, const Rational& c) { return a *= c; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      ZPoly::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add_term(std::move(k), ca * cb);
    }
  return out;
}

std::string to_string(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    // display order: generators ascending within a term
    std::vector<std::pair<ZGen, int>> gens;
    for (auto it = key.rbegin(); it != key.rend(); ++it) {
      if (!gens.empty() && gens.back().first == *it) ++gens.back().second;
      else gens.emplace_back(*it, 1);
    }
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (mag != 1 || gens.empty()) {
      s += mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
      need_star = true;
    }
    for (auto [g, e] : gens) {
      if (need_star) s += "*";
      s += "z_{" + std::to_string(g.d) + "," + std::to_string(g.r) + "}";
      if (e > 1) s += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return s;
}

ZPoly parse_zpoly(std::string_view text) {
  std::string src;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') src += ch;
  auto bad = [&] { return std::invalid_argument("malformed polynomial '" + std::string(text) + "'"); };
  if (src.empty()) throw bad();
  if (src == "0") return {};
  ZPoly out;
  std::size_t i = 0;
  auto number = [&] {
    std::size_t start = i;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
    if (start == i) throw bad();
    return src.substr(start, i - start);
  };
  while (i < src.size()) {
    int sign = 1;
    if (src[i] == '+' || src[i] == '-') sign = src[i++] == '-' ? -1 : 1;
    else if (i != 0) throw bad();
    Rational c = 1;
    ZPoly::Key key;
    bool any = false;
    while (i < src.size() && src[i] != '+' && src[i] != '-') {
      if (any) {
        if (src[i++] != '*') throw bad();
      }
      any = true;
      if (src.compare(i, 3, "z_{") == 0) {
        i += 3;
        int d = std::stoi(number());
        if (i >= src.size() || src[i++] != ',') throw bad();
        int r = std::stoi(number());
        if (i >= src.size() || src[i++] != '}') throw bad();
        int e = 1;
        if (i < src.size() && src[i] == '^') {
          ++i;
          e = std::stoi(number());
        }
        for (int k = 0; k < e; ++k) key.push_back({d, r});
      } else {
        std::string num = number();
        if (i < src.size() && src[i] == '/') {
          ++i;
          num += "/" + number();
        }
        c *= parse_rational(num);
      }
    }
    if (!any) throw bad();
    out.add_term(std::move(key), c * sign);
  }
  return out;
}

namespace {

ZPoly apply_derivation(const ZPoly& p, const std::function<ZPoly(ZGen)>& on_gen) {
  ZPoly out;
  for (const auto& [key, c] : p.terms())
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0 && key[i] == key[i - 1]) continue;  // handled by the multiplicity below
      const auto mult = std::count(key.begin(), key.end(), key[i]);
      ZPoly::Key rest = key;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      ZPoly others;
      others.add_term(rest, c * static_cast<long>(mult));
      out += others * on_gen(key[i]);
    }
  return out;
}

}  // namespace

ZPoly weighted_euler(const ZPoly& p) {
  return apply_derivation(p, [](ZGen g) {
    ZPoly r = ZPoly::gen({g.d, g.r + 1});
    if (g.d >= 1) r -= ZPoly::gen({g.d - 1, g.r});
    return r;
  });
}

ZPoly plain_euler(const ZPoly& p) {
  return apply_derivation(p, [](ZGen g) {
    return ZPoly::gen({g.d + 1, g.r + 1}, g.d + 1) + ZPoly::gen(g, 2 - g.r);
  });
}

// ---- generator series

GradedSeries z_series(int d, int r, const ZSeriesOptions& opts) {
  const int W = opts.q_weight_bound;
  if (W < 1) throw std::invalid_argument("z_series: q-weight bound must be positive");
  if (r < 1) throw std::invalid_argument("z_series: r must be positive");
  const Truncation t = Truncation{}.with(Alphabet::Q, W);
  GradedSeries out(t);
  if (d < 0) return out;
  const int n_max = std::min(W, opts.n_bound.value_or(W));

  GradedSeries A(t);
  for (int k = 1; k <= W; ++k) {
    BigInt kk;
    mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    A.add_term(Monomial::var(VarId::q(k)), kk / factorial(static_cast<unsigned long>(k)));
  }
  GradedSeries An = GradedSeries::constant(t, 1);
  for (int n = 1; n <= n_max; ++n) {
    An = An * A;
    const int top = n + r - 3;
    if (opts.drop_negative_top && top < 0 && d >= 1) continue;
    const Rational b = gen_binomial(BigInt(top), d);
    if (b == 0) continue;
    const Rational pref = b / factorial(static_cast<unsigned long>(n));
    for (const auto& [m, c] : An.terms()) {
      const int K = m.degree(Alphabet::Q);
      out.add_term(m, pref * c * rational_pow(BigInt(K), top - d));
    }
  }
  return out;
}

ZEvaluator::ZEvaluator(ZSeriesOptions opts) : opts_(opts) {}

Truncation ZEvaluator::truncation() const { return Truncation{}.with(Alphabet::Q, opts_.q_weight_bound); }

GradedSeries ZEvaluator::z(ZGen g) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  }
  GradedSeries s = z_series(g.d, g.r, opts_);
  std::lock_guard lock(mu_);
  return cache_.try_emplace(g, std::move(s)).first->second;
}

GradedSeries ZEvaluator::eval(const ZPoly& p) const {
  const Truncation t = truncation();
  GradedSeries out(t);
  for (const auto& [key, c] : p.terms()) {
    GradedSeries term = GradedSeries::constant(t, c);
    for (const auto& g : key) term = term * z(g);
    out += term;
  }
  return out;
}

GradedSeries zpoly_eval(const ZPoly& p, int q_weight_bound, std::optional<int> n_bound) {
  return ZEvaluator({q_weight_bound, n_bound, false}).eval(p);
}

// ---- psi classes

Rational psi_intersection(std::span<const int> nu, int n) {
  if (n < 3) throw std::invalid_argument("psi_intersection: M_{0,n} needs n >= 3");
  if (static_cast<int>(nu.size()) > n) throw std::invalid_argument("psi_intersection: more exponents than points");
  int sum = 0;
  for (int x : nu) {
    if (x < 0) throw std::invalid_argument("psi_intersection: negative exponent");
    sum += x;
  }
  if (sum != n - 3) return 0;
  return Rational(multinomial(nu));
}

namespace {

void weak_compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& visit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    visit();
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    weak_compositions(total - x, parts, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

GradedSeries psi_series(int a, int ell, const Truncation& trunc) {
  if (a < 0 || ell < 1) throw std::invalid_argument("psi_series: need a >= 0, l >= 1");
  const auto tb = trunc.bound(Alphabet::T);
  if (!tb) throw std::invalid_argument("psi_series: t-weight must be bounded");
  GradedSeries out(trunc);
  // weight of the k-th term: a + (l + k - 3) + k
  for (int k = 0; a + ell - 3 + 2 * k <= *tb; ++k) {
    const int nu_total = ell + k - 3;
    if (nu_total < 0) continue;
    if (k == 0) {
      if (a == 0 && nu_total == 0) out.add_term(Monomial(), 1);
      continue;
    }
    const Rational inv_k = 1 / factorial(static_cast<unsigned long>(k));
    std::vector<int> lam, nu;
    weak_compositions(a, k, lam, [&] {
      weak_compositions(nu_total, k, nu, [&] {
        std::vector<Monomial::Factor> f;
        for (int i = 0; i < k; ++i) f.emplace_back(VarId::t(lam[static_cast<std::size_t>(i)], nu[static_cast<std::size_t>(i)]), 1);
        out.add_term(Monomial(std::move(f)), inv_k * multinomial(nu));
      });
    });
  }
  return out;
}

// ---- q-Euler identities on generators

EqzredReport check_eqzred(int d, int r, int q_weight_bound, const ZSource& source) {
  ZSeriesOptions opts{q_weight_bound, std::nullopt, false};
  auto z = [&](int dd, int rr) {
    if (dd < 0) return GradedSeries(Truncation{}.with(Alphabet::Q, q_weight_bound));
    return source ? source(dd, rr) : z_series(dd, rr, opts);
  };
  EqzredReport rep;
  const GradedSeries base = z(d, r);
  const GradedSeries lhs_w = base.euler(Alphabet::Q, true);
  const GradedSeries rhs_w = z(d, r + 1) - z(d - 1, r);
  const GradedSeries lhs_p = base.euler(Alphabet::Q, false);
  const GradedSeries rhs_p = z(d + 1, r + 1) * Rational(d + 1) + base * Rational(2 - r);

  auto first_diff = [](const GradedSeries& a, const GradedSeries& b) {
    GradedSeries diff = a - b;
    const auto& [m, c] = *diff.terms().begin();
    return "coefficient of " + to_string(m) + " off by " + to_string(c);
  };
  rep.weighted_ok = lhs_w == rhs_w;
  rep.plain_ok = lhs_p == rhs_p;
  const std::string tag = "z_{" + std::to_string(d) + "," + std::to_string(r) + "}";
  if (!rep.weighted_ok) rep.detail += tag + " weighted Euler: " + first_diff(lhs_w, rhs_w) + "; ";
  if (!rep.plain_ok) rep.detail += tag + " plain Euler: " + first_diff(lhs_p, rhs_p) + "; ";
  return rep;
}

}  // namespace hurwitz
