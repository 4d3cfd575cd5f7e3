#include "hurwitz/reduced.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hurwitz/combinatorics.hpp"

namespace hurwitz {

ReducedKey::ReducedKey(int s_, int m_, std::vector<int> p_, std::vector<int> t_)
    : s(s_), m(m_), p(std::move(p_)), t(std::move(t_)) {
  if (s < 0 || m < 0) throw std::invalid_argument("ReducedKey: negative entry");
  for (int x : p)
    if (x < 1) throw std::invalid_argument("ReducedKey: p-entries need lambda >= 1");
  for (int x : t)
    if (x < 0) throw std::invalid_argument("ReducedKey: negative t-entry");
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(t.begin(), t.end(), std::greater<>());
  // Free choice of the distinguished entry: prefer a degeneracy over a bare psi power.
  if (s == 0 && !p.empty()) {
    t.push_back(m);
    std::sort(t.begin(), t.end(), std::greater<>());
    s = p.front();
    m = 0;
    p.erase(p.begin());
  }
}

std::optional<ReducedKey> ReducedKey::from_xkey(const XKey& key) {
  std::optional<XKey::Entry> mixed;
  std::vector<int> p, t;
  for (auto e : key.entries()) {
    if (e.first >= 1 && e.second >= 1) {
      if (mixed) return std::nullopt;
      mixed = e;
    } else if (e.first >= 1) {
      p.push_back(e.first);
    } else {
      t.push_back(e.second);
    }
  }
  if (mixed) return ReducedKey(mixed->first, mixed->second, p, t);
  if (!p.empty()) {
    const int s = p.front();
    p.erase(p.begin());
    return ReducedKey(s, 0, p, t);
  }
  const int m = t.front();
  t.erase(t.begin());
  return ReducedKey(0, m, p, t);
}

XKey ReducedKey::to_xkey() const {
  std::vector<XKey::Entry> e{{s, m}};
  for (int x : p) e.emplace_back(x, 0);
  for (int x : t) e.emplace_back(0, x);
  return XKey(std::move(e));
}

GradedSeries psibar_series(int a, int ell, int t_weight_bound) {
  if (a < 0 || ell < 1) throw std::invalid_argument("psibar_series: need a >= 0, l >= 1");
  const Truncation trunc = Truncation{}.with(Alphabet::P, a).with(Alphabet::T, t_weight_bound);
  GradedSeries out(trunc);
  for (int j = 0; j <= a; ++j) {
    if ((j == 0) != (a == 0)) continue;
    const auto lams = compositions(a, j);
    const Rational inv_j = 1 / factorial(static_cast<unsigned long>(j));
    // t part of weight sum(nu) + k = l + 2k + j - 3
    for (int k = 0; ell + 2 * k + j - 3 <= t_weight_bound; ++k) {
      const int nu_total = ell + k + j - 3;
      if (nu_total < 0 || (k == 0 && nu_total != 0)) continue;
      const Rational inv_k = 1 / factorial(static_cast<unsigned long>(k));
      std::vector<int> nu;
      std::function<void(int)> rec = [&](int remaining) {
        if (static_cast<int>(nu.size()) == k) {
          if (remaining != 0) return;
          std::vector<Monomial::Factor> tf;
          for (int x : nu) tf.emplace_back(VarId::t(0, x), 1);
          const Monomial tm(std::move(tf));
          const Rational c = inv_j * inv_k * multinomial(nu);
          for (const auto& lam : lams) {
            std::vector<Monomial::Factor> pf;
            for (int x : lam) pf.emplace_back(VarId::p(x), 1);
            out.add_term(Monomial(std::move(pf)) * tm, c);
          }
          return;
        }
        for (int x = 0; x <= remaining; ++x) {
          nu.push_back(x);
          rec(remaining - x);
          nu.pop_back();
        }
      };
      rec(nu_total);
    }
  }
  return out;
}

Rational ReducedEngine::psibar_correlator(int a, int ell, int m, const std::vector<int>& p, const std::vector<int>& t) {
  std::vector<Monomial::Factor> f{{VarId::t(0, m), 1}};
  int tw = m + 1;
  for (int x : p) f.emplace_back(VarId::p(x), 1);
  for (int x : t) {
    f.emplace_back(VarId::t(0, x), 1);
    tw += x + 1;
  }
  const Monomial mono(std::move(f));
  std::lock_guard lock(mu_);
  auto it = psibar_.find({a, ell});
  if (it == psibar_.end() || *it->second.truncation().bound(Alphabet::T) < tw) {
    const int bound = std::max(tw, it == psibar_.end() ? 0 : 2 * *it->second.truncation().bound(Alphabet::T));
    it = psibar_.insert_or_assign({a, ell}, psibar_series(a, ell, bound)).first;
  }
  return it->second.coefficient(mono) * mono.aut();
}

ZPoly ReducedEngine::compute(const XKey& key) {
  auto rk = ReducedKey::from_xkey(key);
  if (!rk) throw std::invalid_argument("key " + to_string(key) + " is not in reduced form");
  return compute(*rk);
}

ZPoly ReducedEngine::compute(const ReducedKey& key) {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  ZPoly value;
  if (key.s == 0) {
    // no degeneracy anywhere (the constructor moved any p-entry forward)
    std::vector<int> nu{key.m};
    nu.insert(nu.end(), key.t.begin(), key.t.end());
    value = initial_x(nu);
  } else {
    value = reduced_step(key.s - 1, key.m, key.p, key.t);
  }
  std::lock_guard lock(mu_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

ZPoly ReducedEngine::reduced_step(int s, int m, const std::vector<int>& p, const std::vector<int>& t) {
  ZPoly result = compute(ReducedKey(s, m, p, t));
  if (s > 0) result += compute(ReducedKey(s, m + 1, p, t)) * Rational(s);

  // Labeled elements of the rest: p-entries then t-entries.
  const std::size_t np = p.size(), n = p.size() + t.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> jp, jt, up, ut;
    for (std::size_t i = 0; i < n; ++i) {
      const bool in = mask >> i & 1u;
      if (i < np) (in ? jp : up).push_back(p[i]);
      else (in ? jt : ut).push_back(t[i - np]);
    }
    const int a = s + std::accumulate(jp.begin(), jp.end(), 0);
    const std::size_t nu = up.size() + ut.size();
    for (int ell = 1; ell <= a; ++ell) {
      const Rational psi = psibar_correlator(a - s, ell, m, jp, jt);
      if (psi == 0) continue;
      // Sum over ordered assignments of the remaining entries to l blocks and
      // compositions sigma of a, each block contributing sigma * Xbar_{sigma,0}.
      ZPoly total;
      std::vector<int> block_of(nu);
      std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i < nu) {
          for (int b = 0; b < ell; ++b) {
            block_of[i] = b;
            assign(i + 1);
          }
          return;
        }
        for (const auto& sigma : compositions(a, ell)) {
          ZPoly prod = ZPoly::constant(1);
          for (int b = 0; b < ell && !prod.is_zero(); ++b) {
            std::vector<int> bp, bt;
            for (std::size_t e = 0; e < nu; ++e) {
              if (block_of[e] != b) continue;
              if (e < up.size()) bp.push_back(up[e]);
              else bt.push_back(ut[e - up.size()]);
            }
            const int sb = sigma[static_cast<std::size_t>(b)];
            prod = prod * compute(ReducedKey(sb, 0, bp, bt)) * Rational(sb);
          }
          total += prod;
        }
      };
      assign(0);
      result -= total * (psi / factorial(static_cast<unsigned long>(ell)));
    }
  }
  return result;
}

}  // namespace hurwitz
