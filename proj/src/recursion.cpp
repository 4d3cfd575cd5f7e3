#include "hurwitz/recursion.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hurwitz/json_io.hpp"

namespace hurwitz {

// ---- XKey

XKey::XKey(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (auto [l, n] : entries_)
    if (l < 0 || n < 0) throw std::invalid_argument("XKey: entries must be nonnegative");
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

XKey XKey::from_partition(const Partition& lambda) {
  std::vector<Entry> e;
  for (int x : lambda.parts()) e.emplace_back(x, 0);
  return XKey(std::move(e));
}

int XKey::lambda_weight() const {
  int s = 0;
  for (auto [l, n] : entries_) s += l;
  return s;
}

int XKey::nu_weight() const {
  int s = 0;
  for (auto [l, n] : entries_) s += n;
  return s;
}

std::string to_string(const XKey& k) {
  std::string s;
  for (auto [l, n] : k.entries()) s += "(" + std::to_string(l) + "," + std::to_string(n) + ")";
  return s;
}

XKey parse_xkey(std::string_view text) {
  std::vector<XKey::Entry> e;
  std::size_t i = 0;
  auto bad = [&] { return std::invalid_argument("malformed key '" + std::string(text) + "'"); };
  auto number = [&] {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw bad();
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  while (i < text.size()) {
    if (text[i++] != '(') throw bad();
    int l = number();
    if (i >= text.size() || text[i++] != ',') throw bad();
    int n = number();
    if (i >= text.size() || text[i++] != ')') throw bad();
    e.emplace_back(l, n);
  }
  if (e.empty()) throw bad();
  return XKey(std::move(e));
}

ZPoly initial_x(std::span<const int> nu) {
  if (nu.empty()) throw std::invalid_argument("initial_x: r must be positive");
  const int total = std::accumulate(nu.begin(), nu.end(), 0);
  return ZPoly::gen({total, static_cast<int>(nu.size())}, Rational(multinomial(nu)));
}

// ---- engine

const char* RecursionEngine::cache_version() {
  // bump whenever a normalization or the generator convention changes
  return "xtable-v1;z=falling-binomial;pivot=max-lambda";
}

std::optional<XEntry> RecursionEngine::lookup(const XKey& key) const {
  std::shared_lock lock(mu_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::size_t RecursionEngine::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

std::map<XKey, XEntry> RecursionEngine::snapshot() const {
  std::shared_lock lock(mu_);
  return table_;
}

void RecursionEngine::store(const XKey& key, ZPoly value, std::string rule) {
  std::unique_lock lock(mu_);
  table_.try_emplace(key, XEntry{std::move(value), std::move(rule)});
}

ZPoly RecursionEngine::compute(const XKey& key) {
  if (key.size() == 0) throw std::invalid_argument("compute: empty key");
  if (auto hit = lookup(key)) return hit->value;
  ZPoly value;
  std::string rule;
  if (key.lambda_weight() == 0) {
    std::vector<int> nu;
    for (auto [l, n] : key.entries()) nu.push_back(n);
    value = initial_x(nu);
    rule = "initial";
  } else {
    value = step(key, 0);
    auto [l, n] = key.entries()[0];
    rule = "recursion pivot (" + std::to_string(l) + "," + std::to_string(n) + ")";
  }
  store(key, value, std::move(rule));
  return value;
}

ZPoly RecursionEngine::compute_with_pivot(const XKey& key, std::size_t pivot) {
  if (pivot >= key.size() || key.entries()[pivot].first < 1)
    throw std::invalid_argument("compute_with_pivot: pivot must have lambda >= 1");
  return step(key, pivot);
}

ZPoly RecursionEngine::step(const XKey& key, std::size_t pivot) {
  const auto [s1, m] = key.entries()[pivot];
  const int s = s1 - 1;
  std::vector<XKey::Entry> rest;
  for (std::size_t i = 0; i < key.size(); ++i)
    if (i != pivot) rest.push_back(key.entries()[i]);

  auto with = [&](std::vector<XKey::Entry> extra, const std::vector<XKey::Entry>& others) {
    extra.insert(extra.end(), others.begin(), others.end());
    return XKey(std::move(extra));
  };

  ZPoly result = compute(with({{s, m}}, rest));
  if (s > 0) result += compute(with({{s, m + 1}}, rest)) * Rational(s);

  // Correction: rest splits into J' (consumed by Psi together with the pivot)
  // and an ordered assignment of the remainder U to l blocks.
  const std::size_t n = rest.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<XKey::Entry> U;
    std::vector<int> nus{m};
    int a = s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        a += rest[i].first;
        nus.push_back(rest[i].second);
      } else {
        U.push_back(rest[i]);
      }
    }
    const int k = static_cast<int>(nus.size());
    const int ell = std::accumulate(nus.begin(), nus.end(), 0) - k + 3;
    if (ell < 1 || a < ell) continue;

    // D[t][S]: products over the blocks placed so far with sigma-sum t and union S.
    const unsigned full = (1u << U.size()) - 1;
    std::vector<std::vector<ZPoly>> D(static_cast<std::size_t>(a + 1), std::vector<ZPoly>(full + 1));
    D[0][0] = ZPoly::constant(1);
    // g[sigma][S] = sigma * x_{(sigma,0) u S}
    std::vector<std::vector<ZPoly>> g(static_cast<std::size_t>(a + 1), std::vector<ZPoly>(full + 1));
    for (int sigma = 1; sigma <= a - ell + 1; ++sigma)
      for (unsigned S = 0; S <= full; ++S) {
        std::vector<XKey::Entry> block;
        for (std::size_t i = 0; i < U.size(); ++i)
          if (S >> i & 1u) block.push_back(U[i]);
        g[static_cast<std::size_t>(sigma)][S] = compute(with({{sigma, 0}}, block)) * Rational(sigma);
      }
    for (int b = 0; b < ell; ++b) {
      std::vector<std::vector<ZPoly>> next(static_cast<std::size_t>(a + 1), std::vector<ZPoly>(full + 1));
      for (int t = 0; t <= a; ++t)
        for (unsigned S = 0; S <= full; ++S) {
          const ZPoly& cur = D[static_cast<std::size_t>(t)][S];
          if (cur.is_zero()) continue;
          for (int sigma = 1; t + sigma <= a; ++sigma) {
            const unsigned free = full & ~S;
            // all subsets S' of the free elements, including the empty one
            for (unsigned Sp = free;; Sp = (Sp - 1) & free) {
              const ZPoly& gv = g[static_cast<std::size_t>(sigma)][Sp];
              if (!gv.is_zero()) next[static_cast<std::size_t>(t + sigma)][S | Sp] += cur * gv;
              if (Sp == 0) break;
            }
          }
        }
      D = std::move(next);
    }
    const ZPoly& blocks = D[static_cast<std::size_t>(a)][full];
    if (blocks.is_zero()) continue;
    const Rational coef = Rational(multinomial(nus)) / factorial(static_cast<unsigned long>(ell));
    result -= blocks * coef;
  }
  return result;
}

std::vector<XKey> enumerate_keys(int max_lambda_weight, int max_nu_weight, int max_r, int min_r) {
  std::vector<XKey> out;
  std::vector<XKey::Entry> cur;
  // entries generated in nonincreasing order so each multiset appears once
  std::function<void(int, int, XKey::Entry)> rec = [&](int lw, int nw, XKey::Entry cap) {
    if (static_cast<int>(cur.size()) >= min_r) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_r) return;
    for (int l = std::min(cap.first, lw); l >= 0; --l)
      for (int n = (l == cap.first ? std::min(cap.second, nw) : nw); n >= 0; --n) {
        cur.emplace_back(l, n);
        rec(lw - l, nw - n, {l, n});
        cur.pop_back();
      }
  };
  rec(max_lambda_weight, max_nu_weight, {max_lambda_weight, max_nu_weight});
  std::sort(out.begin(), out.end(), [](const XKey& a, const XKey& b) {
    auto ka = std::make_tuple(a.lambda_weight(), a.nu_weight(), a.size());
    auto kb = std::make_tuple(b.lambda_weight(), b.nu_weight(), b.size());
    return ka != kb ? ka < kb : a < b;
  });
  return out;
}

void RecursionEngine::compute_all(int max_lambda_weight, int max_r, int max_nu_weight) {
  if (max_lambda_weight < 0 || max_r < 1 || max_nu_weight < 0)
    throw std::invalid_argument("compute_all: bounds must be nonnegative and r >= 1");
  const auto keys = enumerate_keys(max_lambda_weight, max_nu_weight, max_r);
  for (int level = 0; level <= max_lambda_weight; ++level) {
    std::vector<const XKey*> batch;
    for (const auto& k : keys)
      if (k.lambda_weight() == level) batch.push_back(&k);
    const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) compute(*batch[static_cast<std::size_t>(i)]);
  }
}

void RecursionEngine::save(const std::filesystem::path& file) const {
  io::Json entries = io::Json::array();
  for (const auto& [key, e] : snapshot())
    entries.push_back(io::Json{{"key", to_string(key)}, {"rule", e.rule}, {"value", io::to_json(e.value)}});
  io::Json doc{{"version", cache_version()}, {"entries", std::move(entries)}};
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << doc.dump(1) << "\n";
}

bool RecursionEngine::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  io::Json doc;
  try {
    doc = io::Json::parse(in);
  } catch (const io::Json::parse_error&) {
    return false;
  }
  if (!doc.is_object() || doc.value("version", "") != cache_version() || !doc.contains("entries")) return false;
  std::map<XKey, XEntry> loaded;
  for (const auto& e : doc["entries"]) {
    if (!e.contains("key") || !e.contains("value")) return false;
    loaded.emplace(parse_xkey(e["key"].get<std::string>()), XEntry{io::zpoly_from_json(e["value"]), "cache"});
  }
  std::unique_lock lock(mu_);
  for (auto& [k, v] : loaded) table_.try_emplace(k, std::move(v));
  return true;
}

// ---- string / dilaton

std::vector<IdentityCheck> check_string_dilaton(RecursionEngine& engine, const ZEvaluator& eval,
                                                int max_lambda_weight, int max_nu_weight, int max_r) {
  std::vector<IdentityCheck> out;
  auto first_diff = [&](const ZPoly& a, const ZPoly& b) -> std::string {
    GradedSeries d = eval.eval(a - b);
    if (d.is_zero()) return "";
    const auto& [m, c] = *d.terms().begin();
    return "coefficient of " + to_string(m) + " off by " + to_string(c);
  };
  for (const auto& key : enumerate_keys(max_lambda_weight, max_nu_weight, max_r, 2)) {
    const auto entries = key.entries();
    for (XKey::Entry marker : {XKey::Entry{0, 0}, XKey::Entry{0, 1}}) {
      auto pos = std::find(entries.begin(), entries.end(), marker);
      if (pos == entries.end()) continue;
      std::vector<XKey::Entry> R(entries.begin(), entries.end());
      R.erase(R.begin() + (pos - entries.begin()));
      const ZPoly xR = engine.compute(XKey(R));
      ZPoly rhs;
      std::string name;
      if (marker.second == 0) {
        name = "string " + to_string(key);
        rhs = weighted_euler(xR);
        for (std::size_t j = 0; j < R.size(); ++j) {
          if (R[j].second == 0) continue;
          auto lowered = R;
          --lowered[j].second;
          rhs += engine.compute(XKey(lowered));
        }
      } else {
        name = "dilaton " + to_string(key);
        rhs = xR * Rational(static_cast<long>(R.size()) - 2) + plain_euler(xR);
      }
      std::string detail = first_diff(engine.compute(key), rhs);
      out.push_back({name, detail.empty(), detail});
    }
  }
  return out;
}

}  // namespace hurwitz
