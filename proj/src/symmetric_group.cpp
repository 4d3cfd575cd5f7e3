#include "hurwitz/symmetric_group.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hurwitz {

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet beta_set(std::span<const int> parts) {
  const int n = static_cast<int>(parts.size());
  BetaSet b(parts.size());
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (n - 1 - i);
  return b;
}

std::vector<int> parts_of(BetaSet b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int n = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    int v = b[static_cast<std::size_t>(i)] - (n - 1 - i);
    if (v > 0) parts.push_back(v);
  }
  return parts;
}

struct CharCache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> values;
};

CharCache& cache() {
  static CharCache c;
  return c;
}

// mu is consumed from the front, largest part first.
std::int64_t mn_rec(const std::vector<int>& lambda, std::span<const int> mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, std::vector<int>(mu.begin(), mu.end()));
  {
    std::lock_guard lock(cache().mu);
    if (auto it = cache().values.find(key); it != cache().values.end()) return it->second;
  }
  const int k = mu[0];
  BetaSet b = beta_set(lambda);
  std::set<int> present(b.begin(), b.end());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    int target = b[i] - k;
    if (target < 0 || present.count(target)) continue;
    // height of the strip = beta numbers strictly between target and b[i]
    int between = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++between;
    BetaSet nb = b;
    nb[i] = target;
    std::int64_t sub = mn_rec(parts_of(nb), mu.subspan(1));
    total += (between % 2 ? -sub : sub);
  }
  std::lock_guard lock(cache().mu);
  cache().values.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("mn_character: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
  std::vector<int> l(lambda.parts().begin(), lambda.parts().end());
  return mn_rec(l, mu.parts());
}

CharTable::CharTable(int K) : K_(K), parts_(partitions_of(K)) {
  if (K < 1) throw std::invalid_argument("CharTable: K must be positive");
  for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
  values_.resize(parts_.size() * parts_.size());
  for (std::size_t r = 0; r < parts_.size(); ++r)
    for (std::size_t c = 0; c < parts_.size(); ++c) values_[r * parts_.size() + c] = mn_character(parts_[r], parts_[c]);
}

std::int64_t CharTable::value(const Partition& lambda, const Partition& mu) const {
  auto r = index_.find(lambda);
  auto c = index_.find(mu);
  if (r == index_.end() || c == index_.end()) throw std::invalid_argument("CharTable: partition of the wrong weight");
  return value(r->second, c->second);
}

GradedSeries schur_in_power_sums(const Partition& lambda, const Truncation& trunc, Alphabet alphabet) {
  if (alphabet != Alphabet::P && alphabet != Alphabet::Q)
    throw std::invalid_argument("schur_in_power_sums: alphabet must be p or q");
  GradedSeries out(trunc);
  for (const auto& mu : partitions_of(lambda.weight())) {
    std::int64_t chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    std::vector<Monomial::Factor> f;
    for (int x : mu.parts()) f.emplace_back(VarId{alphabet, x, 0}, 1);
    out.add_term(Monomial(std::move(f)), ratio(BigInt(static_cast<long>(chi)), centralizer_order(mu)));
  }
  return out;
}

Rational central_weight(const Partition& lambda) {
  Rational w = 0;
  for (std::size_t idx = 0; idx < lambda.length(); ++idx) {
    Rational i = static_cast<long>(idx + 1);
    Rational a = lambda[idx] - i + Rational(1, 2);
    Rational b = -i + Rational(1, 2);
    w += a * a - b * b;
  }
  return w / 2;
}

BigInt content_sum(const Partition& lambda) {
  BigInt s = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) s += j - static_cast<long>(i);
  return s;
}

}  // namespace hurwitz
