#include "hurwitz/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <numeric>

namespace hurwitz {

namespace {

constexpr int kMaxK = 8;
using Perm = std::array<std::int8_t, kMaxK>;

std::vector<int> cycle_type(const Perm& p, int K) {
  std::array<bool, kMaxK> seen{};
  std::vector<int> type;
  for (int i = 0; i < K; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

std::vector<Perm> class_members(const Partition& lambda) {
  const int K = lambda.weight();
  std::vector<int> target(lambda.parts().begin(), lambda.parts().end());
  std::array<std::int8_t, kMaxK> base{};
  std::iota(base.begin(), base.begin() + K, std::int8_t{0});
  std::vector<Perm> out;
  Perm p = base;
  do {
    if (cycle_type(p, K) == target) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + K));
  return out;
}

struct UnionFind {
  std::array<std::int8_t, kMaxK> parent{};
  int components = 0;

  explicit UnionFind(int K) : components(K) { std::iota(parent.begin(), parent.begin() + K, std::int8_t{0}); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
      --components;
    }
  }
};

struct Search {
  int K;
  int m;
  std::vector<int> target;  // cycle type of rho
  std::vector<std::pair<int, int>> transpositions;

  Search(const Partition& mu, int m_) : K(mu.weight()), m(m_), target(mu.parts().begin(), mu.parts().end()) {
    for (int a = 0; a < K; ++a)
      for (int b = a + 1; b < K; ++b) transpositions.emplace_back(a, b);
  }

  // product = tau_depth ... tau_1 sigma; rho = product^{-1} has the same cycle type
  unsigned long long dfs(const Perm& product, const UnionFind& uf, int depth) const {
    if (depth == m) return (uf.components == 1 && cycle_type(product, K) == target) ? 1ULL : 0ULL;
    unsigned long long n = 0;
    for (auto [a, b] : transpositions) {
      Perm next = product;
      for (int i = 0; i < K; ++i) {
        auto& v = next[static_cast<std::size_t>(i)];
        if (v == a) v = static_cast<std::int8_t>(b);
        else if (v == b) v = static_cast<std::int8_t>(a);
      }
      UnionFind u = uf;
      u.unite(a, b);
      n += dfs(next, u, depth + 1);
    }
    return n;
  }

  unsigned long long from(const Perm& sigma) const {
    UnionFind uf(K);
    for (int i = 0; i < K; ++i) uf.unite(i, sigma[static_cast<std::size_t>(i)]);
    return dfs(sigma, uf, 0);
  }
};

void check_input(const Partition& lambda, const Partition& mu, int m) {
  if (lambda.empty() || lambda.weight() != mu.weight())
    throw std::invalid_argument("oracle: profiles must be nonempty partitions of the same degree");
  if (m < 0) throw std::invalid_argument("oracle: negative number of transpositions");
  if (lambda.weight() > kMaxK) throw ResourceError("oracle: degree above hard limit");
}

}  // namespace

namespace kernels {

BigInt count_factorizations_serial(const Partition& lambda, const Partition& mu, int m) {
  check_input(lambda, mu, m);
  Search search(mu, m);
  BigInt total = 0;
  for (const auto& sigma : class_members(lambda)) total += static_cast<unsigned long>(search.from(sigma));
  return total;
}

BigInt count_factorizations_parallel(const Partition& lambda, const Partition& mu, int m) {
  check_input(lambda, mu, m);
  const Search search(mu, m);
  const auto sigmas = class_members(lambda);
  const auto n = static_cast<std::ptrdiff_t>(sigmas.size());
  unsigned long long total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < n; ++i) total += search.from(sigmas[static_cast<std::size_t>(i)]);
  return BigInt(std::to_string(total));
}

}  // namespace kernels

OracleResult oracle_count(int genus, const Partition& lambda, const Partition& mu, OracleBudget budget) {
  if (genus < 0) throw std::invalid_argument("oracle: negative genus");
  const int m = static_cast<int>(lambda.length() + mu.length()) + 2 * genus - 2;
  check_input(lambda, mu, m);
  const int K = lambda.weight();
  if (K > budget.max_degree || m > budget.max_transpositions)
    throw ResourceError("oracle: K=" + std::to_string(K) + " m=" + std::to_string(m) + " exceeds budget K<=" +
                        std::to_string(budget.max_degree) + " m<=" + std::to_string(budget.max_transpositions));
  OracleResult r;
  r.transpositions = m;
  r.raw_count = kernels::count_factorizations_parallel(lambda, mu, m);
  r.literal = r.raw_count / factorial(static_cast<unsigned long>(K));
  r.calibrated = r.literal * aut_order(lambda) * aut_order(mu);
  return r;
}

}  // namespace hurwitz
