#include "hurwitz/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

bool reverse_lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest first part first gives reverse lexicographic order directly.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(remaining, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(remaining - x, x);
      cur.pop_back();
    }
  };
  rec(n, max_part.value_or(n));
  return out;
}

BigInt aut_order(const Partition& p) {
  BigInt result = 1;
  auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    result *= f;
    i = j;
  }
  return result;
}

BigInt centralizer_order(const Partition& p) {
  BigInt result = aut_order(p);
  for (int x : p.parts()) result *= x;
  return result;
}

BigInt class_size(const Partition& p) {
  BigInt n;
  mpz_fac_ui(n.get_mpz_t(), static_cast<unsigned long>(p.weight()));
  return n / centralizer_order(p);
}

Rational gen_binomial(const BigInt& a, int d) {
  if (d < 0) throw std::invalid_argument("gen_binomial: d must be nonnegative");
  Rational num = 1;
  for (int i = 0; i < d; ++i) num *= Rational(a - i);
  return num / factorial(static_cast<unsigned long>(d));
}

BigInt multinomial(std::span<const int> nu) {
  unsigned long total = 0;
  for (int x : nu) {
    if (x < 0) throw std::invalid_argument("multinomial: negative entry");
    total += static_cast<unsigned long>(x);
  }
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), total);
  for (int x : nu) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
    result /= f;
  }
  return result;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0 && parts == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(parts));
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == parts - 1) {
      if (remaining >= 1) {
        cur[static_cast<std::size_t>(idx)] = remaining;
        out.push_back(cur);
      }
      return;
    }
    for (int x = 1; x <= remaining - (parts - 1 - idx); ++x) {
      cur[static_cast<std::size_t>(idx)] = x;
      rec(idx + 1, remaining - x);
    }
  };
  rec(0, total);
  return out;
}

}  // namespace hurwitz
