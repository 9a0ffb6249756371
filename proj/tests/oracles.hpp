#pragma once

// Brute-force references written against plain integers only. Nothing here
// calls into the library, so the tests that use them check the library
// against an independent route.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Terms = std::vector<long long>;

inline long long canon(long long x, long long n) {
  long long r = ((x % n) + n) % n;
  return r == 0 ? n : r;
}

inline std::vector<long long> unit_list(long long n) {
  std::vector<long long> out;
  for (long long u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

/// Every proper nonempty subset sum, listed recursively.
inline bool minimal_zero_sum(const Terms& t, long long n) {
  long long total = 0;
  for (auto x : t) total += x;
  if (total % n != 0) return false;
  const std::size_t k = t.size();
  std::vector<bool> pick(k, false);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t i, long long sum, std::size_t chosen) -> void {
    if (!ok) return;
    if (i == k) {
      if (chosen > 0 && chosen < k && sum % n == 0) ok = false;
      return;
    }
    self(self, i + 1, sum, chosen);
    self(self, i + 1, sum + t[i], chosen + 1);
  };
  rec(rec, 0, 0, 0);
  return ok;
}

inline long long scaled_sum(const Terms& t, long long u, long long n) {
  long long s = 0;
  for (auto x : t) s += canon(u * x, n);
  return s;
}

/// Minimum over all units of the scaled sum, and the smallest unit reaching it.
inline std::pair<long long, long long> min_sum(const Terms& t, long long n) {
  long long best = -1, arg = 0;
  for (auto u : unit_list(n)) {
    const long long s = scaled_sum(t, u, n);
    if (best < 0 || s < best) {
      best = s;
      arg = u;
    }
  }
  return {best, arg};
}

inline Terms scaled(const Terms& t, long long u, long long n) {
  Terms out;
  for (auto x : t) out.push_back(canon(u * x, n));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Terms> orbit(const Terms& t, long long n) {
  std::set<Terms> out;
  for (auto u : unit_list(n)) out.insert(scaled(t, u, n));
  return out;
}

/// All sorted 4-multisets of [1, n-1] that are minimal zero-sum, by full
/// quadruple loop.
inline std::vector<Terms> all_minimal4(long long n) {
  std::vector<Terms> out;
  for (long long a = 1; a < n; ++a)
    for (long long b = a; b < n; ++b)
      for (long long c = b; c < n; ++c)
        for (long long d = c; d < n; ++d) {
          Terms t{a, b, c, d};
          if (minimal_zero_sum(t, n)) out.push_back(t);
        }
  return out;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace oracle
