#include "zsindex/arith.hpp"

#include <algorithm>
#include <string>

namespace zsindex {

namespace {

void require_modulus(Value n, const char* where) {
  if (n < 2) {
    throw Error(Errc::invalid_modulus,
                std::string(where) + ": modulus must be >= 2, got " + std::to_string(n));
  }
}

// Returns (g, x) with a*x == g (mod m).
std::pair<Value, Value> extended_gcd(Value a, Value m) {
  Value old_r = a, r = m;
  Value old_s = 1, s = 0;
  while (r != 0) {
    const Value q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return {old_r, old_s};
}

}  // namespace

GroupContext::GroupContext(Value n) : n_(n) {
  require_modulus(n, "GroupContext");
  factors_ = factorize(n);
}

GroupContext::GroupContext(Value n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

std::vector<Value> GroupContext::primes() const {
  std::vector<Value> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

int GroupContext::exponent_of(Value p) const noexcept {
  for (const auto& f : factors_) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

GroupContext GroupContext::quotient(Value d) const {
  if (d < 1 || n_ % d != 0 || n_ / d < 2) {
    throw Error(Errc::invalid_modulus,
                "GroupContext::quotient: " + std::to_string(d) + " does not properly divide " +
                    std::to_string(n_));
  }
  std::vector<PrimePower> reduced;
  for (const auto& f : factors_) {
    const int e = f.exponent - valuation(d, f.prime);
    if (e > 0) reduced.push_back({f.prime, e});
  }
  return GroupContext(n_ / d, std::move(reduced));
}

Residue canonical_residue(Value x, Value n) {
  require_modulus(n, "canonical_residue");
  return {reduce(x, n), n};
}

std::vector<PrimePower> factorize(Value n) {
  if (n < 1) {
    throw Error(Errc::invalid_modulus, "factorize: n must be >= 1, got " + std::to_string(n));
  }
  std::vector<PrimePower> out;
  for (Value p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_unit(Value x, Value n) {
  require_modulus(n, "is_unit");
  return std::gcd(reduce(x, n), n) == 1;
}

Value unit_inverse(Value u, Value n) {
  require_modulus(n, "unit_inverse");
  const auto [g, x] = extended_gcd(reduce(u, n), n);
  if (g != 1) {
    throw Error(Errc::not_a_unit,
                std::to_string(u) + " is not a unit modulo " + std::to_string(n));
  }
  return reduce(x, n);
}

Value euler_phi(Value n) {
  require_modulus(n, "euler_phi");
  Value phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int valuation(Value x, Value p) noexcept {
  if (x == 0 || p < 2) return 0;
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

Value ipow(Value base, int exp) noexcept {
  Value r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::vector<Value> units(Value n) {
  std::vector<Value> out;
  for (Value u : units_stream(n)) out.push_back(u);
  return out;
}

std::vector<Value> units_mapping(Value x, Value y, Value n) {
  require_modulus(n, "units_mapping");
  x = reduce(x, n);
  y = reduce(y, n);
  const Value d = std::gcd(x, n);
  if (std::gcd(y, n) != d) return {};
  const Value m = n / d;
  std::vector<Value> out;
  if (m == 1) {
    // x == y == 0 class: every unit works.
    return units(n);
  }
  // u * (x/d) == y/d (mod m); x/d is invertible mod m.
  const Value base = mul_mod(unit_inverse(x / d, m) % m, (y / d) % m, m) % m;
  for (Value j = 0; j < d; ++j) {
    const Value u = base + j * m;
    if (u >= 1 && u < n && std::gcd(u, n) == 1) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Value smallest_normalizer(Value x, Value n) {
  const auto us = normalizing_units(x, n);
  if (us.empty()) {
    throw Error(Errc::precondition, "smallest_normalizer: no unit sends " + std::to_string(x) +
                                        " to gcd(n, x) modulo " + std::to_string(n));
  }
  return us.front();
}

}  // namespace zsindex
