#pragma once

// Exact modular arithmetic over Z_n with canonical representatives in [1, n].

#include <compare>
#include <cstdint>
#include <numeric>
#include <ranges>
#include <span>
#include <vector>

#include "zsindex/error.hpp"

namespace zsindex {

using Value = std::int64_t;

struct PrimePower {
  Value prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Modulus n together with its prime factorization (ascending primes).
class GroupContext {
 public:
  explicit GroupContext(Value n);

  Value modulus() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::vector<Value> primes() const;

  std::size_t distinct_primes() const noexcept { return factors_.size(); }
  bool is_prime() const noexcept {
    return factors_.size() == 1 && factors_.front().exponent == 1;
  }
  bool coprime_to_six() const noexcept { return n_ % 2 != 0 && n_ % 3 != 0; }
  /// Exponent of p in n (0 if p does not divide n).
  int exponent_of(Value p) const noexcept;

  /// Context for n / d, derived from this factorization. d must divide n.
  GroupContext quotient(Value d) const;

 private:
  GroupContext(Value n, std::vector<PrimePower> factors);

  Value n_;
  std::vector<PrimePower> factors_;
};

struct Residue {
  Value value = 0;
  Value modulus = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// The unique r in [1, n] with r == x (mod n). Multiples of n map to n.
Residue canonical_residue(Value x, Value n);

/// Unchecked |x|_n for n >= 1.
inline Value reduce(Value x, Value n) noexcept {
  Value r = x % n;
  if (r <= 0) r += n;
  return r;
}

/// Unchecked |a*b|_n, product formed in 128 bits.
inline Value mul_mod(Value a, Value b, Value n) noexcept {
  auto r = static_cast<Value>((static_cast<__int128>(a) * b) % n);
  if (r <= 0) r += n;
  return r;
}

std::vector<PrimePower> factorize(Value n);

bool is_unit(Value x, Value n);
Value unit_inverse(Value u, Value n);
Value euler_phi(Value n);

/// Largest e with p^e | x (x != 0).
int valuation(Value x, Value p) noexcept;

Value ipow(Value base, int exp) noexcept;

/// Lazy ascending stream of U(n) = { k in [1, n-1] : gcd(k, n) = 1 }.
inline auto units_stream(Value n) {
  if (n < 2) throw Error(Errc::invalid_modulus, "units_stream: modulus must be >= 2");
  return std::views::iota(Value{1}, n) |
         std::views::filter([n](Value k) { return std::gcd(k, n) == 1; });
}

std::vector<Value> units(Value n);

/// All units u with |u*x|_n = |y|_n, ascending. Empty unless gcd(n,x) = gcd(n,y).
std::vector<Value> units_mapping(Value x, Value y, Value n);

/// Units u with |u*x|_n = gcd(n, x), ascending. x must be in [1, n-1].
inline std::vector<Value> normalizing_units(Value x, Value n) {
  return units_mapping(x, std::gcd(x, n), n);
}

/// Smallest unit u with |u*x|_n = gcd(n, x).
Value smallest_normalizer(Value x, Value n);

}  // namespace zsindex
