#pragma once

// Sequences over Z_n (unordered, repetition allowed), stored as an ascending
// multiset of residues in [1, n-1].

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsindex/arith.hpp"

namespace zsindex {

inline constexpr std::size_t kMaxLength = 16;

class ZsSequence {
 public:
  /// Validates n >= 2, 1 <= k <= 16, every term in [1, n-1]; sorts the terms.
  ZsSequence(Value n, std::span<const Value> terms);
  ZsSequence(Value n, std::initializer_list<Value> terms)
      : ZsSequence(n, std::span<const Value>(terms.begin(), terms.size())) {}

  Value modulus() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const Value> terms() const noexcept { return {terms_.data(), size_}; }
  Value operator[](std::size_t i) const noexcept { return terms_[i]; }
  Value sum() const noexcept;

  friend bool operator==(const ZsSequence& a, const ZsSequence& b) noexcept {
    return a.n_ == b.n_ && std::ranges::equal(a.terms(), b.terms());
  }
  /// Orders by modulus, then lexicographically by terms.
  friend std::strong_ordering operator<=>(const ZsSequence& a, const ZsSequence& b) noexcept;

 private:
  struct Unchecked {};
  ZsSequence(Unchecked, Value n, std::span<const Value> sorted_terms) noexcept;
  friend ZsSequence scale_unchecked(const ZsSequence&, Value) noexcept;
  friend ZsSequence make_sorted4_unchecked(Value, Value, Value, Value, Value) noexcept;

  Value n_ = 0;
  std::array<Value, kMaxLength> terms_{};
  std::size_t size_ = 0;
};

/// Per-term gcd(n, x_i) and derived data that drives the case analysis.
struct GcdProfile {
  struct PairGcd {
    std::size_t i = 0;
    std::size_t j = 0;
    Value gcd = 1;
  };

  std::vector<Value> f;
  Value overall_gcd = 0;
  std::vector<PairGcd> pair_gcds;
  std::vector<std::vector<PrimePower>> prime_support;

  Value max_f() const noexcept;
  /// overall gcd 1 and some f_i > 1.
  bool meets_main_hypothesis() const noexcept;
  bool all_nontrivial() const noexcept;
};

bool is_zero_sum(const ZsSequence& s) noexcept;
bool is_minimal_zero_sum(const ZsSequence& s) noexcept;

GcdProfile gcd_profile(const ZsSequence& s, const GroupContext& ctx);
GcdProfile gcd_profile(const ZsSequence& s);

/// Sorted multiset of |u*x_i|_n. Throws not-a-unit.
ZsSequence scale(const ZsSequence& s, Value u);
ZsSequence scale_unchecked(const ZsSequence& s, Value u) noexcept;

/// Caller guarantees 1 <= a <= b <= c <= d <= n-1.
ZsSequence make_sorted4_unchecked(Value n, Value a, Value b, Value c, Value d) noexcept;

/// Minimal zero-sum length-4 sequences with fixed (x1, x2) prefix, ascending in x3.
void for_each_minimal4_with_prefix(Value n, Value x1, Value x2,
                                   const std::function<void(const ZsSequence&)>& fn);
/// Every minimal zero-sum length-4 multiset over Z_n, lexicographic order.
void for_each_minimal4(Value n, const std::function<void(const ZsSequence&)>& fn);
std::vector<ZsSequence> enumerate_minimal4(Value n);

/// Lexicographically smallest member of { scale(s, u) : u in U(n) }.
ZsSequence canonical_rep(const ZsSequence& s);
bool is_canonical_rep(const ZsSequence& s);
/// Number of units u with scale(s, u) == s.
Value stabilizer_size(const ZsSequence& s);
/// |{ scale(s, u) : u in U(n) }|.
Value orbit_size(const ZsSequence& s);

/// Text form `n:x1,x2,...`, ascending terms.
std::string to_string(const ZsSequence& s);
ZsSequence parse_sequence(std::string_view text);

}  // namespace zsindex
