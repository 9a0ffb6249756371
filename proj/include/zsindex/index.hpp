#pragma once

// The index of a sequence: min over units u of sum |u*x_i|_n / n, plus the
// two sufficient criteria for index 1 on length-4 sequences.

#include <string>

#include "zsindex/sequence.hpp"

namespace zsindex {

/// Exact non-negative rational in lowest terms.
class Ratio {
 public:
  Ratio(Value numerator, Value denominator);

  Value numerator() const noexcept { return num_; }
  Value denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  Value num_;
  Value den_;
};

std::string to_string(const Ratio& r);

/// Sum of |u*x_i|_n with no unit check.
inline Value unit_sum(const ZsSequence& s, Value u) noexcept {
  Value total = 0;
  for (Value x : s.terms()) total += mul_mod(u, x, s.modulus());
  return total;
}

/// sum_i |u*x_i|_n / n. Throws not-a-unit.
Ratio g_norm(const ZsSequence& s, Value u);

struct IndexOptions {
  /// Stop at the first unit whose sum equals n (the floor for zero-sum input).
  bool early_exit = true;
};

struct IndexResult {
  Value numerator = 0;     // minimum over units of sum |u*x_i|_n
  Ratio index_value{0, 1};
  Value witness_unit = 0;  // smallest unit attaining the minimum
};

IndexResult index_oracle(const ZsSequence& s, IndexOptions options = {});

/// OpenMP unit scan over disjoint ranges, deterministic min-reduce
/// (tie-break on the smallest unit). Same result as index_oracle.
IndexResult index_oracle_parallel(const ZsSequence& s, IndexOptions options = {},
                                  int threads = 0);

/// Side counts of values relative to n/2, compared as 2v vs n. A value of
/// exactly n/2 (even n) counts on neither side.
struct SideCounts {
  int below = 0;
  int above = 0;
};
SideCounts side_counts(std::span<const Value> values, Value n) noexcept;

/// At most one value below n/2, or at most one above.
bool at_most_one_side(std::span<const Value> values, Value n) noexcept;

/// Lemma-style criterion one on the transformed values |m*x_i|_n.
bool criterion_one(const ZsSequence& s, Value m);
/// Transformed values sum to exactly 3n.
bool criterion_two(const ZsSequence& s, Value m);

}  // namespace zsindex
