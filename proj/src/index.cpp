#include "zsindex/index.hpp"

#include <array>
#include <atomic>
#include <limits>

#include <omp.h>

namespace zsindex {

Ratio::Ratio(Value numerator, Value denominator) {
  if (denominator <= 0) throw Error(Errc::precondition, "Ratio: denominator must be positive");
  const Value g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string to_string(const Ratio& r) {
  if (r.is_integer()) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

void require_unit(Value u, Value n) {
  if (!is_unit(u, n)) {
    throw Error(Errc::not_a_unit, std::to_string(u) + " is not a unit modulo " + std::to_string(n));
  }
}

void require_length4(const ZsSequence& s, const char* where) {
  if (s.size() != 4) {
    throw Error(Errc::invalid_sequence,
                std::string(where) + " needs a length-4 sequence, got " + std::to_string(s.size()));
  }
}

std::array<Value, 4> transformed4(const ZsSequence& s, Value m) {
  const Value n = s.modulus();
  return {mul_mod(m, s[0], n), mul_mod(m, s[1], n), mul_mod(m, s[2], n), mul_mod(m, s[3], n)};
}

}  // namespace

Ratio g_norm(const ZsSequence& s, Value u) {
  require_unit(u, s.modulus());
  return {unit_sum(s, reduce(u, s.modulus())), s.modulus()};
}

IndexResult index_oracle(const ZsSequence& s, IndexOptions options) {
  const Value n = s.modulus();
  Value best = std::numeric_limits<Value>::max();
  Value witness = 0;
  for (Value u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const Value total = unit_sum(s, u);
    if (total < best) {
      best = total;
      witness = u;
      if (options.early_exit && total == n) break;
    }
  }
  return {best, Ratio(best, n), witness};
}

IndexResult index_oracle_parallel(const ZsSequence& s, IndexOptions options, int threads) {
  const Value n = s.modulus();
  if (threads <= 0) threads = omp_get_max_threads();
  // Smallest unit seen so far whose sum equals n; units beyond it cannot win.
  std::atomic<Value> floor_unit{n};
  Value best = std::numeric_limits<Value>::max();
  Value witness = 0;

#pragma omp parallel num_threads(threads)
  {
    Value local_best = std::numeric_limits<Value>::max();
    Value local_witness = 0;
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const Value span = n - 1;
    const Value lo = 1 + span * tid / nt;
    const Value hi = 1 + span * (tid + 1) / nt;
    for (Value u = lo; u < hi; ++u) {
      if (options.early_exit && u > floor_unit.load(std::memory_order_relaxed)) break;
      if (std::gcd(u, n) != 1) continue;
      const Value total = unit_sum(s, u);
      if (total < local_best) {
        local_best = total;
        local_witness = u;
        if (options.early_exit && total == n) {
          Value cur = floor_unit.load();
          while (u < cur && !floor_unit.compare_exchange_weak(cur, u)) {
          }
          break;
        }
      }
    }
#pragma omp critical(zsindex_index_reduce)
    {
      if (local_witness != 0 &&
          (local_best < best || (local_best == best && local_witness < witness))) {
        best = local_best;
        witness = local_witness;
      }
    }
  }
  return {best, Ratio(best, n), witness};
}

SideCounts side_counts(std::span<const Value> values, Value n) noexcept {
  SideCounts c;
  for (Value v : values) {
    if (2 * v < n) ++c.below;
    else if (2 * v > n) ++c.above;
  }
  return c;
}

bool at_most_one_side(std::span<const Value> values, Value n) noexcept {
  const auto c = side_counts(values, n);
  return c.below <= 1 || c.above <= 1;
}

bool criterion_one(const ZsSequence& s, Value m) {
  require_length4(s, "criterion_one");
  require_unit(m, s.modulus());
  const auto t = transformed4(s, reduce(m, s.modulus()));
  return at_most_one_side(t, s.modulus());
}

bool criterion_two(const ZsSequence& s, Value m) {
  require_length4(s, "criterion_two");
  require_unit(m, s.modulus());
  const auto t = transformed4(s, reduce(m, s.modulus()));
  return t[0] + t[1] + t[2] + t[3] == 3 * s.modulus();
}

}  // namespace zsindex
