#pragma once

// Verification campaigns: exhaustive or sampled checks of index 1 over
// minimal zero-sum length-4 sequences, per modulus and over ranges.
//
// verify_n / counterexample_scan are the OpenMP kernels; the *_serial
// variants are the single-threaded references they are tested against.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zsindex/index.hpp"
#include "zsindex/sequence.hpp"

namespace zsindex {

enum class Mode { exhaustive, sampled };
enum class Filter { theorem13, theorem31, all, conjecture };

const char* to_string(Mode m) noexcept;
const char* to_string(Filter f) noexcept;
Mode parse_mode(std::string_view text);
Filter parse_filter(std::string_view text);

/// Modulus preconditions of each filter:
///   theorem13  - gcd(n, 6) = 1, n composite
///   theorem31  - gcd(n, 6) = 1, exactly two distinct primes
///   conjecture - gcd(n, 6) = 1, n >= 5
///   all        - n >= 5
bool admissible(Value n, Filter filter);

/// Per-sequence filter predicate (theorem13 keeps overall gcd 1 with some
/// gcd(n, x_i) > 1; every other filter keeps everything).
bool filter_accepts(const ZsSequence& s, const GroupContext& ctx, Filter filter);

struct VerifyOptions {
  Mode mode = Mode::exhaustive;
  Filter filter = Filter::all;
  bool orbits = true;          // exhaustive only: one representative per unit orbit
  std::uint64_t samples = 0;   // sampled only
  std::uint64_t seed = 0;      // sampled only
  int jobs = 0;                // 0 = all available threads
};

struct Violation {
  ZsSequence sequence;
  Ratio index;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationRecord {
  Value n = 0;
  Mode mode = Mode::exhaustive;
  Filter filter = Filter::all;
  bool orbits = false;
  std::uint64_t sequences_checked = 0;
  std::uint64_t orbits_checked = 0;
  std::vector<Violation> violations;  // ascending
  std::uint64_t certified = 0;
  std::uint64_t fallback_uses = 0;
  std::uint64_t certify_failures = 0;
  Value max_index_seen = 0;
  double elapsed_seconds = 0.0;

  bool passed() const noexcept {
    return violations.empty() && fallback_uses == 0 && certify_failures == 0;
  }
};

VerificationRecord verify_n(Value n, const VerifyOptions& options);
VerificationRecord verify_n_serial(Value n, const VerifyOptions& options);

struct CampaignTotals {
  std::uint64_t moduli = 0;
  std::uint64_t sequences_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t fallback_uses = 0;
  std::uint64_t certify_failures = 0;
};

struct CampaignReport {
  std::vector<VerificationRecord> records;  // ascending n
  std::uint64_t seed = 0;
  CampaignTotals totals;
  bool passed = true;
};

/// verify_n over every admissible n in [from, to].
CampaignReport campaign(Value from, Value to, const VerifyOptions& options);

struct Finding {
  ZsSequence sequence;
  Ratio index;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Minimal zero-sum length-4 sequences of index >= 2 for each n in [from, to]
/// with gcd(n, 6) != 1 (n < 5 skipped). Ascending (n, sequence).
std::vector<Finding> counterexample_scan(Value from, Value to, bool first_only = false,
                                         int jobs = 0);
std::vector<Finding> counterexample_scan_serial(Value from, Value to, bool first_only = false);

/// Uniform sampler over the minimal zero-sum length-4 sequences of Z_n that
/// pass a filter.
///
/// Algorithm (fixed, so runs reproduce): the stream seed is
/// splitmix64(seed ^ (n * 0x9E3779B97F4A7C15)) feeding std::mt19937_64.
/// An integer in [lo, hi] is drawn as r % range from the first 64-bit output
/// r >= (2^64 - range) % range. Each attempt draws a, b, c in [1, n-1] in that
/// order; it is kept only if a <= b <= c, x4 = |-(a+b+c)|_n satisfies
/// c <= x4 <= n-1, the multiset is minimal, and the filter accepts it.
class SequenceSampler {
 public:
  SequenceSampler(Value n, std::uint64_t seed, Filter filter = Filter::all);

  ZsSequence next();

 private:
  Value draw(Value lo, Value hi);

  Value n_;
  GroupContext ctx_;
  Filter filter_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace zsindex
