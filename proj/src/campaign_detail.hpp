#pragma once

// Shared per-sequence work for the serial and OpenMP campaign kernels.

#include <algorithm>
#include <utility>
#include <vector>

#include "zsindex/campaign.hpp"
#include "zsindex/witness.hpp"

namespace zsindex::detail {

struct Tally {
  std::uint64_t sequences = 0;
  std::uint64_t orbits = 0;
  std::uint64_t certified = 0;
  std::uint64_t fallback = 0;
  std::uint64_t certify_failures = 0;
  Value max_index = 0;
  std::vector<Violation> violations;
  std::vector<ZsSequence> reps;  // sampled mode: canonical reps seen

  void merge(Tally&& other) {
    sequences += other.sequences;
    orbits += other.orbits;
    certified += other.certified;
    fallback += other.fallback;
    certify_failures += other.certify_failures;
    max_index = std::max(max_index, other.max_index);
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
    reps.insert(reps.end(), other.reps.begin(), other.reps.end());
  }
};

inline bool is_theorem_filter(Filter f) noexcept {
  return f == Filter::theorem13 || f == Filter::theorem31;
}

/// Checks one sequence; `orbit_weighted` counts it as its whole orbit.
inline void check_sequence(const ZsSequence& s, const GroupContext& ctx, const VerifyOptions& opt,
                           bool orbit_weighted, Tally& tally) {
  if (!filter_accepts(s, ctx, opt.filter)) return;
  if (opt.mode == Mode::sampled) {
    ++tally.sequences;
    tally.reps.push_back(canonical_rep(s));
  } else if (orbit_weighted) {
    if (!is_canonical_rep(s)) return;
    ++tally.orbits;
    tally.sequences += static_cast<std::uint64_t>(orbit_size(s));
  } else {
    ++tally.sequences;
    if (is_canonical_rep(s)) ++tally.orbits;
  }

  const auto idx = index_oracle(s);
  const Value index = idx.index_value.numerator() / idx.index_value.denominator();
  tally.max_index = std::max(tally.max_index, index);
  if (idx.index_value != Ratio(1, 1)) tally.violations.push_back({s, idx.index_value});

  if (is_theorem_filter(opt.filter) && certify_hypotheses_hold(s, ctx)) {
    try {
      const auto w = certify_index_one(s, ctx);
      ++tally.certified;
      if (w.used_fallback()) ++tally.fallback;
    } catch (const Error&) {
      ++tally.certify_failures;
    }
  }
}

/// (x1, x2) prefix blocks; orbit mode restricts x1 to proper divisors of n,
/// since a canonical representative starts with min gcd(n, x_i).
inline std::vector<std::pair<Value, Value>> prefix_blocks(Value n, bool orbits) {
  std::vector<std::pair<Value, Value>> blocks;
  for (Value x1 = 1; x1 < n; ++x1) {
    if (orbits && n % x1 != 0) continue;
    for (Value x2 = x1; x2 < n; ++x2) blocks.emplace_back(x1, x2);
  }
  return blocks;
}

inline void validate_verify_request(Value n, const VerifyOptions& opt) {
  if (!admissible(n, opt.filter)) {
    throw Error(Errc::usage, "n=" + std::to_string(n) + " does not meet the modulus "
                             "preconditions of filter " + to_string(opt.filter));
  }
  if (opt.mode == Mode::sampled && opt.samples == 0) {
    throw Error(Errc::usage, "sampled mode needs a positive sample count");
  }
}

inline std::vector<ZsSequence> draw_samples(Value n, const VerifyOptions& opt) {
  SequenceSampler sampler(n, opt.seed, opt.filter);
  std::vector<ZsSequence> out;
  out.reserve(opt.samples);
  for (std::uint64_t i = 0; i < opt.samples; ++i) out.push_back(sampler.next());
  return out;
}

inline VerificationRecord finish_record(Value n, const VerifyOptions& opt, Tally&& tally,
                                        double elapsed) {
  VerificationRecord r;
  r.n = n;
  r.mode = opt.mode;
  r.filter = opt.filter;
  r.orbits = opt.mode == Mode::exhaustive && opt.orbits;
  r.sequences_checked = tally.sequences;
  r.certified = tally.certified;
  r.fallback_uses = tally.fallback;
  r.certify_failures = tally.certify_failures;
  r.max_index_seen = tally.max_index;
  auto by_sequence = [](const Violation& a, const Violation& b) { return a.sequence < b.sequence; };
  std::sort(tally.violations.begin(), tally.violations.end(), by_sequence);
  tally.violations.erase(std::unique(tally.violations.begin(), tally.violations.end()),
                         tally.violations.end());
  r.violations = std::move(tally.violations);
  if (opt.mode == Mode::sampled) {
    std::sort(tally.reps.begin(), tally.reps.end());
    r.orbits_checked = static_cast<std::uint64_t>(
        std::unique(tally.reps.begin(), tally.reps.end()) - tally.reps.begin());
  } else {
    r.orbits_checked = tally.orbits;
  }
  r.elapsed_seconds = elapsed;
  return r;
}

inline std::vector<Finding> scan_findings(Value n, Value x1) {
  std::vector<Finding> out;
  for (Value x2 = x1; x2 < n; ++x2) {
    for_each_minimal4_with_prefix(n, x1, x2, [&](const ZsSequence& s) {
      const auto idx = index_oracle(s);
      if (Ratio(2, 1) < idx.index_value || idx.index_value == Ratio(2, 1)) {
        out.push_back({s, idx.index_value});
      }
    });
  }
  return out;
}

inline bool scan_skips(Value n) { return n < 5 || std::gcd(n, Value{6}) == 1; }

}  // namespace zsindex::detail
