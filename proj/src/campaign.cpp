#include "zsindex/campaign.hpp"

#include <limits>

namespace zsindex {

const char* to_string(Mode m) noexcept {
  return m == Mode::exhaustive ? "exhaustive" : "sampled";
}

const char* to_string(Filter f) noexcept {
  switch (f) {
    case Filter::theorem13: return "theorem13";
    case Filter::theorem31: return "theorem31";
    case Filter::all: return "all";
    case Filter::conjecture: return "conjecture";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "exhaustive") return Mode::exhaustive;
  if (text == "sampled") return Mode::sampled;
  throw Error(Errc::usage, "unknown mode '" + std::string(text) + "'");
}

Filter parse_filter(std::string_view text) {
  for (Filter f : {Filter::theorem13, Filter::theorem31, Filter::all, Filter::conjecture}) {
    if (text == to_string(f)) return f;
  }
  throw Error(Errc::usage, "unknown filter '" + std::string(text) + "'");
}

bool admissible(Value n, Filter filter) {
  if (n < 5) return false;
  if (filter == Filter::all) return true;
  const GroupContext ctx(n);
  if (!ctx.coprime_to_six()) return false;
  switch (filter) {
    case Filter::theorem13: return !ctx.is_prime();
    case Filter::theorem31: return ctx.distinct_primes() == 2;
    default: return true;
  }
}

bool filter_accepts(const ZsSequence& s, const GroupContext& ctx, Filter filter) {
  if (filter != Filter::theorem13) return true;
  return gcd_profile(s, ctx).meets_main_hypothesis();
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SequenceSampler::SequenceSampler(Value n, std::uint64_t seed, Filter filter)
    : n_(n),
      ctx_(n),
      filter_(filter),
      engine_(splitmix64(seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL))) {
  if (n < 5) throw Error(Errc::invalid_modulus, "sampler: n must be >= 5");
}

Value SequenceSampler::draw(Value lo, Value hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return lo + static_cast<Value>(r % range);
  }
}

ZsSequence SequenceSampler::next() {
  // Far more than any admissible modulus needs; guards an empty filtered set.
  constexpr std::uint64_t kMaxAttempts = 1'000'000'000;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Value a = draw(1, n_ - 1);
    const Value b = draw(1, n_ - 1);
    const Value c = draw(1, n_ - 1);
    if (a > b || b > c) continue;
    const Value d = reduce(-(a + b + c), n_);
    if (d >= n_ || d < c) continue;
    const ZsSequence s = make_sorted4_unchecked(n_, a, b, c, d);
    if (!is_minimal_zero_sum(s) || !filter_accepts(s, ctx_, filter_)) continue;
    return s;
  }
  throw Error(Errc::usage, "sampler: no sequence of Z_" + std::to_string(n_) +
                               " passes filter " + to_string(filter_));
}

CampaignReport campaign(Value from, Value to, const VerifyOptions& options) {
  if (from > to) throw Error(Errc::usage, "campaign: empty range");
  if (from < 1) throw Error(Errc::usage, "campaign: range must be positive");
  if (options.mode == Mode::sampled && options.samples == 0) {
    throw Error(Errc::usage, "sampled mode needs --samples and --seed");
  }
  CampaignReport report;
  report.seed = options.seed;
  for (Value n = from; n <= to; ++n) {
    if (!admissible(n, options.filter)) continue;
    auto rec = verify_n(n, options);
    report.totals.moduli += 1;
    report.totals.sequences_checked += rec.sequences_checked;
    report.totals.violations += rec.violations.size();
    report.totals.fallback_uses += rec.fallback_uses;
    report.totals.certify_failures += rec.certify_failures;
    report.passed = report.passed && rec.passed();
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace zsindex
