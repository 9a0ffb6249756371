#include "zsindex/witness.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace zsindex {

namespace {

[[noreturn]] void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

bool is_prime(Value p) {
  if (p < 2) return false;
  for (Value d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime_divisor(Value n, Value p, const char* where) {
  if (!is_prime(p) || n % p != 0) {
    fail(Errc::precondition, std::string(where) + ": " + std::to_string(p) +
                                 " is not a prime divisor of " + std::to_string(n));
  }
}

bool below_half(Value v, Value n) noexcept { return 2 * v < n; }
bool above_half(Value v, Value n) noexcept { return 2 * v > n; }

}  // namespace

WitnessFamily unit_family(Value n, Value p, int s) {
  if (n < 2) fail(Errc::invalid_modulus, "unit_family: modulus must be >= 2");
  if (s < 0 || !is_prime(p)) {
    fail(Errc::invalid_family, "unit_family: need prime p and s >= 0");
  }
  const Value ps1 = ipow(p, s + 1);
  if (n % ps1 != 0) {
    fail(Errc::invalid_family, "unit_family: " + std::to_string(p) + "^" + std::to_string(s + 1) +
                                   " does not divide " + std::to_string(n));
  }
  WitnessFamily fam{n, p, s, n / ps1, {}};
  for (Value t = 0; t < p; ++t) {
    if (std::gcd(fam.member(t), n) == 1) fam.unit_ts.push_back(t);
  }
  return fam;
}

ShiftWitnesses shift_witnesses(const GroupContext& ctx, Value v, Value p) {
  const Value n = ctx.modulus();
  if (!ctx.coprime_to_six() || ctx.is_prime()) {
    fail(Errc::precondition, "shift_witnesses: n must be composite with gcd(n, 6) = 1");
  }
  if (v < 1 || v >= n) fail(Errc::precondition, "shift_witnesses: v outside [1, n-1]");
  require_prime_divisor(n, p, "shift_witnesses");

  const auto fam = unit_family(n, p, 0);
  std::optional<Value> below, above;
  for (Value t : fam.unit_ts) {
    const Value shifted = reduce(v + t * fam.alpha, n);
    if (!below && below_half(shifted, n)) below = t;
    if (!above && above_half(shifted, n)) above = t;
    if (below && above) return {*below, *above};
  }
  fail(Errc::lemma_violation, "shift_witnesses: family exhausted for v=" + std::to_string(v) +
                                  " p=" + std::to_string(p) + " n=" + std::to_string(n));
}

Value scale_witness_below(const GroupContext& ctx, Value v, Value p) {
  const Value n = ctx.modulus();
  if (v < 1 || v >= n) fail(Errc::precondition, "scale_witness_below: v outside [1, n-1]");
  require_prime_divisor(n, p, "scale_witness_below");
  if (v % p == 0) fail(Errc::precondition, "scale_witness_below: gcd(v, p) != 1");

  const auto fam = unit_family(n, p, 0);
  for (Value t : fam.unit_ts) {
    const Value y = fam.member(t);
    if (below_half(mul_mod(y, v, n), n)) return y;
  }
  fail(Errc::lemma_violation, "scale_witness_below: no family member for v=" + std::to_string(v) +
                                  " p=" + std::to_string(p) + " n=" + std::to_string(n));
}

Value cor_witness(const GroupContext& ctx, Value beta, Value p, int s) {
  const Value n = ctx.modulus();
  if (beta < 1 || beta >= n) fail(Errc::precondition, "cor_witness: beta outside [1, n-1]");
  require_prime_divisor(n, p, "cor_witness");
  if (s < 0 || valuation(beta, p) != s || n % ipow(p, s + 1) != 0) {
    fail(Errc::precondition, "cor_witness: need p^s || beta and p^(s+1) | n");
  }
  // Work over n1 = n / p^s with beta1 = beta / p^s, which is prime to p.
  const Value ps = ipow(p, s);
  const GroupContext reduced = s == 0 ? ctx : ctx.quotient(ps);
  const Value y = scale_witness_below(reduced, beta / ps, p);
  // n1 and n share their primes, so y is a unit of Z_n as well.
  if (std::gcd(y, n) != 1 || !below_half(mul_mod(y, beta, n), n)) {
    fail(Errc::lemma_violation, "cor_witness: lifted witness fails for beta=" +
                                    std::to_string(beta) + " n=" + std::to_string(n));
  }
  return y;
}

PairWitnessSteps pair_witness_steps(const GroupContext& ctx, Value x1, Value x2) {
  const Value n = ctx.modulus();
  if (n % 2 == 0) fail(Errc::precondition, "pair_witness: n must be odd");
  if (x1 < 1 || x1 >= n || x2 < 1 || x2 >= n) {
    fail(Errc::precondition, "pair_witness: terms outside [1, n-1]");
  }
  const Value d = std::gcd(n, x1);
  if (d <= 1 || std::gcd(n, x2) != d) {
    fail(Errc::precondition, "pair_witness: need gcd(n, x1) = gcd(n, x2) > 1");
  }
  if ((x1 + x2) % n == 0) fail(Errc::precondition, "pair_witness: x1 + x2 == 0 (mod n)");

  PairWitnessSteps steps;
  if (below_half(x1, n) && below_half(x2, n)) return steps;

  // After normalizing, x1 -> d and x2 -> n - k*d with k >= 2.
  steps.normalizer = smallest_normalizer(x1, n);
  const Value kd = n - mul_mod(steps.normalizer, x2, n);
  if (2 * kd > n) {
    steps.unit = steps.normalizer;
    return steps;
  }
  // Smallest s with 2^s * kd > n/4; then 2^s * d < n/4 as well.
  Value scaled = kd;
  Value power = 1;
  while (4 * scaled < n) {
    scaled *= 2;
    power *= 2;
  }
  steps.doubling = reduce(2 * power, n);
  steps.unit = mul_mod(steps.doubling, steps.normalizer, n);
  if (!below_half(mul_mod(steps.unit, x1, n), n) || !below_half(mul_mod(steps.unit, x2, n), n)) {
    fail(Errc::lemma_violation, "pair_witness: doubling construction failed for x1=" +
                                    std::to_string(x1) + " x2=" + std::to_string(x2) +
                                    " n=" + std::to_string(n));
  }
  return steps;
}

Value pair_witness_equal_gcd(const GroupContext& ctx, Value x1, Value x2) {
  return pair_witness_steps(ctx, x1, x2).unit;
}

AlphaDecomposition decompose_by_alpha(Value v, Value alpha) {
  if (alpha < 1 || v < 0) fail(Errc::precondition, "decompose_by_alpha: need alpha >= 1, v >= 0");
  return {v / alpha, v % alpha};
}

FamilySums orbit_family_sums(const ZsSequence& s, Value p, int sexp) {
  if (s.size() != 4 || !is_zero_sum(s)) {
    fail(Errc::precondition, "orbit_family_sums: need a zero-sum length-4 sequence");
  }
  const Value n = s.modulus();
  const auto fam = unit_family(n, p, sexp);
  FamilySums out;
  Value k_total = 0;
  for (Value t : fam.unit_ts) {
    const Value k = unit_sum(s, fam.member(t)) / n;
    out.entries.push_back({t, k});
    k_total += k;
  }
  out.total = n * k_total;
  return out;
}

const char* to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::SumN: return "SumN";
    case Criterion::AtMostOneSide: return "AtMostOneSide";
    case Criterion::Sum3N: return "Sum3N";
  }
  return "?";
}

bool CertifiedWitness::used_fallback() const noexcept {
  return std::find(trace.path.begin(), trace.path.end(), "fallback") != trace.path.end();
}

namespace {

std::array<Value, 4> transform(const ZsSequence& s, Value m) {
  const Value n = s.modulus();
  return {mul_mod(m, s[0], n), mul_mod(m, s[1], n), mul_mod(m, s[2], n), mul_mod(m, s[3], n)};
}

std::optional<Criterion> classify(const std::array<Value, 4>& t, Value n) {
  const Value total = t[0] + t[1] + t[2] + t[3];
  if (total == n) return Criterion::SumN;
  if (total == 3 * n) return Criterion::Sum3N;
  if (at_most_one_side(t, n)) return Criterion::AtMostOneSide;
  return std::nullopt;
}

Value largest_prime(Value f, const GroupContext& ctx) {
  Value best = 0;
  for (const auto& pp : ctx.factors()) {
    if (f % pp.prime == 0) best = pp.prime;
  }
  return best;
}

Value smallest_prime(Value f, const GroupContext& ctx) {
  for (const auto& pp : ctx.factors()) {
    if (f % pp.prime == 0) return pp.prime;
  }
  return 0;
}

// Accumulates the composed unit and the trace while a case runs.
class Builder {
 public:
  Builder(const ZsSequence& s, const GroupContext& ctx) : s_(s), ctx_(ctx), n_(s.modulus()) {}

  void label(std::string l) { trace_.path.push_back(std::move(l)); }
  void compose(Value u) {
    if (u == 1) return;
    trace_.multipliers.push_back(u);
    current_ = mul_mod(u, current_, n_);
  }
  Value current() const noexcept { return current_; }
  Value image(std::size_t i) const noexcept { return mul_mod(current_, s_[i], n_); }

  CertifiedWitness finish() const {
    const auto t = transform(s_, current_);
    const auto c = classify(t, n_);
    if (!c) {
      fail(Errc::certificate_validation,
           "structured case produced a unit meeting no criterion for " + to_string(s_));
    }
    CertifiedWitness w{UnitCertificate{s_, current_, *c, t, 1}, trace_};
    validate_certificate(w.certificate, w.trace);
    return w;
  }

  const ZsSequence& seq() const noexcept { return s_; }
  const GroupContext& ctx() const noexcept { return ctx_; }

 private:
  const ZsSequence& s_;
  const GroupContext& ctx_;
  Value n_;
  Value current_ = 1;
  WitnessTrace trace_;
};

std::size_t first_other(std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != a && i != b) return i;
  }
  return 0;
}

// Two terms sharing a prime: bring both below n/2 while fixing the lead,
// then pull a third term below n/2 with a family that fixes both.
void run_shared_prime_pair(Builder& b, const GcdProfile& prof, std::size_t lead,
                           std::size_t partner) {
  const auto& ctx = b.ctx();
  const auto& s = b.seq();
  const Value d = std::gcd(prof.f[lead], prof.f[partner]);
  if (prof.f[lead] == prof.f[partner]) {
    b.label("L2.4");
    const auto steps = pair_witness_steps(ctx, s[lead], s[partner]);
    b.compose(steps.normalizer);
    if (steps.doubling != 1) b.label("L2.4-doubling");
    b.compose(steps.doubling);
  } else {
    b.compose(smallest_normalizer(s[lead], ctx.modulus()));
    const Value p = smallest_prime(prof.f[lead] / d, ctx);
    const int sexp = valuation(prof.f[partner], p);
    b.label("C2.3");
    b.compose(cor_witness(ctx, b.image(partner), p, sexp));
  }
  b.label("L2.2-scale");
  const std::size_t third = first_other(lead, partner);
  b.compose(scale_witness_below(ctx, b.image(third), largest_prime(d, ctx)));
}

bool try_family(Builder& b, const WitnessFamily& fam, Value start) {
  const Value n = b.seq().modulus();
  for (Value t : fam.unit_ts) {
    const Value m = mul_mod(fam.member(t), start, n);
    if (classify(transform(b.seq(), m), n)) {
      b.compose(fam.member(t));
      return true;
    }
  }
  return false;
}

// Single nontrivial prime support per pair: the lead term is fixed by the
// (p, 0) family of its largest prime; search that family for a criterion.
void run_family_search(Builder& b, const GcdProfile& prof, bool several) {
  const auto& ctx = b.ctx();
  const auto& s = b.seq();
  const Value n = s.modulus();
  std::size_t lead = 0;
  if (several) {
    b.label("L2.8");
    Value best_prime = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (prof.f[i] == 1) continue;
      const Value q = largest_prime(prof.f[i], ctx);
      if (q > best_prime || (q == best_prime && prof.f[i] > prof.f[lead])) {
        best_prime = q;
        lead = i;
      }
    }
  } else {
    b.label("L2.9");
    lead = static_cast<std::size_t>(std::max_element(prof.f.begin(), prof.f.end()) - prof.f.begin());
  }
  const Value p = largest_prime(prof.f[lead], ctx);
  const bool square_free_at_p = (n / p) % p != 0;
  if (square_free_at_p && p == 7) b.label("L2.5");
  if (square_free_at_p && p == 5) b.label("L2.6");

  const Value normalizer = smallest_normalizer(s[lead], n);
  b.label("L2.2-family");
  if (try_family(b, unit_family(n, p, 0), normalizer)) {
    b.compose(normalizer);
    return;
  }
  // Widen to every prime-power family of n, from the normalized form and
  // from the sequence as given.
  for (Value start : {normalizer, Value{1}}) {
    for (const auto& [q, e] : ctx.factors()) {
      for (int sexp = 0; sexp < e; ++sexp) {
        if (try_family(b, unit_family(n, q, sexp), start)) {
          b.label("family-sweep");
          b.compose(start);
          return;
        }
      }
    }
  }
  b.label("fallback");
  for (Value u : units_stream(n)) {
    if (classify(transform(s, u), n)) {
      b.compose(u);
      return;
    }
  }
  fail(Errc::certificate_validation, "no unit meets either criterion for " + to_string(s));
}

std::optional<std::string> hypotheses_failure(const ZsSequence& s, const GroupContext& ctx) {
  if (ctx.modulus() != s.modulus()) return "context modulus differs from sequence modulus";
  if (s.size() != 4) return "sequence length must be 4";
  if (!ctx.coprime_to_six()) return "gcd(n, 6) != 1";
  if (ctx.is_prime()) return "n is prime";
  if (!is_minimal_zero_sum(s)) return "sequence is not a minimal zero-sum sequence";
  return std::nullopt;
}

Value lift_unit(Value u, Value small_n, Value n) {
  for (Value cand = u; cand < n; cand += small_n) {
    if (std::gcd(cand, n) == 1) return cand;
  }
  fail(Errc::certificate_validation, "unit lift failed");
}

CertifiedWitness certify_reduced(const ZsSequence& s, const GroupContext& ctx, Value g) {
  const Value n = s.modulus();
  const Value small = n / g;
  if (small < 5) {
    fail(Errc::hypotheses_not_met, "common divisor " + std::to_string(g) +
                                       " leaves a quotient group of order " + std::to_string(small));
  }
  const std::array<Value, 4> reduced_terms{s[0] / g, s[1] / g, s[2] / g, s[3] / g};
  const ZsSequence reduced(small, reduced_terms);
  const GroupContext small_ctx = ctx.quotient(g);
  const auto inner = certify_index_one(reduced, small_ctx);

  WitnessTrace trace;
  trace.path.push_back("gcd-reduce");
  trace.path.insert(trace.path.end(), inner.trace.path.begin(), inner.trace.path.end());
  Value m = 1;
  for (Value u : inner.trace.multipliers) {
    const Value lifted = lift_unit(u, small, n);
    trace.multipliers.push_back(lifted);
    m = mul_mod(lifted, m, n);
  }
  const auto t = transform(s, m);
  const auto c = classify(t, n);
  if (!c) fail(Errc::certificate_validation, "lifted unit meets no criterion for " + to_string(s));
  CertifiedWitness w{UnitCertificate{s, m, *c, t, 1}, std::move(trace)};
  validate_certificate(w.certificate, w.trace);
  return w;
}

}  // namespace

bool certify_hypotheses_hold(const ZsSequence& s, const GroupContext& ctx) {
  if (hypotheses_failure(s, ctx)) return false;
  const auto prof = gcd_profile(s, ctx);
  if (prof.overall_gcd == 1) return prof.max_f() > 1;
  const Value small = s.modulus() / prof.overall_gcd;
  if (small < 5) return false;
  const std::array<Value, 4> reduced_terms{s[0] / prof.overall_gcd, s[1] / prof.overall_gcd,
                                           s[2] / prof.overall_gcd, s[3] / prof.overall_gcd};
  return certify_hypotheses_hold(ZsSequence(small, reduced_terms), ctx.quotient(prof.overall_gcd));
}

CertifiedWitness certify_index_one(const ZsSequence& s, const GroupContext& ctx) {
  if (auto why = hypotheses_failure(s, ctx)) {
    fail(Errc::hypotheses_not_met, to_string(s) + ": " + *why);
  }
  const auto prof = gcd_profile(s, ctx);
  if (prof.overall_gcd > 1) return certify_reduced(s, ctx, prof.overall_gcd);
  if (prof.max_f() == 1) {
    fail(Errc::hypotheses_not_met, to_string(s) + ": every term is prime to n");
  }

  Builder b(s, ctx);
  const Value n = s.modulus();
  if (s.sum() == n) {
    b.label("SumN-immediate");
    return b.finish();
  }

  const auto lead = static_cast<std::size_t>(
      std::max_element(prof.f.begin(), prof.f.end()) - prof.f.begin());
  std::optional<std::size_t> partner;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j != lead && std::gcd(prof.f[lead], prof.f[j]) > 1) {
      partner = j;
      break;
    }
  }

  if (ctx.distinct_primes() == 2 && prof.all_nontrivial() && partner) {
    b.label(prof.f[lead] == prof.f[*partner] ? "T3.1-Case1" : "T3.1-Case2");
    run_shared_prime_pair(b, prof, lead, *partner);
    return b.finish();
  }
  if (partner) {
    b.label("T1.3-Case1");
    b.label("L2.7");
    run_shared_prime_pair(b, prof, lead, *partner);
    return b.finish();
  }
  b.label("T1.3-Case2");
  const auto nontrivial = std::count_if(prof.f.begin(), prof.f.end(), [](Value v) { return v > 1; });
  run_family_search(b, prof, nontrivial > 1);
  return b.finish();
}

CertifiedWitness certify_index_one(const ZsSequence& s) {
  return certify_index_one(s, GroupContext(s.modulus()));
}

void validate_certificate(const UnitCertificate& cert, const WitnessTrace& trace) {
  const auto& s = cert.sequence;
  const Value n = s.modulus();
  auto reject = [&](const std::string& why) {
    fail(Errc::certificate_validation, to_string(s) + " m=" + std::to_string(cert.m) + ": " + why);
  };
  if (s.size() != 4) reject("length is not 4");
  if (cert.m < 1 || cert.m >= n || std::gcd(cert.m, n) != 1) reject("m is not a unit");
  if (cert.transformed != transform(s, cert.m)) reject("transformed values do not match m");
  const auto& t = cert.transformed;
  const Value total = t[0] + t[1] + t[2] + t[3];
  switch (cert.criterion) {
    case Criterion::SumN:
      if (total != n) reject("criterion SumN but sum != n");
      break;
    case Criterion::Sum3N:
      if (total != 3 * n) reject("criterion Sum3N but sum != 3n");
      break;
    case Criterion::AtMostOneSide:
      if (!at_most_one_side(t, n)) reject("criterion AtMostOneSide does not hold");
      break;
  }
  Value product = 1;
  for (Value u : trace.multipliers) product = mul_mod(u, product, n);
  if (product != reduce(cert.m, n)) reject("trace multipliers do not compose to m");
  if (cert.index_claim != 1 || index_oracle(s).index_value != Ratio(1, 1)) {
    reject("index oracle does not confirm index 1");
  }
}

std::string format_certificate(const CertifiedWitness& w) {
  std::ostringstream os;
  os << to_string(w.certificate.sequence) << " m=" << w.certificate.m
     << " criterion=" << to_string(w.certificate.criterion) << " path=";
  for (std::size_t i = 0; i < w.trace.path.size(); ++i) os << (i ? "," : "") << w.trace.path[i];
  return os.str();
}

}  // namespace zsindex
