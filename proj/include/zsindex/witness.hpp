#pragma once

// Constructive unit witnesses. Every routine returns units of Z_n built from
// the progression 1 + t*(n / p^(s+1)), and certify_index_one composes them
// into a checked proof object for index 1.

#include <array>
#include <string>
#include <vector>

#include "zsindex/index.hpp"
#include "zsindex/sequence.hpp"

namespace zsindex {

/// The progression 1 + t*alpha, alpha = n / p^(s+1), t in [0, p-1],
/// restricted to units of Z_n.
struct WitnessFamily {
  Value n = 0;
  Value p = 0;
  int s = 0;
  Value alpha = 0;
  std::vector<Value> unit_ts;  // ascending t with 1 + t*alpha in U(n)

  Value member(Value t) const noexcept { return reduce(1 + t * alpha, n); }
  Value excluded_count() const noexcept { return p - static_cast<Value>(unit_ts.size()); }
};

WitnessFamily unit_family(Value n, Value p, int s);

struct ShiftWitnesses {
  Value below_t = 0;  // smallest t with |v + t*alpha|_n < n/2
  Value above_t = 0;  // smallest t with |v + t*alpha|_n > n/2
};

/// Both sides of n/2 are reachable by shifting v along the (p, 0) family.
/// Requires gcd(n, 6) = 1, n composite, p | n prime, 1 <= v < n.
ShiftWitnesses shift_witnesses(const GroupContext& ctx, Value v, Value p);

/// y = 1 + t*(n/p) in U(n), smallest t, with |y*v|_n < n/2. Requires gcd(v, p) = 1.
Value scale_witness_below(const GroupContext& ctx, Value v, Value p);

/// y = 1 + t*n/p^(s+1) in U(n), smallest t, with |y*beta|_n < n/2.
/// Requires p^s || beta, p^(s+1) | n, 1 <= beta < n.
Value cor_witness(const GroupContext& ctx, Value beta, Value p, int s);

struct PairWitnessSteps {
  Value normalizer = 1;  // sends x1 to d = gcd(n, x1)
  Value doubling = 1;    // 2^(s+1), or 1 when not needed
  Value unit = 1;        // doubling * normalizer
};

/// Unit u with |u*x1|_n < n/2 and |u*x2|_n < n/2, for gcd(n,x1) = gcd(n,x2) = d > 1,
/// x1 + x2 != 0 (mod n), n odd.
PairWitnessSteps pair_witness_steps(const GroupContext& ctx, Value x1, Value x2);
Value pair_witness_equal_gcd(const GroupContext& ctx, Value x1, Value x2);

struct AlphaDecomposition {
  Value quotient = 0;
  Value remainder = 0;  // in [0, alpha)

  friend bool operator==(const AlphaDecomposition&, const AlphaDecomposition&) = default;
};

AlphaDecomposition decompose_by_alpha(Value v, Value alpha);

struct FamilySums {
  struct Entry {
    Value t = 0;
    Value k = 0;  // sum_i |(1 + t*alpha) x_i|_n / n
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  Value total = 0;  // n * sum of k over entries
};

/// Per-member index sums over a witness family, and their total.
FamilySums orbit_family_sums(const ZsSequence& s, Value p, int sexp);

enum class Criterion { SumN, AtMostOneSide, Sum3N };

const char* to_string(Criterion c) noexcept;

struct UnitCertificate {
  ZsSequence sequence;
  Value m = 1;
  Criterion criterion = Criterion::SumN;
  std::array<Value, 4> transformed{};
  Value index_claim = 1;
};

struct WitnessTrace {
  std::vector<std::string> path;
  std::vector<Value> multipliers;  // composed in order; product == certificate m
};

struct CertifiedWitness {
  UnitCertificate certificate;
  WitnessTrace trace;

  bool used_fallback() const noexcept;
};

/// Structured search for a unit certifying index 1. Hypotheses: |S| = 4,
/// S minimal zero-sum, gcd(n, 6) = 1, n composite, and either gcd(n, x_1..x_4) = 1
/// with some gcd(n, x_i) > 1, or a common divisor g whose quotient problem over
/// Z_{n/g} meets those hypotheses. Throws hypotheses-not-met otherwise.
CertifiedWitness certify_index_one(const ZsSequence& s, const GroupContext& ctx);
CertifiedWitness certify_index_one(const ZsSequence& s);

/// True when certify_index_one's hypotheses hold for s.
bool certify_hypotheses_hold(const ZsSequence& s, const GroupContext& ctx);

/// Throws certificate-validation-failure unless the certificate is internally
/// consistent and the index oracle confirms index 1.
void validate_certificate(const UnitCertificate& cert, const WitnessTrace& trace);

/// `n:x1,x2,x3,x4 m=<unit> criterion=<...> path=<labels>`
std::string format_certificate(const CertifiedWitness& w);

}  // namespace zsindex
