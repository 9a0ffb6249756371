#include "zsindex/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace zsindex {

ZsSequence::ZsSequence(Value n, std::span<const Value> terms) : n_(n), size_(terms.size()) {
  if (n < 2) throw Error(Errc::invalid_modulus, "sequence modulus must be >= 2");
  if (terms.empty() || terms.size() > kMaxLength) {
    throw Error(Errc::invalid_sequence,
                "sequence length must be in [1, 16], got " + std::to_string(terms.size()));
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (terms[i] < 1 || terms[i] > n - 1) {
      throw Error(Errc::invalid_sequence, "term " + std::to_string(terms[i]) +
                                              " outside [1, " + std::to_string(n - 1) + "]");
    }
    terms_[i] = terms[i];
  }
  std::sort(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(size_));
}

ZsSequence::ZsSequence(Unchecked, Value n, std::span<const Value> sorted_terms) noexcept
    : n_(n), size_(sorted_terms.size()) {
  std::copy(sorted_terms.begin(), sorted_terms.end(), terms_.begin());
}

Value ZsSequence::sum() const noexcept {
  Value total = 0;
  for (Value x : terms()) total += x;
  return total;
}

std::strong_ordering operator<=>(const ZsSequence& a, const ZsSequence& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.terms().begin(), a.terms().end(),
                                                b.terms().begin(), b.terms().end());
}

ZsSequence make_sorted4_unchecked(Value n, Value a, Value b, Value c, Value d) noexcept {
  const std::array<Value, 4> t{a, b, c, d};
  return ZsSequence(ZsSequence::Unchecked{}, n, t);
}

Value GcdProfile::max_f() const noexcept {
  return f.empty() ? 0 : *std::max_element(f.begin(), f.end());
}

bool GcdProfile::meets_main_hypothesis() const noexcept {
  return overall_gcd == 1 && max_f() > 1;
}

bool GcdProfile::all_nontrivial() const noexcept {
  return std::all_of(f.begin(), f.end(), [](Value v) { return v > 1; });
}

bool is_zero_sum(const ZsSequence& s) noexcept { return s.sum() % s.modulus() == 0; }

bool is_minimal_zero_sum(const ZsSequence& s) noexcept {
  if (!is_zero_sum(s)) return false;
  const Value n = s.modulus();
  const auto k = static_cast<unsigned>(s.size());
  const unsigned full = (1u << k) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    Value sub = 0;
    for (unsigned i = 0; i < k; ++i) {
      if (mask & (1u << i)) sub += s[i];
    }
    if (sub % n == 0) return false;
  }
  return true;
}

GcdProfile gcd_profile(const ZsSequence& s, const GroupContext& ctx) {
  GcdProfile p;
  const Value n = s.modulus();
  for (Value x : s.terms()) p.f.push_back(std::gcd(n, x));
  p.overall_gcd = 0;
  for (Value v : p.f) p.overall_gcd = std::gcd(p.overall_gcd, v);
  for (std::size_t i = 0; i < p.f.size(); ++i) {
    for (std::size_t j = i + 1; j < p.f.size(); ++j) {
      p.pair_gcds.push_back({i, j, std::gcd(p.f[i], p.f[j])});
    }
  }
  for (Value v : p.f) {
    std::vector<PrimePower> support;
    for (const auto& [prime, e] : ctx.factors()) {
      if (int k = valuation(v, prime); k > 0) support.push_back({prime, k});
    }
    p.prime_support.push_back(std::move(support));
  }
  return p;
}

GcdProfile gcd_profile(const ZsSequence& s) { return gcd_profile(s, GroupContext(s.modulus())); }

ZsSequence scale_unchecked(const ZsSequence& s, Value u) noexcept {
  std::array<Value, kMaxLength> t{};
  const Value n = s.modulus();
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = mul_mod(u, s[i], n);
  std::sort(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(s.size()));
  return ZsSequence(ZsSequence::Unchecked{}, n, std::span<const Value>(t.data(), s.size()));
}

ZsSequence scale(const ZsSequence& s, Value u) {
  if (!is_unit(u, s.modulus())) {
    throw Error(Errc::not_a_unit,
                std::to_string(u) + " is not a unit modulo " + std::to_string(s.modulus()));
  }
  return scale_unchecked(s, reduce(u, s.modulus()));
}

void for_each_minimal4_with_prefix(Value n, Value x1, Value x2,
                                   const std::function<void(const ZsSequence&)>& fn) {
  for (Value x3 = x2; x3 < n; ++x3) {
    const Value x4 = reduce(-(x1 + x2 + x3), n);
    if (x4 >= n || x4 < x3) continue;
    const ZsSequence s = make_sorted4_unchecked(n, x1, x2, x3, x4);
    if (is_minimal_zero_sum(s)) fn(s);
  }
}

void for_each_minimal4(Value n, const std::function<void(const ZsSequence&)>& fn) {
  if (n < 5) throw Error(Errc::invalid_modulus, "enumerate_minimal4: n must be >= 5");
  for (Value x1 = 1; x1 < n; ++x1) {
    for (Value x2 = x1; x2 < n; ++x2) for_each_minimal4_with_prefix(n, x1, x2, fn);
  }
}

std::vector<ZsSequence> enumerate_minimal4(Value n) {
  std::vector<ZsSequence> out;
  for_each_minimal4(n, [&out](const ZsSequence& s) { out.push_back(s); });
  return out;
}

namespace {

Value min_term_gcd(const ZsSequence& s) {
  Value m = s.modulus();
  for (Value x : s.terms()) m = std::min(m, std::gcd(x, s.modulus()));
  return m;
}

// Every unit that can realize the orbit minimum sends some term x with
// gcd(n, x) = m0 onto m0, the smallest attainable first element.
template <typename Fn>
void for_each_minimizing_candidate(const ZsSequence& s, Fn&& fn) {
  const Value n = s.modulus();
  const Value m0 = min_term_gcd(s);
  Value previous = 0;
  for (Value x : s.terms()) {
    if (x == previous) continue;
    previous = x;
    if (std::gcd(x, n) != m0) continue;
    for (Value u : units_mapping(x, m0, n)) {
      if (!fn(u)) return;
    }
  }
}

}  // namespace

ZsSequence canonical_rep(const ZsSequence& s) {
  ZsSequence best = s;
  bool first = true;
  for_each_minimizing_candidate(s, [&](Value u) {
    ZsSequence t = scale_unchecked(s, u);
    if (first || t < best) best = t;
    first = false;
    return true;
  });
  return best;
}

bool is_canonical_rep(const ZsSequence& s) {
  if (s[0] != min_term_gcd(s)) return false;
  bool canonical = true;
  for_each_minimizing_candidate(s, [&](Value u) {
    if (scale_unchecked(s, u) < s) canonical = false;
    return canonical;
  });
  return canonical;
}

Value stabilizer_size(const ZsSequence& s) {
  const Value n = s.modulus();
  const Value f0 = std::gcd(s[0], n);
  Value count = 0;
  Value previous = 0;
  for (Value x : s.terms()) {
    if (x == previous) continue;
    previous = x;
    if (std::gcd(x, n) != f0) continue;
    for (Value u : units_mapping(s[0], x, n)) {
      if (scale_unchecked(s, u) == s) ++count;
    }
  }
  return count;
}

Value orbit_size(const ZsSequence& s) { return euler_phi(s.modulus()) / stabilizer_size(s); }

std::string to_string(const ZsSequence& s) {
  std::ostringstream os;
  os << s.modulus() << ':';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

namespace {

Value parse_number(std::string_view text, std::string_view whole) {
  Value v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw Error(Errc::invalid_sequence,
                "malformed sequence text '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

ZsSequence parse_sequence(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::invalid_sequence, "expected n:x1,x2,... got '" + std::string(text) + "'");
  }
  const Value n = parse_number(text.substr(0, colon), text);
  std::vector<Value> terms;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    terms.push_back(parse_number(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (terms.size() > kMaxLength) {
    throw Error(Errc::invalid_sequence, "sequence longer than 16 terms");
  }
  return ZsSequence(n, terms);
}

}  // namespace zsindex
