#include "zsindex/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace zsindex {

namespace {

nlohmann::json index_json(const Ratio& r) {
  if (r.is_integer()) return r.numerator();
  return to_string(r);
}

}  // namespace

nlohmann::json to_json(const VerificationRecord& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"sequence", to_string(v.sequence)}, {"index", index_json(v.index)}});
  }
  return {
      {"n", r.n},
      {"mode", to_string(r.mode)},
      {"filter", to_string(r.filter)},
      {"orbits", r.orbits},
      {"sequences_checked", r.sequences_checked},
      {"orbits_checked", r.orbits_checked},
      {"violations", violations},
      {"certified", r.certified},
      {"fallback_uses", r.fallback_uses},
      {"certify_failures", r.certify_failures},
      {"max_index_seen", r.max_index_seen},
      {"elapsed", r.elapsed_seconds},
  };
}

nlohmann::json to_json(const CampaignReport& r) {
  return {
      {"verdict", r.passed ? "pass" : "fail"},
      {"seed", r.seed},
      {"moduli", r.totals.moduli},
      {"sequences_checked", r.totals.sequences_checked},
      {"violations", r.totals.violations},
      {"fallback_uses", r.totals.fallback_uses},
      {"certify_failures", r.totals.certify_failures},
  };
}

void write_jsonl(std::ostream& os, const CampaignReport& r) {
  for (const auto& rec : r.records) os << to_json(rec).dump() << '\n';
  os << to_json(r).dump() << '\n';
}

std::string summary_row(const VerificationRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.sequences_checked << ',' << r.violations.size() << ',' << r.fallback_uses
     << ',' << std::fixed << std::setprecision(6) << r.elapsed_seconds;
  return os.str();
}

void write_summary_csv(std::ostream& os, const CampaignReport& r) {
  os << kSummaryHeader << '\n';
  for (const auto& rec : r.records) os << summary_row(rec) << '\n';
}

}  // namespace zsindex
