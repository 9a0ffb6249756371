#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "zsindex/campaign.hpp"

namespace zsindex {

nlohmann::json to_json(const VerificationRecord& r);
nlohmann::json to_json(const CampaignReport& r);

/// One JSON object per record, then the campaign summary object.
void write_jsonl(std::ostream& os, const CampaignReport& r);

inline constexpr const char* kSummaryHeader = "n,checked,violations,fallbacks,elapsed";
std::string summary_row(const VerificationRecord& r);
void write_summary_csv(std::ostream& os, const CampaignReport& r);

}  // namespace zsindex
