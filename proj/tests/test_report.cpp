#include <gtest/gtest.h>

#include <sstream>

#include "zsindex/report.hpp"

using namespace zsindex;

namespace {

VerificationRecord sample_record() {
  VerificationRecord r;
  r.n = 8;
  r.mode = Mode::exhaustive;
  r.filter = Filter::all;
  r.orbits = true;
  r.sequences_checked = 10;
  r.orbits_checked = 4;
  r.violations.push_back({ZsSequence(8, {1, 4, 5, 6}), Ratio(2, 1)});
  r.max_index_seen = 2;
  r.elapsed_seconds = 0.25;
  return r;
}

}  // namespace

TEST(Report, RecordJson) {
  const auto j = to_json(sample_record());
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["mode"], "exhaustive");
  EXPECT_EQ(j["filter"], "all");
  EXPECT_EQ(j["orbits"], true);
  EXPECT_EQ(j["sequences_checked"], 10);
  EXPECT_EQ(j["orbits_checked"], 4);
  ASSERT_EQ(j["violations"].size(), 1u);
  EXPECT_EQ(j["violations"][0]["sequence"], "8:1,4,5,6");
  EXPECT_EQ(j["violations"][0]["index"], 2);
  EXPECT_EQ(j["certified"], 0);
  EXPECT_EQ(j["fallback_uses"], 0);
  EXPECT_EQ(j["certify_failures"], 0);
  EXPECT_EQ(j["max_index_seen"], 2);
  EXPECT_DOUBLE_EQ(j["elapsed"].get<double>(), 0.25);
}

TEST(Report, JsonlEndsWithSummary) {
  CampaignReport rep;
  rep.records.push_back(sample_record());
  rep.seed = 9;
  rep.totals = {1, 10, 1, 0, 0};
  rep.passed = false;
  std::ostringstream os;
  write_jsonl(os, rep);
  std::istringstream in(os.str());
  std::string line;
  std::vector<nlohmann::json> lines;
  while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["n"], 8);
  const auto& s = lines[1];
  EXPECT_EQ(s["verdict"], "fail");
  EXPECT_EQ(s["seed"], 9);
  EXPECT_EQ(s["moduli"], 1);
  EXPECT_EQ(s["sequences_checked"], 10);
  EXPECT_EQ(s["violations"], 1);
  EXPECT_EQ(s["fallback_uses"], 0);
  EXPECT_EQ(s["certify_failures"], 0);
}

TEST(Report, SummaryCsv) {
  CampaignReport rep;
  rep.records.push_back(sample_record());
  std::ostringstream os;
  write_summary_csv(os, rep);
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, kSummaryHeader);
  EXPECT_EQ(row.rfind("8,10,1,0,", 0), 0u) << row;
  EXPECT_EQ(summary_row(sample_record()), row);
}
