// zsindex: index computation, witness certificates, enumeration, verification
// campaigns and counterexample scans over cyclic groups Z_n.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <omp.h>

#include "zsindex/campaign.hpp"
#include "zsindex/report.hpp"
#include "zsindex/witness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

using namespace zsindex;

int run_index(const std::string& text) {
  const auto s = parse_sequence(text);
  const auto r = index_oracle(s);
  std::cout << to_string(s) << " index=" << to_string(r.index_value)
            << " witness=" << r.witness_unit << " sum=" << r.numerator << '\n';
  return kExitPass;
}

int run_witness(const std::string& text) {
  const auto s = parse_sequence(text);
  std::cout << format_certificate(certify_index_one(s)) << '\n';
  return kExitPass;
}

int run_enumerate(Value n, bool orbits) {
  for_each_minimal4(n, [orbits](const ZsSequence& s) {
    if (!orbits || is_canonical_rep(s)) std::cout << to_string(s) << '\n';
  });
  return kExitPass;
}

struct VerifyArgs {
  Value from = 0;
  Value to = 0;
  std::string filter = "all";
  std::string mode = "exhaustive";
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
  bool no_orbits = false;
  std::string report_path;
  std::string summary_path;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.filter = parse_filter(a.filter);
  opt.mode = parse_mode(a.mode);
  opt.orbits = !a.no_orbits;
  opt.samples = a.samples;
  opt.jobs = a.jobs;
  if (opt.mode == Mode::sampled) {
    if (a.samples == 0 || !a.seed) throw Error(Errc::usage, "sampled mode needs --samples and --seed");
    opt.seed = *a.seed;
  }
  const auto report = campaign(a.from, a.to, opt);
  write_jsonl(std::cout, report);
  if (!a.report_path.empty()) {
    std::ofstream out(a.report_path);
    if (!out) throw Error(Errc::usage, "cannot write " + a.report_path);
    write_jsonl(out, report);
  }
  if (!a.summary_path.empty()) {
    std::ofstream out(a.summary_path);
    if (!out) throw Error(Errc::usage, "cannot write " + a.summary_path);
    write_summary_csv(out, report);
  }
  return report.passed ? kExitPass : kExitFail;
}

int run_scan(Value from, Value to, bool first_only, int jobs) {
  for (const auto& f : counterexample_scan(from, to, first_only, jobs)) {
    std::cout << to_string(f.sequence) << " index=" << to_string(f.index) << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of zero-sum sequences over cyclic groups"};
  app.require_subcommand(1);

  std::string seq_text;
  auto* index_cmd = app.add_subcommand("index", "Exact index and smallest witness unit");
  index_cmd->add_option("sequence", seq_text, "n:x1,x2,...")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Certificate for index 1 via structured search");
  witness_cmd->add_option("sequence", seq_text, "n:x1,x2,x3,x4")->required();

  Value enum_n = 0;
  bool enum_orbits = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Minimal zero-sum length-4 sequences of Z_n");
  enum_cmd->add_option("n", enum_n)->required()->check(CLI::Range(Value{5}, Value{1} << 40));
  enum_cmd->add_flag("--orbits", enum_orbits, "Only canonical orbit representatives");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Verification campaign over a range of n");
  verify_cmd->add_option("--from", va.from)->required();
  verify_cmd->add_option("--to", va.to)->required();
  verify_cmd->add_option("--filter", va.filter)
      ->check(CLI::IsMember({"theorem13", "theorem31", "all", "conjecture"}));
  verify_cmd->add_option("--mode", va.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--samples", va.samples);
  verify_cmd->add_option("--seed", va.seed);
  verify_cmd->add_option("--jobs", va.jobs)->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--no-orbits", va.no_orbits, "Check every sequence, not one per orbit");
  verify_cmd->add_option("--report", va.report_path, "JSON-lines record file");
  verify_cmd->add_option("--summary", va.summary_path, "CSV summary file");

  Value scan_from = 0, scan_to = 0;
  bool first_only = false;
  int scan_jobs = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Index >= 2 sequences for gcd(n, 6) != 1");
  scan_cmd->add_option("--from", scan_from)->required();
  scan_cmd->add_option("--to", scan_to)->required();
  scan_cmd->add_flag("--first-only", first_only);
  scan_cmd->add_option("--jobs", scan_jobs)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*index_cmd) return run_index(seq_text);
    if (*witness_cmd) return run_witness(seq_text);
    if (*enum_cmd) return run_enumerate(enum_n, enum_orbits);
    if (*verify_cmd) return run_verify(va);
    if (*scan_cmd) return run_scan(scan_from, scan_to, first_only, scan_jobs);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
