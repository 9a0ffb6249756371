// Single-threaded reference kernels.

#include <chrono>

#include "campaign_detail.hpp"

namespace zsindex {

VerificationRecord verify_n_serial(Value n, const VerifyOptions& options) {
  detail::validate_verify_request(n, options);
  const auto start = std::chrono::steady_clock::now();
  const GroupContext ctx(n);
  detail::Tally tally;
  if (options.mode == Mode::sampled) {
    for (const auto& s : detail::draw_samples(n, options)) {
      detail::check_sequence(s, ctx, options, false, tally);
    }
  } else {
    for (const auto& [x1, x2] : detail::prefix_blocks(n, options.orbits)) {
      for_each_minimal4_with_prefix(n, x1, x2, [&](const ZsSequence& s) {
        detail::check_sequence(s, ctx, options, options.orbits, tally);
      });
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return detail::finish_record(n, options, std::move(tally), elapsed.count());
}

std::vector<Finding> counterexample_scan_serial(Value from, Value to, bool first_only) {
  if (from > to) throw Error(Errc::usage, "scan: empty range");
  std::vector<Finding> out;
  for (Value n = from; n <= to; ++n) {
    if (detail::scan_skips(n)) continue;
    for (Value x1 = 1; x1 < n; ++x1) {
      auto found = detail::scan_findings(n, x1);
      if (first_only && !found.empty()) {
        out.push_back(found.front());
        break;
      }
      out.insert(out.end(), found.begin(), found.end());
    }
  }
  return out;
}

}  // namespace zsindex
