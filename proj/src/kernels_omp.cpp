// OpenMP kernels. Workers own disjoint (x1, x2) prefix blocks or sample
// ranges; per-thread tallies merge under a critical section and the record
// is put in canonical order afterwards.

#include <chrono>

#include <omp.h>

#include "campaign_detail.hpp"

namespace zsindex {

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

VerificationRecord verify_n(Value n, const VerifyOptions& options) {
  detail::validate_verify_request(n, options);
  const auto start = std::chrono::steady_clock::now();
  const GroupContext ctx(n);
  const int jobs = resolve_jobs(options.jobs);
  detail::Tally tally;

  if (options.mode == Mode::sampled) {
    const auto samples = detail::draw_samples(n, options);
    const auto count = static_cast<std::int64_t>(samples.size());
#pragma omp parallel num_threads(jobs)
    {
      detail::Tally local;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < count; ++i) {
        detail::check_sequence(samples[static_cast<std::size_t>(i)], ctx, options, false, local);
      }
#pragma omp critical(zsindex_verify_merge)
      tally.merge(std::move(local));
    }
  } else {
    const auto blocks = detail::prefix_blocks(n, options.orbits);
    const auto count = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel num_threads(jobs)
    {
      detail::Tally local;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t b = 0; b < count; ++b) {
        const auto [x1, x2] = blocks[static_cast<std::size_t>(b)];
        for_each_minimal4_with_prefix(n, x1, x2, [&](const ZsSequence& s) {
          detail::check_sequence(s, ctx, options, options.orbits, local);
        });
      }
#pragma omp critical(zsindex_verify_merge)
      tally.merge(std::move(local));
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return detail::finish_record(n, options, std::move(tally), elapsed.count());
}

std::vector<Finding> counterexample_scan(Value from, Value to, bool first_only, int jobs) {
  if (from > to) throw Error(Errc::usage, "scan: empty range");
  jobs = resolve_jobs(jobs);
  std::vector<Finding> out;
  for (Value n = from; n <= to; ++n) {
    if (detail::scan_skips(n)) continue;
    std::vector<std::vector<Finding>> per_x1(static_cast<std::size_t>(n));
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
    for (Value x1 = 1; x1 < n; ++x1) {
      per_x1[static_cast<std::size_t>(x1)] = detail::scan_findings(n, x1);
    }
    for (auto& found : per_x1) {
      if (found.empty()) continue;
      if (first_only) {
        out.push_back(found.front());
        break;
      }
      out.insert(out.end(), found.begin(), found.end());
    }
  }
  return out;
}

}  // namespace zsindex
