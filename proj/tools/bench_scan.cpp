// Throughput comparison: OpenMP fast scan vs the serial exact-arithmetic
// reference, verifying that both produce the same report.
#include <cstdio>
#include <cstdlib>

#include "linelab/scan.hpp"

using namespace linelab;

namespace {

bool same_report(const ScanReport& a, const ScanReport& b) {
  return a.n == b.n && a.instances_scanned == b.instances_scanned &&
         a.dbe_violations == b.dbe_violations && a.mighty_violations == b.mighty_violations &&
         a.mighty_adjusted_violations == b.mighty_adjusted_violations &&
         a.min_lambda_no_universal == b.min_lambda_no_universal &&
         a.minimizers == b.minimizers && a.minimizer_count == b.minimizer_count &&
         a.dominant_count == b.dominant_count;
}

void row(const char* label, const ScanReport& r) {
  double per_s = r.runtime_seconds > 0 ? r.instances_scanned / r.runtime_seconds : 0;
  std::printf("  %-10s %8lld graphs  %8.3f s  %10.0f graphs/s\n", label, r.instances_scanned,
              r.runtime_seconds, per_s);
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 7;
  if (max_n < 2 || max_n > 10) {
    std::fprintf(stderr, "usage: bench_scan [max_n in 2..10]\n");
    return 1;
  }
  ScanChecks checks;  // dbe + mighty + min-lines
  bool all_same = true;
  for (int n = 4; n <= max_n; ++n) {
    std::printf("n=%d\n", n);
    ScanReport fast = scan_internal(n, checks, 0, "", max_n);
    row("parallel", fast);
    ScanReport ref = scan_reference(n, checks, max_n);
    row("reference", ref);
    if (!same_report(fast, ref)) {
      std::printf("  REPORTS DIFFER\n");
      all_same = false;
    }
  }
  std::printf(all_same ? "all reports agree\n" : "FAILURE: reports differ\n");
  return all_same ? 0 : 1;
}
