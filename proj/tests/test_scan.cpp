#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "linelab/enumerate.hpp"
#include "linelab/graph.hpp"
#include "linelab/graph6.hpp"
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

ScanChecks all_checks() {
  ScanChecks c;
  c.dominant = true;
  return c;
}

std::string graph6_stream(int n) {
  std::ostringstream out;
  enumerate_connected(n, [&](const Graph& g) { out << graph6_write(g) << "\n"; });
  return out.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("clean scans at every small size") {
  const long long counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    ScanReport r = scan_internal(n, all_checks());
    CHECK(r.n == n);
    CHECK(r.instances_scanned == counts[n]);
    CHECK(r.dbe_violations.empty());
    CHECK(r.mighty_violations.empty());
    CHECK(r.mighty_adjusted_violations.empty());
    CHECK_FALSE(scan_found_violations(r));
    if (n <= 2) CHECK(r.min_lambda_no_universal == -1);
  }
}

TEST_CASE("parallel, serial, and reference paths agree bit for bit") {
  for (int n : {5, 6, 7}) {
    ScanReport serial = scan_internal(n, all_checks(), 1);
    ScanReport parallel = scan_internal(n, all_checks(), 3);
    ScanReport reference = scan_reference(n, all_checks());
    CHECK(same_report(serial, parallel));
    CHECK(same_report(serial, reference));
  }
}

TEST_CASE("block size never changes the report") {
  ScanReport base = scan_internal(7, all_checks(), 2);
  for (int bs : {1, 7, 16, 100000}) {
    ScanReport r = scan_internal(7, all_checks(), 2, "", 8, bs);
    CHECK(same_report(base, r));
  }
}

TEST_CASE("interrupted scans resume from the checkpoint without double counting") {
  ScanReport truth = scan_internal(7, all_checks(), 2);
  for (long long stop_after : {1LL, 3LL, 7LL}) {
    TempFile ck("scan_ck_resume.json");
    ScanReport prefix = scan_internal(7, all_checks(), 2, ck.path, 8, 8, stop_after);
    CHECK(prefix.instances_scanned < truth.instances_scanned);
    ScanReport resumed = scan_internal(7, all_checks(), 2, ck.path, 8, 8);
    CHECK(same_report(truth, resumed));
    // resuming a finished checkpoint just reports the stored totals
    ScanReport again = scan_internal(7, all_checks(), 2, ck.path, 8, 8);
    CHECK(same_report(truth, again));
  }
}

TEST_CASE("resume across job counts stays deterministic") {
  ScanReport truth = scan_internal(6, all_checks(), 1);
  TempFile ck("scan_ck_jobs.json");
  scan_internal(6, all_checks(), 4, ck.path, 8, 4, 2);
  ScanReport resumed = scan_internal(6, all_checks(), 1, ck.path, 8, 4);
  CHECK(same_report(truth, resumed));
}

TEST_CASE("checkpoints from a different run shape are rejected") {
  TempFile ck("scan_ck_mismatch.json");
  scan_internal(6, all_checks(), 1, ck.path, 8, 8, 1);
  // different n
  CHECK_THROWS_AS(scan_internal(7, all_checks(), 1, ck.path, 8, 8), std::runtime_error);
  // different block size
  CHECK_THROWS_AS(scan_internal(6, all_checks(), 1, ck.path, 8, 16), std::runtime_error);
  // different check selection
  ScanChecks fewer;
  fewer.dominant = false;
  fewer.mighty = false;
  CHECK_THROWS_AS(scan_internal(6, fewer, 1, ck.path, 8, 8), std::runtime_error);
  // unreadable content
  {
    std::ofstream out(ck.path);
    out << "not json";
  }
  CHECK_THROWS_AS(scan_internal(6, all_checks(), 1, ck.path, 8, 8), std::runtime_error);
}

TEST_CASE("stream scan equals the internal scan on the same graphs") {
  std::string data = graph6_stream(6);
  std::istringstream in(data);
  ScanReport stream = scan_stream(in, all_checks(), 2);
  ScanReport internal = scan_internal(6, all_checks(), 2);
  CHECK(same_report(stream, internal));

  std::istringstream in_serial(data);
  CHECK(same_report(scan_stream(in_serial, all_checks(), 1), stream));
}

TEST_CASE("stream scan skips disconnected records and enforces one size") {
  Graph disco(4);
  disco.add_edge(0, 1);
  disco.add_edge(2, 3);
  std::string mixed = graph6_write(complete_graph(4)) + "\n" + graph6_write(disco) + "\n" +
                      graph6_write(path_graph(4)) + "\n";
  std::istringstream in(mixed);
  ScanReport r = scan_stream(in, all_checks());
  CHECK(r.instances_scanned == 2);  // the disconnected record is not counted

  std::istringstream sizes("C~\nDUW\n");
  CHECK_THROWS_AS(scan_stream(sizes, all_checks()), std::runtime_error);

  std::istringstream bad("C~\n*junk*\n");
  try {
    scan_stream(bad, all_checks());
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::istringstream empty("");
  CHECK_THROWS_AS(scan_stream(empty, all_checks()), std::runtime_error);
}

TEST_CASE("violation flag trips on any nonempty violation list") {
  ScanReport r;
  CHECK_FALSE(scan_found_violations(r));
  r.dbe_violations.push_back("C~");
  CHECK(scan_found_violations(r));
  ScanReport s;
  s.mighty_violations.push_back("C~");
  CHECK(scan_found_violations(s));
  ScanReport t;
  t.mighty_adjusted_violations.push_back("C~");
  CHECK(scan_found_violations(t));
}

TEST_CASE("disabled checks leave their fields untouched") {
  ScanChecks none;
  none.dbe = none.mighty = none.min_lines = false;
  ScanReport r = scan_internal(6, none);
  CHECK(r.instances_scanned == 112);
  CHECK(r.min_lambda_no_universal == -1);
  CHECK(r.minimizers.empty());
  CHECK(r.minimizer_count == 0);
  CHECK(r.dominant_count == 0);
}

TEST_CASE("minimizer lists are sorted, capped, and counted in full") {
  ScanReport r = scan_internal(8, all_checks(), 2);
  CHECK(r.min_lambda_no_universal == 12);
  CHECK(r.minimizer_count == 2);
  REQUIRE(r.minimizers.size() == 2);
  CHECK(std::is_sorted(r.minimizers.begin(), r.minimizers.end()));
  // the two minimizers are the multipartite graphs K_{1,3,4} and K_{1,1,3,3}
  for (const std::string& rec : r.minimizers) {
    Graph g = graph6_parse(rec);
    CHECK(is_complete_multipartite(g));
  }
}

TEST_CASE("complete multipartite minimum: values, optima, bounds") {
  CHECK_THROWS(multipartite_f(2));

  MultipartiteF f3 = multipartite_f(3);
  CHECK(f3.value == 3);
  CHECK(f3.optima == std::vector<std::vector<int>>{{1, 1, 1}});

  MultipartiteF f4 = multipartite_f(4);
  CHECK(f4.value == 6);
  CHECK(f4.optima == std::vector<std::vector<int>>{{1, 1, 1, 1}});

  MultipartiteF f7 = multipartite_f(7);
  CHECK(f7.value == 9);
  CHECK(f7.optima == std::vector<std::vector<int>>{{1, 3, 3}});

  MultipartiteF f8 = multipartite_f(8);
  CHECK(f8.value == 12);
  CHECK(f8.optima == std::vector<std::vector<int>>{{1, 1, 3, 3}, {1, 3, 4}});

  MultipartiteF f9 = multipartite_f(9);
  CHECK(f9.value == 12);
  CHECK(f9.optima == std::vector<std::vector<int>>{{3, 3, 3}});

  MultipartiteF f10 = multipartite_f(10);
  CHECK(f10.value == 15);
  CHECK(f10.optima == std::vector<std::vector<int>>{{1, 3, 3, 3}, {3, 3, 4}});

  for (int n = 3; n <= 200; ++n) {
    MultipartiteF f = multipartite_f(n);
    CHECK(f.value >= n);
    long long s = f.value + n;
    CHECK(32 * s * s * s >= 27LL * n * n * n * n);
    REQUIRE(!f.optima.empty());
    for (const auto& parts : f.optima) {
      CHECK(std::is_sorted(parts.begin(), parts.end()));
      long long total = 0, value = 0;
      long long k = static_cast<long long>(parts.size());
      for (int p : parts) {
        CHECK(p != 2);
        total += p;
        value += static_cast<long long>(p) * (p - 1) / 2;
      }
      value += k * (k - 1) / 2;
      CHECK(k >= 3);
      CHECK(total == n);
      CHECK(value == f.value);
    }
  }
}

TEST_CASE("every optimum is optimal: cross-check against direct enumeration") {
  // independent check at a few sizes by enumerating partitions recursively
  for (int n : {6, 11, 17}) {
    long long best = -1;
    std::vector<std::vector<int>> opts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
      if (left == 0) {
        if (cur.size() < 3) return;
        long long v = static_cast<long long>(cur.size()) * (cur.size() - 1) / 2;
        for (int p : cur) v += static_cast<long long>(p) * (p - 1) / 2;
        if (best < 0 || v < best) {
          best = v;
          opts.clear();
        }
        if (v == best) {
          std::vector<int> asc(cur.rbegin(), cur.rend());
          opts.push_back(asc);
        }
        return;
      }
      for (int p = std::min(left, maxpart); p >= 1; --p) {
        if (p == 2) continue;
        cur.push_back(p);
        self(self, left - p, p);
        cur.pop_back();
      }
    };
    rec(rec, n, n);
    std::sort(opts.begin(), opts.end());
    MultipartiteF f = multipartite_f(n);
    CHECK(f.value == best);
    CHECK(f.optima == opts);
  }
}

TEST_CASE("minima rows join scans with the multipartite minimum") {
  MinimaRow r7 = minima_row(scan_internal(7, all_checks()));
  CHECK(r7.n == 7);
  CHECK(r7.min_lambda_no_universal == 9);
  CHECK(r7.f_value == 9);
  CHECK(r7.minimizer_count == 1);
  CHECK(r7.all_minimizers_multipartite);
  CHECK(r7.exceptions.empty());

  MinimaRow r8 = minima_row(scan_internal(8, all_checks()));
  CHECK(r8.min_lambda_no_universal == 12);
  CHECK(r8.f_value == 12);
  CHECK(r8.minimizer_count == 2);
  CHECK(r8.all_minimizers_multipartite);

  // below three vertices there is no multipartite minimum to compare with
  MinimaRow r2 = minima_row(scan_internal(2, all_checks()));
  CHECK(r2.f_value == -1);
  CHECK(r2.min_lambda_no_universal == -1);
}
