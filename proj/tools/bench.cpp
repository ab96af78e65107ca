// Timing comparison between the serial reference kernels and their OpenMP
// counterparts: batched critical-pair resolution and the confluence word
// sweep.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fcrs/bundle_graph.hpp"
#include "fcrs/knuth_bendix.hpp"
#include "fcrs/verify.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return seconds_since(start);
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-30s %9.3fs %9.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

// A nine-vertex path with loops on alternating vertices; large enough to
// produce a four-digit pair count.
fcrs::BundleGraph wide_graph() {
  fcrs::BundleGraph graph;
  graph.vertices.push_back({"v0", 6});
  for (int i = 1; i < 9; ++i) {
    graph.vertices.push_back({"v" + std::to_string(i), 4 + (i % 3)});
    graph.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i - 1),
                           "v" + std::to_string(i), (i % 2 ? -1 : 1) * (i % 4)});
  }
  for (int i = 0; i < 9; i += 2) {
    graph.loops.push_back({"l" + std::to_string(i), "v" + std::to_string(i), 1 + (i % 3)});
  }
  return graph;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-30s %10s %10s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    fcrs::BundleGraph graph = wide_graph();
    fcrs::RewritingSystem sys = fcrs::generate_system(graph, fcrs::validate_and_color(graph));
    std::vector<fcrs::CriticalPair> pairs = fcrs::critical_pairs(sys);
    int batches = quick ? 10 : 100;

    std::vector<fcrs::ResolutionReport> serial_reports, parallel_reports;
    double ts = timed([&] {
      for (int b = 0; b < batches; ++b)
        serial_reports = fcrs::resolve_all(sys, pairs, 100000, false);
    });
    double tp = timed([&] {
      for (int b = 0; b < batches; ++b)
        parallel_reports = fcrs::resolve_all(sys, pairs, 100000, true);
    });
    for (size_t i = 0; i < serial_reports.size(); ++i) {
      if (serial_reports[i].resolved() != parallel_reports[i].resolved()) {
        std::printf("MISMATCH between serial and parallel pair resolution\n");
        return 1;
      }
    }
    std::string name = "pair resolution (" + std::to_string(pairs.size()) + " x " +
                       std::to_string(batches) + ")";
    report(name.c_str(), ts, tp);
  }

  {
    fcrs::RewritingSystem sys = fcrs::two_bundle_system(1, 1, 0);
    size_t max_len = quick ? 4 : 5;
    size_t strategies = quick ? 8 : 20;
    fcrs::SweepResult serial_result, parallel_result;
    double ts = timed(
        [&] { serial_result = fcrs::confluence_sweep(sys, max_len, strategies, 7, false); });
    double tp = timed(
        [&] { parallel_result = fcrs::confluence_sweep(sys, max_len, strategies, 7, true); });
    if (serial_result.ok != parallel_result.ok ||
        serial_result.words_checked != parallel_result.words_checked) {
      std::printf("MISMATCH between serial and parallel confluence sweep\n");
      return 1;
    }
    std::string name = "confluence sweep (len<=" + std::to_string(max_len) + ", " +
                       std::to_string(strategies) + " runs)";
    report(name.c_str(), ts, tp);
  }

  return 0;
}
