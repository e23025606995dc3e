// Serial reference vs OpenMP sweep timing.
//
// Usage: bench_sweep [threads] [max_rho] [max_len]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "tklwb/io.hpp"
#include "tklwb/positivity.hpp"

using namespace tklwb;

namespace {

template <typename Fn>
double millis(Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const Bounds bounds{argc > 2 ? std::atoi(argv[2]) : 5, argc > 3 ? std::atoi(argv[3]) : 5, kDefaultElementCap};
  const CoxeterSpec specs[] = {CoxeterSpec(3), parse_spec(3, "(a b)"), parse_spec(4, "(a b)(c d)")};
  const char* checks[] = {"oracle-equivalence", "b-prime", "c-prime", "diff-recursion", "recurrence-identity"};

  std::printf("threads=%d max_rho=%d max_len=%d\n", threads, bounds.max_rho, bounds.max_len);
  std::printf("%-14s %-20s %12s %12s %8s %s\n", "spec", "task", "serial_ms", "parallel_ms", "speedup", "same");
  for (const CoxeterSpec& spec : specs) {
    const std::string label = std::to_string(spec.gen_count()) + " " + star_literal(spec);
    for (const char* check : checks) {
      SweepReport serial, parallel;
      const double ts = millis([&] { serial = verify(check, spec, bounds, 1); });
      const double tp = millis([&] { parallel = verify(check, spec, bounds, threads); });
      const bool same = to_json(serial, false) == to_json(parallel, false);
      std::printf("%-14s %-20s %12.1f %12.1f %8.2f %s\n", label.c_str(), check, ts, tp, ts / tp, same ? "yes" : "NO");
    }
    std::string a, b;
    const double ts = millis([&] { a = dump_tables(spec, bounds, 1); });
    const double tp = millis([&] { b = dump_tables(spec, bounds, threads); });
    std::printf("%-14s %-20s %12.1f %12.1f %8.2f %s\n", label.c_str(), "dump", ts, tp, ts / tp, a == b ? "yes" : "NO");
  }
  return 0;
}
