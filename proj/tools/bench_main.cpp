// Timing harness: serial reference kernels vs the OpenMP ones, with an
// equality check on every pair so the speedup numbers are for identical
// results. Thread count comes from OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wlsim/baselines.hpp"
#include "wlsim/config.hpp"
#include "wlsim/engine.hpp"
#include "wlsim/game.hpp"
#include "wlsim/metrics.hpp"
#include "wlsim/topology.hpp"

using namespace wlsim;

namespace {

double time_ms(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool equal) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%-5.2f %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              equal ? "identical" : "MISMATCH");
}

void bench_engine(const char* name, const Scenario& scenario, long steps) {
  const GameParams params;
  LearningConfig learn;
  learn.epsilon = 0.05;
  MetricsSeries serial_out, parallel_out;
  const double s = time_ms([&] {
    serial_out = run(scenario, params, learn, steps, 7, StrategyKind::WeakestLink,
                     ExecMode::Serial);
  });
  const double p = time_ms([&] {
    parallel_out = run(scenario, params, learn, steps, 7,
                       StrategyKind::WeakestLink, ExecMode::Parallel);
  });
  report(name, s, p, serial_out == parallel_out);
}

void bench_nash(const char* name, const Scenario& scenario, double grid) {
  const GameParams params;
  const StrategyProfile profile = StrategyProfile::uniform(
      static_cast<std::uint32_t>(scenario.num_nodes), 0.5);
  NashReport serial_out, parallel_out;
  const double s = time_ms([&] {
    serial_out = check_nash(scenario, profile, params, grid, 1e-9, ExecMode::Serial);
  });
  const double p = time_ms([&] {
    parallel_out =
        check_nash(scenario, profile, params, grid, 1e-9, ExecMode::Parallel);
  });
  report(name, s, p, serial_out == parallel_out);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel mode falls back to serial\n");
#endif
  std::printf("%-34s %13s %13s   %s\n", "kernel", "serial", "parallel",
              "speedup");

  bench_engine("engine ring(25,6) x2000", generate_ring(25, 6), 2000);
  bench_engine("engine random(100,1000) x500",
               generate_random(100, 1000, {3, 6}, 42), 500);
  bench_engine("engine random(300,8000) x100",
               generate_random(300, 8000, {3, 6}, 42), 100);
  bench_nash("check_nash random(100,1000) g=.05",
             generate_random(100, 1000, {3, 6}, 42), 0.05);
  bench_nash("check_nash random(200,4000) g=.1",
             generate_random(200, 4000, {3, 6}, 42), 0.1);
  return 0;
}
