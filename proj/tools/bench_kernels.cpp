#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "eh/kernels.hpp"

// Times the serial catalog sweep against the OpenMP one and checks that the
// buckets agree. Optional argument: largest gmax (default 1000000).

namespace {

double run_ms(eh::SweepResult (*sweep)(long), long gmax, eh::SweepResult& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = sweep(gmax);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long top = argc > 1 ? std::atol(argv[1]) : 1000000;
  if (top < 100) {
    std::cerr << "gmax must be at least 100\n";
    return 2;
  }
  std::cout << "gmax       serial_ms   parallel_ms  speedup  actions\n";
  for (long gmax : {top / 100, top / 10, top}) {
    eh::SweepResult s, p;
    double ts = run_ms(eh::sweep_actions_serial, gmax, s);
    double tp = run_ms(eh::sweep_actions_parallel, gmax, p);
    if (!eh::sweep_equal(s, p)) {
      std::cerr << "mismatch between serial and parallel sweeps at gmax " << gmax << "\n";
      return 1;
    }
    long long total = 0;
    for (const auto& b : s.buckets) total += static_cast<long long>(b.size());
    std::printf("%-10ld %10.1f  %10.1f  %6.2fx  %lld\n", gmax, ts, tp, ts / (tp > 0 ? tp : 1),
                total);
  }
  return 0;
}
