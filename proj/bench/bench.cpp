// Serial reference vs OpenMP kernels. Prints wall time and checks that both
// paths return identical numbers.
#include "anselberg/selberg.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace anselberg;

namespace {

template <class F> double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP timings"};
  double samples = 4e6;
  int max_workers = std::max(omp_get_max_threads(), 2);
  int trunc = 80;
  app.add_option("--samples", samples, "Monte Carlo draws per run");
  app.add_option("--max-workers", max_workers, "largest worker count to time");
  app.add_option("--trunc", trunc, "q-integral truncation");
  CLI11_PARSE(app, argc, argv);

  SelbergParams p;
  p.k = {1, 1, 2};
  p.alpha = 1.5;
  p.beta = {1.1, 1.25, 1.4};
  p.gamma = 0.25;

  std::printf("omp max threads: %d\n\n", omp_get_max_threads());
  std::printf("%-14s %8s %10s %10s %8s %s\n", "kernel", "workers", "serial_s", "omp_s", "speedup", "identical");
  for (int w = 1; w <= max_workers; w *= 2) {
    const MCConfig mc{static_cast<std::uint64_t>(samples), 7, w};
    Estimate a, b;
    const double ts = timed([&] { a = mc_selberg_serial(p, mc); });
    const double tp = timed([&] { b = mc_selberg(p, mc); });
    std::printf("%-14s %8d %10.3f %10.3f %8.2f %s\n", "mc_selberg", w, ts, tp, ts / tp,
                a.value == b.value && a.std_error == b.std_error ? "yes" : "NO");
  }

  QSelbergParams q;
  q.base.k = {1, 2};
  q.base.alpha = 1.2;
  q.base.beta = {0.8, 1.1};
  q.base.gamma = 0.3;
  q.q = 0.5;
  q.W = trunc;
  QSelbergResult a, b;
  const double ts = timed([&] { a = q_selberg_both_serial(q); });
  const double tp = timed([&] { b = q_selberg_both(q); });
  std::printf("%-14s %8d %10.3f %10.3f %8.2f %s\n", "q_selberg", omp_get_max_threads(), ts, tp, ts / tp,
              a.lhs == b.lhs ? "yes" : "NO");
  return 0;
}
