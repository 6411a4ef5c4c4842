// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [n] [p] [k] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "rulingset/generators.hpp"
#include "rulingset/independence.hpp"
#include "rulingset/power.hpp"

using namespace rulingset;

namespace {

template <typename F>
double best_ms(int repeats, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void row(const std::string& kernel, double serial_ms, double parallel_ms, bool same) {
  std::cout << std::left << std::setw(22) << kernel << std::right << std::fixed
            << std::setprecision(3) << std::setw(12) << serial_ms << std::setw(12) << parallel_ms
            << std::setw(10) << std::setprecision(2) << serial_ms / parallel_ms
            << (same ? "   match" : "   MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  double p = argc > 2 ? std::strtod(argv[2], nullptr) : 0.002;
  auto k = static_cast<std::uint32_t>(argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 3);
  int repeats = argc > 4 ? std::atoi(argv[4]) : 3;

  Graph g = generate({Family::RandomGnp, n, p, 1, 0, 0});
  std::cout << "graph n=" << g.vertex_count() << " m=" << g.edge_count() << " k=" << k
            << " threads=" << omp_get_max_threads() << "\n\n";
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(12)
            << "serial_ms" << std::setw(12) << "omp_ms" << std::setw(10) << "speedup" << '\n';

  Graph serial_power;
  Graph parallel_power;
  double s = best_ms(repeats, [&] { serial_power = serial::power_graph_bfs(g, k); });
  double t = best_ms(repeats, [&] { parallel_power = power_graph(g, k); });
  row("power_graph_bfs", s, t, serial_power == parallel_power);

  Graph serial_round;
  Graph parallel_round;
  s = best_ms(repeats, [&] { serial_round = serial::expand_round(g, g).first; });
  t = best_ms(repeats, [&] { parallel_round = expand_round(g, g).first; });
  row("expand_round", s, t, serial_round == parallel_round);

  MisResult serial_mis;
  MisResult parallel_mis;
  s = best_ms(repeats, [&] { serial_mis = serial::luby_mis(serial_power, 42); });
  t = best_ms(repeats, [&] { parallel_mis = luby_mis(serial_power, 42); });
  row("luby_mis", s, t,
      serial_mis.set == parallel_mis.set && serial_mis.rounds == parallel_mis.rounds);
  return 0;
}
