// Serial vs OpenMP wall time for the closure kernels and the solvers built on them.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "tbraid/conjugacy.hpp"
#include "tbraid/kernels.hpp"
#include "tbraid/twisted.hpp"

using namespace tbraid;

namespace {

double seconds(std::function<void()> const& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) {
    f();
  }
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
             .count() /
         reps;
}

void row(char const* name, std::function<void()> const& serial,
         std::function<void()> const& parallel, int reps) {
  double s = seconds(serial, reps);
  double p = seconds(parallel, reps);
  std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name, s,
              p, p > 0 ? s / p : 0.0);
}

BraidWord alpha(int k) {
  std::vector<int> l(k, 3);
  for (int x : {2, 3, 4, 5, 1, 2, 3, 4}) {
    l.push_back(x);
  }
  l.insert(l.end(), k, 1);
  return BraidWord(6, l);
}

}  // namespace

int main() {
  std::printf("threads %d (openmp %s)\n", num_threads(),
              openmp_enabled() ? "on" : "off");
  StrandCount const n6(6);
  auto const& simples = kernels::simples_of(n6);
  CanonicalBraid z = CanonicalBraid::from_word(alpha(2));

  row("simple conjugates, B_6", [&] { kernels::simple_conjugates_serial(z, simples); },
      [&] { kernels::simple_conjugates_parallel(z, simples); }, 20);
  row("twisted neighbours, B_6",
      [&] { kernels::twisted_neighbors_serial(z, z.canonical_length(), simples); },
      [&] { kernels::twisted_neighbors_parallel(z, z.canonical_length(), simples); },
      3);
  BraidWord u = parse_word(6, "1 2 3 4 5 -1 2 -3 1 4");
  BraidWord v = parse_word(6, "5 4 3 2 1 -5 4 -3 5 2");
  row("super summit set, B_6",
      [&] { super_summit_set(u, Execution::serial); },
      [&] { super_summit_set(u, Execution::parallel); }, 3);
  row("conjugacy decision, B_6",
      [&] { conjugacy_decide(u, v, Execution::serial); },
      [&] { conjugacy_decide(u, v, Execution::parallel); }, 3);
  row("eps-twisted alpha_3 vs alpha_0",
      [&] { eps_twisted_decide(alpha(3), alpha(0), Execution::serial); },
      [&] { eps_twisted_decide(alpha(3), alpha(0), Execution::parallel); }, 1);
  return 0;
}
