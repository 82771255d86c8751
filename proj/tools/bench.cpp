// Compares the serial reference kernels against the OpenMP lanes on scaled
// synthetic families: wide-subgroupoid lattice enumeration and the per-
// subgroupoid Galois table build.

#include <chrono>
#include <cstdio>

#include "CLI11.hpp"

#include "ggal/families.hpp"
#include "ggal/galois.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ggal;

namespace {

template <typename F>
double time_ms(int repeat, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void bench_wide(int objects, int repeat) {
  Groupoid g = pair_groupoid(objects);
  std::size_t n_serial = 0, n_parallel = 0;
  double serial = time_ms(repeat, [&] { n_serial = wide_subgroupoids_serial(g, g.size()).size(); });
  double parallel = time_ms(repeat, [&] { n_parallel = wide_subgroupoids(g, g.size()).size(); });
  std::printf("wide-subgroupoids  pair groupoid on %d objects (%d morphisms, %zu found)%s\n", objects,
              g.size(), n_serial, n_serial == n_parallel ? "" : "  MISMATCH");
  std::printf("  serial   %10.2f ms\n  parallel %10.2f ms  (x%.2f)\n", serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

void bench_tables(int k, u32 p, int repeat) {
  Action act = elementary_abelian_perm_action(k, p);
  GaloisOptions opts;
  opts.max_morphisms = act.gpd.size();
  std::size_t n_serial = 0, n_parallel = 0;
  double serial = time_ms(repeat, [&] {
    GaloisOptions o = opts;
    o.parallel = false;
    n_serial = GaloisInstance::build(act, {}, o).wide.size();
  });
  double parallel = time_ms(repeat, [&] {
    GaloisOptions o = opts;
    o.parallel = true;
    n_parallel = GaloisInstance::build(act, {}, o).wide.size();
  });
  std::printf("galois-tables      (Z_2)^%d translating F_%u^%d (%zu wide subgroupoids)%s\n", k, p,
              1 << k, n_serial, n_serial == n_parallel ? "" : "  MISMATCH");
  std::printf("  serial   %10.2f ms\n  parallel %10.2f ms  (x%.2f)\n", serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ggal-bench: serial reference vs OpenMP kernels"};
  int objects = 5;
  int k = 3;
  int repeat = 3;
  u32 p = 3;
  app.add_option("--objects", objects, "pair groupoid size for the lattice benchmark (default 5)");
  app.add_option("--group-rank", k, "rank of (Z_2)^k for the table benchmark (default 3)");
  app.add_option("--repeat", repeat, "repetitions, best-of (default 3)");
  app.add_option("--p", p, "prime modulus (default 3)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("compiled without OpenMP; both lanes run serially\n");
#endif
  bench_wide(objects, repeat);
  bench_tables(k, p, repeat);
  return 0;
}
