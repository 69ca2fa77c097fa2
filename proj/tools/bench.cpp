// Benchmark of the data-parallel kernels against their serial references:
// Cauchy convolution of dense series and matrix products over the algebra.

#include <omp.h>

#include <cstdio>

#include "fueterkit/random_source.hpp"

namespace fk = fueterkit;

namespace {

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = omp_get_wtime();
    fn();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int order = argc > 1 ? std::atoi(argv[1]) : 7;
  int mat_n = argc > 2 ? std::atoi(argv[2]) : 28;
  auto spec = fk::builtin_algebra("quaternions");
  fk::RandomSource rng(7);
  auto origin = fk::FueterPoint::origin(spec);

  auto all = fk::indices_up_to(spec->m(), order);
  fk::FueterSeries f(origin, order), g(origin, order);
  for (auto& a : all) {
    f.set_coeff(a, rng.element(spec));
    g.set_coeff(a, rng.element(spec));
  }

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

  size_t sink = 0;
  double ts = time_best_of(3, [&] {
    auto h = fk::kernels::convolve_serial(f.coeff(), g.coeff(), order);
    sink += h.size();
  });
  double tp = time_best_of(3, [&] {
    auto h = fk::kernels::convolve_parallel(f.coeff(), g.coeff(), order);
    sink += h.size();
  });
  std::printf("%-34s %10.4f %10.4f %7.2fx\n", "series_convolution(dense,order=7)", ts, tp,
              ts / tp);

  auto check = fk::kernels::convolve_serial(f.coeff(), g.coeff(), order) ==
               fk::kernels::convolve_parallel(f.coeff(), g.coeff(), order);
  if (!check) {
    std::printf("MISMATCH between serial and parallel convolution\n");
    return 1;
  }

  auto ma = rng.matrix(spec, mat_n, mat_n);
  auto mb = rng.matrix(spec, mat_n, mat_n);
  ts = time_best_of(3, [&] {
    auto c = fk::mat_mul(ma, mb, fk::kernels::Exec::Serial);
    sink += static_cast<size_t>(c.rows());
  });
  tp = time_best_of(3, [&] {
    auto c = fk::mat_mul(ma, mb, fk::kernels::Exec::Parallel);
    sink += static_cast<size_t>(c.rows());
  });
  std::printf("%-34s %10.4f %10.4f %7.2fx\n", "matrix_product(NxN over algebra)", ts, tp,
              ts / tp);

  if (!(fk::mat_mul(ma, mb, fk::kernels::Exec::Serial) ==
        fk::mat_mul(ma, mb, fk::kernels::Exec::Parallel))) {
    std::printf("MISMATCH between serial and parallel matrix product\n");
    return 1;
  }
  return sink == 0 ? 1 : 0;
}
