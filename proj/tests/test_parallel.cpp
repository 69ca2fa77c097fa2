#include <doctest.h>

#include "fueterkit/random_source.hpp"

using namespace fueterkit;

TEST_CASE("openmp convolution is bit-identical to the serial reference") {
  for (const char* name : {"quaternions", "grassmann:3"}) {
    auto spec = builtin_algebra(name);
    RandomSource rng(301);
    auto o = FueterPoint::origin(spec);
    for (int t = 0; t < 4; ++t) {
      auto f = rng.series(o, 4, 12);
      auto g = rng.series(o, 4, 12);
      auto serial = kernels::convolve_serial(f.coeff(), g.coeff(), 4);
      auto parallel = kernels::convolve_parallel(f.coeff(), g.coeff(), 4);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("openmp matrix product is bit-identical to the serial reference") {
  auto spec = builtin_algebra("split_quaternions");
  RandomSource rng(303);
  for (int t = 0; t < 3; ++t) {
    auto a = rng.matrix(spec, 7, 5);
    auto b = rng.matrix(spec, 5, 6);
    CHECK(mat_mul(a, b, kernels::Exec::Serial) == mat_mul(a, b, kernels::Exec::Parallel));
  }
}

TEST_CASE("series products agree across execution policies") {
  auto spec = builtin_algebra("quaternions");
  RandomSource rng(307);
  auto o = FueterPoint::origin(spec);
  auto f = rng.matrix_series(o, 4, 2, 2, 6);
  auto g = rng.matrix_series(o, 4, 2, 2, 6);
  CHECK(cauchy_product(f, g, kernels::Exec::Serial) ==
        cauchy_product(f, g, kernels::Exec::Parallel));

  auto saved = kernels::default_exec();
  kernels::default_exec() = kernels::Exec::Serial;
  auto h1 = cauchy_product(f, g);
  kernels::default_exec() = kernels::Exec::Parallel;
  auto h2 = cauchy_product(f, g);
  kernels::default_exec() = saved;
  CHECK(h1 == h2);
}
