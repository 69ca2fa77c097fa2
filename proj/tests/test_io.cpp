#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "fueterkit/io.hpp"
#include "fueterkit/random_source.hpp"
#include "fueterkit/report.hpp"

using namespace fueterkit;

TEST_CASE("algebra spec files round trip") {
  for (const char* name : {"quaternions", "grassmann:2", "ternary"}) {
    auto spec = builtin_algebra(name);
    auto j = algebra_to_json(spec);
    auto back = algebra_from_json(j);
    CHECK(back->dim() == spec->dim());
    CHECK(back->basis_labels() == spec->basis_labels());
    RandomSource rng(401);
    for (int t = 0; t < 5; ++t) {
      auto a = rng.element(spec), b = rng.element(spec);
      AlgebraElement a2(back, a.coeff()), b2(back, b.coeff());
      CHECK((a * b).coeff() == (a2 * b2).coeff());
      CHECK(a.involute().coeff() == a2.involute().coeff());
    }
  }
}

TEST_CASE("series JSON round trip") {
  auto spec = builtin_algebra("quaternions");
  RandomSource rng(403);
  auto f = rng.series(rng.point(spec), 3, 6);
  auto j = series_to_json(f);
  auto back = series_from_json(j);
  CHECK(back == f);
  CHECK(back.order() == f.order());

  auto mf = rng.matrix_series(FueterPoint::origin(spec), 3, 2, 2, 4);
  auto mj = series_to_json(mf);
  CHECK(matrix_series_from_json(mj) == mf);
}

TEST_CASE("realization JSON round trip") {
  auto spec = builtin_algebra("split_quaternions");
  RandomSource rng(407);
  auto r = rng.realization(rng.point(spec), 2, 1, 2);
  auto j = realization_to_json(r);
  auto back = realization_from_json(j);
  CHECK(to_series(back, 3, ExpandMethod::Neumann) == to_series(r, 3, ExpandMethod::Neumann));
}

TEST_CASE("algebra path resolution") {
  auto spec = builtin_algebra("grassmann:2");
  std::string dir = "/tmp/fueterkit_test_algebras";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/my_algebra.json") << algebra_to_json(spec).dump();
  setenv("FUETERKIT_ALGEBRA_PATH", dir.c_str(), 1);
  auto loaded = resolve_algebra("my_algebra.json");
  CHECK(loaded->dim() == 4);
  unsetenv("FUETERKIT_ALGEBRA_PATH");
  CHECK_THROWS_AS(resolve_algebra("no_such_algebra"), ParseError);
}

TEST_CASE("coordinate and multi-index parsing") {
  auto v = parse_coords("1/2, -3, 0.25");
  CHECK(v.size() == 3);
  CHECK(v[0].re == Rational(1, 2));
  CHECK(v[2].re == Rational(1, 4));
  CHECK(parse_multi_index("2,1,0", 3) == MultiIndex{2, 1, 0});
  CHECK_THROWS_AS(parse_multi_index("2,1", 3), ParseError);
  CHECK_THROWS_AS(parse_multi_index("2,-1,0", 3), ParseError);
}

TEST_CASE("report envelope is stable") {
  CheckReport r{"demo", "quaternions", "fock", 4};
  r.pass = true;
  auto j = report_to_json(r);
  CHECK(j.at("status") == "pass");
  CHECK(j.at("check") == "demo");
  auto env = suite_json(Json{{"seed", 7}}, {r});
  CHECK(env.at("schema") == "fueterkit-report/1");
  CHECK(env.at("summary").at("failed") == 0);
}
