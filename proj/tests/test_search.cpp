#include <doctest.h>

#include "starlike/bounds.hpp"
#include "starlike/search.hpp"

using namespace starlike;

TEST_CASE("Rng is deterministic and uniform on [0, 1)") {
  Rng a(42), b(42), c(43);
  double mean = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    mean += x;
  }
  CHECK(mean / 10000 == doctest::Approx(0.5).epsilon(0.02));
  CHECK(Rng(42).next() != c.next());
}

TEST_CASE("random seeds are certified") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_seed(i % 2 ? SeedFamily::Polynomial : SeedFamily::ExpDamp, rng);
    CHECK_NOTHROW(validate_seed(s));
  }
}

TEST_CASE("search on (1,1,1,-1/2) finds the extremal corner") {
  const auto p = ClassParams::make(1, 1, 1.0, -0.5);
  const auto r = adversarial_search(p, 0.0, SeedFamily::ExpDamp, {2000, 1, 0});
  CHECK(r.max_ratio >= 1.0 - 1e-6);
  CHECK(r.max_ratio <= 1.0 + 1e-9);
  CHECK(std::get<seed::ExpDamp>(r.argmax).c <= 1e-3);
  CHECK(r.evaluations <= 2000);
}

TEST_CASE("search with B = 0 peaks at c = 0") {
  const auto p = ClassParams::make(1, 2, 1.0, 0.0);
  const auto r = adversarial_search(p, 0.0, SeedFamily::ExpDamp, {500, 5, 0});
  CHECK(std::abs(r.max_ratio - 1.0) <= 1e-9);
  CHECK(std::get<seed::ExpDamp>(r.argmax).c <= 1e-3);
}

TEST_CASE("search with a single evaluation flags non-convergence") {
  const auto p = ClassParams::make(1, 3, cplx(0.8, 0.3), -0.25);
  const auto r = adversarial_search(p, 0.0, SeedFamily::ExpDamp, {1, 1, 0});
  CHECK(r.evaluations == 1);
  CHECK_FALSE(r.converged);
  CHECK(r.max_ratio <= 1.0 + 1e-9);
}

TEST_CASE("search is deterministic") {
  const auto p = ClassParams::make(0, 3, cplx(0.8, 0.3), -0.75);
  for (auto family : {SeedFamily::ExpDamp, SeedFamily::Polynomial}) {
    const auto a = adversarial_search(p, 1.0, family, {300, 17, 0});
    const auto b = adversarial_search(p, 1.0, family, {300, 17, 0});
    CHECK(a.max_ratio == b.max_ratio);
    CHECK(describe(a.argmax) == describe(b.argmax));
    CHECK(a.evaluations == b.evaluations);
  }
}

TEST_CASE("polynomial search stays below the bound") {
  const auto p = ClassParams::make(1, 2, 1.0, -0.75);
  for (double t : {0.0, 2.0}) {
    const auto r = adversarial_search(p, t, SeedFamily::Polynomial, {800, 2, 0});
    CHECK(r.max_ratio <= 1.0 + 1e-9);
    CHECK(r.max_ratio >= 0.99);
  }
}

TEST_CASE("parse_family") {
  CHECK(parse_family("expdamp") == SeedFamily::ExpDamp);
  CHECK(parse_family("poly") == SeedFamily::Polynomial);
  CHECK_THROWS(parse_family("grid"));
}
