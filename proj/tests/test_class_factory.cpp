#include <doctest.h>

#include <numbers>
#include <random>

#include "grid.hpp"
#include "oracles.hpp"
#include "starlike/error.hpp"
#include "starlike/log_coefficients.hpp"
#include "starlike/polylog.hpp"

using namespace starlike;

namespace {

Errc code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::DomainError;
}

// z f'/f - 1 computed from the coefficients of f alone.
Series log_derivative_from_f(const Series &f) {
  Series fprime_over(f.order() - 1); // f'(z) as a series
  Series f_over_z(f.order() - 1);
  for (std::size_t n = 0; n + 1 <= f.order(); ++n) {
    fprime_over[n] = double(n + 1) * f[n + 1];
    f_over_z[n] = f[n + 1];
  }
  Series out = fprime_over / f_over_z;
  out[0] -= 1.0;
  return out;
}

} // namespace

TEST_CASE("ClassParams validation") {
  CHECK(ClassParams::make(1, 1, 1.0, -1.0).m() == 1);
  CHECK(ClassParams::make(2, 3, cplx(0.8, 0.3), -0.75).m() == 4);
  CHECK(code_of([] { ClassParams::make(0, 1, 1.0, -0.5); }) == Errc::InvalidParams);
  CHECK(code_of([] { ClassParams::make(3, 3, 1.0, -0.5); }) == Errc::InvalidParams);
  CHECK(code_of([] { ClassParams::make(1, 2, 1.0, 0.1); }) == Errc::InvalidParams);
  CHECK(code_of([] { ClassParams::make(1, 2, 1.0, -1.5); }) == Errc::InvalidParams);
  CHECK(code_of([] { ClassParams::make(1, 2, -0.5, -0.5); }) == Errc::InvalidParams);
  CHECK(code_of([] { ClassParams::make(-1, 2, 1.0, -0.5); }) == Errc::InvalidParams);
}

TEST_CASE("extremal_function examples") {
  const Series koebe = extremal_function(ClassParams::make(1, 1, 1.0, -1.0), 5).series();
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(std::abs(koebe[n] - double(n)) <= 1e-13);

  const Series e = extremal_function(ClassParams::make(1, 2, 1.0, 0.0), 4).series();
  const std::vector<cplx> expected = {0, 1, 0, 0.5, 0};
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(std::abs(e[n] - expected[n]) <= 1e-15);

  // (j,k) = (0,3): m = 2, K/z = (1 - z^2/2)^{-3/2}
  const auto p = ClassParams::make(0, 3, 1.0, -0.5);
  const ClassMember k2 = extremal_function(p, 2);
  CHECK(k2.series()[1] == cplx(1.0));
  const LogCoeffVector d = log_coefficients(k2);
  REQUIRE(d.n_terms() == 1);
  CHECK(std::abs(d[1] - 0.375) <= 1e-15);

  const auto binom = oracle::binomial_series(-0.5, -1.5, 20);
  const ClassMember k40 = extremal_function(p, 40);
  for (std::size_t i = 0; i <= 20; ++i) {
    CHECK(std::abs(k40.ratio[2 * i] - binom[i]) <= 1e-13);
    if (2 * i + 1 <= 40)
      CHECK(k40.ratio[2 * i + 1] == cplx{});
  }
}

TEST_CASE("extremal_function requires N >= m") {
  CHECK(code_of([] { extremal_function(ClassParams::make(1, 4, 1.0, -0.5), 3); }) ==
        Errc::TruncationTooSmall);
  CHECK(code_of([] {
          member_from_seed(ClassParams::make(2, 3, 1.0, -0.5), seed::Identity{}, 2);
        }) == Errc::TruncationTooSmall);
}

TEST_CASE("seed_series examples") {
  const Series id = seed_series(seed::Identity{}, 3);
  CHECK(max_abs_diff(id, Series(std::vector<cplx>{0, 1, 0, 0})) == 0.0);

  const Series rot = seed_series(seed::Rotation{std::numbers::pi}, 2);
  CHECK(std::abs(rot[1] + 1.0) <= 1e-15);
  CHECK(rot[0] == cplx{});
  CHECK(rot[2] == cplx{});

  const Series ed = seed_series(seed::ExpDamp{0.0, 1.0}, 2);
  CHECK(ed[0] == cplx{});
  CHECK(std::abs(ed[1] - std::exp(-1.0)) <= 1e-16);
  CHECK(std::abs(ed[2] - std::exp(-1.0)) <= 1e-16);

  // ExpDamp coefficients e^{i th} e^{-c} c^{n-1}/(n-1)!
  const double c = 2.5, th = 0.7;
  const Series ed2 = seed_series(seed::ExpDamp{th, c}, 10);
  double fact = 1.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    if (n > 1)
      fact *= double(n - 1);
    const cplx want = std::polar(std::exp(-c), th) * std::pow(c, double(n - 1)) / fact;
    CHECK(std::abs(ed2[n] - want) <= 1e-15);
  }

  CHECK(code_of([] { seed_series(seed::Polynomial{{0.6, 0.5}}, 4); }) == Errc::InvalidSeed);
  CHECK(code_of([] { seed_series(seed::ExpDamp{0.0, -1.0}, 4); }) == Errc::InvalidSeed);
}

TEST_CASE("seed descriptors round trip") {
  const std::vector<SchwarzSeed> seeds = {
      seed::Identity{}, seed::Rotation{1.25}, seed::ExpDamp{3.0, 0.125},
      seed::Polynomial{{cplx(0.25, -0.5), 0.0, cplx(0.0, 0.125)}}};
  for (const auto &s : seeds) {
    const SchwarzSeed back = parse_seed(describe(s));
    CHECK(describe(back) == describe(s));
    for (double r : {0.2, 0.7})
      CHECK(std::abs(seed_value(back, std::polar(r, 0.4)) - seed_value(s, std::polar(r, 0.4))) ==
            0.0);
  }
  CHECK(code_of([] { parse_seed("spiral:1"); }) == Errc::InvalidSeed);
  CHECK(code_of([] { parse_seed("expdamp:1"); }) == Errc::InvalidSeed);
  CHECK(code_of([] { parse_seed("poly:0.9/0.2i"); }) == Errc::InvalidSeed);
}

TEST_CASE("member_from_seed with the identity seed reproduces the extremal function") {
  for (const auto &p : grid::acceptance_params()) {
    const auto a = member_from_seed(p, seed::Identity{}, 96);
    const auto b = extremal_function(p, 96);
    CHECK(max_abs_diff(a.ratio, b.ratio) <= 1e-11);
  }
}

TEST_CASE("rotation seed with the Koebe parameters gives the rotated Koebe function") {
  const auto p = ClassParams::make(1, 1, 1.0, -1.0);
  const double th = 0.9;
  const ClassMember f = member_from_seed(p, seed::Rotation{th}, 40);
  const Series s = f.series();
  for (std::size_t n = 1; n <= 40; ++n)
    CHECK(std::abs(s[n] - double(n) * std::polar(1.0, double(n - 1) * th)) <= 1e-11);
  const LogCoeffVector d = log_coefficients(f);
  for (std::size_t n = 1; n <= d.n_terms(); ++n)
    CHECK(std::abs(std::abs(d[n]) - 1.0 / double(n)) <= 1e-11);
}

TEST_CASE("ExpDamp member stays strictly below the sum-of-squares bound") {
  const auto p = ClassParams::make(1, 2, 1.0, -0.5);
  const LogCoeffVector d = log_coefficients(member_from_seed(p, seed::ExpDamp{0.0, 2.0}, 128));
  double sum = 0.0;
  for (auto c : d.d)
    sum += std::norm(c);
  const double bound = std::pow(1.5 / 4.0, 2) * li_ratio(0.25);
  CHECK(sum < bound * (1.0 - 1e-3));
}

TEST_CASE("q_function") {
  const Series q = q_function(ClassParams::make(1, 1, 1.0, -1.0), 4);
  const std::vector<cplx> want = {1, -2, 1, 0, 0};
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(std::abs(q[n] - want[n]) <= 1e-14);

  const Series q0 = q_function(ClassParams::make(1, 2, 1.0, 0.0), 5);
  const std::vector<cplx> want0 = {1, 0, -0.5, 0, 0.125, 0};
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(std::abs(q0[n] - want0[n]) <= 1e-15);
}

TEST_CASE("property: Q times K/z is one") {
  for (const auto &p : grid::acceptance_params()) {
    const Series prod = q_function(p, 128) * extremal_function(p, 128).ratio;
    CHECK(max_abs_diff(prod, Series::constant(1.0, 128)) <= 1e-11);
  }
}

namespace {

std::vector<SchwarzSeed> sample_seeds(std::mt19937_64 &rng, int count) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SchwarzSeed> out = {seed::Identity{}, seed::Rotation{2.0}};
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      out.push_back(seed::ExpDamp{6.283185307179586 * u(rng), 5.0 * u(rng)});
    } else {
      seed::Polynomial p;
      double budget = u(rng);
      for (int d = 0; d < 4; ++d) {
        const double r = budget * u(rng);
        budget -= r;
        p.coeffs.push_back(std::polar(r, 6.283185307179586 * u(rng)));
      }
      out.push_back(p);
    }
  }
  return out;
}

} // namespace

TEST_CASE("property: generated members satisfy the subordination identity") {
  std::mt19937_64 rng(5);
  const auto seeds = sample_seeds(rng, 10);
  for (const auto &p : grid::acceptance_params()) {
    for (const auto &s : seeds) {
      const std::size_t order = 48;
      const ClassMember f = member_from_seed(p, s, order);
      const Series lhs = log_derivative_from_f(f.series());
      const Series rhs = subordinate_term(p, s, order);
      CHECK(max_abs_diff(lhs, rhs) <= 1e-10);
      CHECK(f.series()[0] == cplx{});
      CHECK(std::abs(f.series()[1] - 1.0) <= 1e-15);
    }
  }
}

TEST_CASE("property: seeds are Schwarz functions on sampled circles") {
  std::mt19937_64 rng(9);
  for (const auto &s : sample_seeds(rng, 40)) {
    CHECK(seed_value(s, 0.0) == cplx{});
    for (double r : {0.3, 0.6, 0.9})
      for (int i = 0; i < 64; ++i) {
        const cplx w = std::polar(r, 2.0 * std::numbers::pi * i / 64.0);
        CHECK(std::abs(seed_value(s, w)) <= r + 1e-12);
      }
  }
}

TEST_CASE("property: log(f/z) is supported on multiples of m exactly") {
  std::mt19937_64 rng(21);
  const auto seeds = sample_seeds(rng, 6);
  for (const auto &p : grid::acceptance_params()) {
    for (const auto &s : seeds) {
      const ClassMember f = member_from_seed(p, s, 60);
      const Series l = log_series(f.ratio);
      for (std::size_t i = 1; i <= 60; ++i)
        if (i % std::size_t(p.m()) != 0) {
          CHECK(l[i] == cplx{});
        }
    }
  }
}

TEST_CASE("property: j = 1 members are k-fold symmetric") {
  std::mt19937_64 rng(33);
  const auto seeds = sample_seeds(rng, 6);
  for (int k = 1; k <= 5; ++k) {
    const auto p = ClassParams::make(1, k, cplx(0.8, 0.3), -0.6);
    const cplx eps = std::polar(1.0, 2.0 * std::numbers::pi / k);
    for (const auto &s : seeds) {
      const Series f = member_from_seed(p, s, 40).series();
      for (std::size_t n = 0; n <= 40; ++n) {
        // f(eps z) = eps f(z) coefficientwise: f_n eps^n = eps f_n
        CHECK(std::abs(f[n] * std::pow(eps, double(n)) - eps * f[n]) <= 1e-12);
      }
    }
  }
}
