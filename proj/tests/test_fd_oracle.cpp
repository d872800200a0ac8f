#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "squarewell/fd_oracle.hpp"

using namespace squarewell;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("Dirichlet discretization drops both end nodes") {
  // 3 unknowns -> 4 intervals, h = 1/4
  const auto hm = discretize(family_condition(Family::A), 3);
  REQUIRE(hm.size() == 3);
  CHECK(hm.spacing == doctest::Approx(0.25));
  for (double d : hm.diag) CHECK(d == doctest::Approx(32.0));
  REQUIRE(hm.off.size() == 2);
  for (double o : hm.off) CHECK(o == doctest::Approx(-16.0));
}

TEST_CASE("Neumann ends keep their nodes with half mass") {
  // 3 unknowns -> 2 intervals, h = 1/2; boundary rows are mass-scaled
  const auto hm = discretize(family_condition(Family::B), 3);
  REQUIRE(hm.size() == 3);
  CHECK(hm.spacing == doctest::Approx(0.5));
  CHECK(hm.diag[0] == doctest::Approx(8.0));
  CHECK(hm.diag[1] == doctest::Approx(8.0));
  CHECK(hm.diag[2] == doctest::Approx(8.0));
  CHECK(hm.off[0] == doctest::Approx(-4.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hm.off[1] == doctest::Approx(-4.0 * std::sqrt(2.0)).epsilon(1e-15));
  // the constant mode survives discretization exactly
  const double lowest = eigenvalues(hm, 1)[0];
  CHECK(std::abs(lowest) < 1e-12);
}

TEST_CASE("two-node Robin corner case") {
  // both ends kept, one interval; the balanced Robin family already shows a
  // negative eigenvalue on the coarsest possible grid
  const auto hm = discretize(family_condition(Family::E), 2);
  REQUIRE(hm.size() == 2);
  CHECK(hm.spacing == doctest::Approx(1.0));
  CHECK(hm.diag[0] == doctest::Approx(0.0));
  CHECK(hm.diag[1] == doctest::Approx(4.0));
  CHECK(hm.off[0] == doctest::Approx(-2.0));
  CHECK(negative_count(hm) == 1);
  const double lowest = eigenvalues(hm, 1)[0];
  CHECK(lowest == doctest::Approx(2.0 - std::sqrt(8.0)).epsilon(1e-12));
}

TEST_CASE("discretization input validation") {
  CHECK_THROWS_AS(discretize(family_condition(Family::A), 0), std::invalid_argument);
  CHECK_THROWS_AS(discretize(family_condition(Family::E), 1), std::invalid_argument);
  const BoundaryCondition inhom{{1.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  CHECK_THROWS_AS(discretize(inhom, 100), std::invalid_argument);
  // a single unknown is fine when at least one end is Dirichlet
  const auto hm = discretize(family_condition(Family::A), 1);
  CHECK(hm.size() == 1);
  CHECK(hm.spacing == doctest::Approx(0.5));
}

TEST_CASE("Sturm count and bisection agree on a hand-built matrix") {
  DiscreteHamiltonian hm;
  hm.diag = {5.0};
  hm.spacing = 1.0;
  CHECK(count_below(hm, 4.999) == 0);
  CHECK(count_below(hm, 5.001) == 1);
  CHECK(eigenvalues(hm, 1)[0] == doctest::Approx(5.0).epsilon(1e-14));

  DiscreteHamiltonian t2;
  t2.diag = {2.0, 2.0};
  t2.off = {-1.0};
  t2.spacing = 1.0;
  const auto ev = eigenvalues(t2, 2);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(count_below(t2, 2.0) == 1);
  CHECK_THROWS_AS(eigenvalues(t2, 3), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(t2, 0), std::invalid_argument);
}

TEST_CASE("count stays consistent with the sorted eigenvalues") {
  const auto hm = discretize(family_condition(Family::C), 50);
  const auto ev = eigenvalues(hm, 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(count_below(hm, ev[k] - 1e-7) == k);
    CHECK(count_below(hm, ev[k] + 1e-7) == k + 1);
  }
}

TEST_CASE("discrete spectra converge to the closed forms") {
  const auto a = discretize(family_condition(Family::A), 1000);
  const auto ev_a = eigenvalues(a, 3);
  for (int n = 1; n <= 3; ++n)
    CHECK(ev_a[n - 1] ==
          doctest::Approx(n * n * pi * pi).epsilon(1e-5));

  const auto c = discretize(family_condition(Family::C), 1000);
  const auto ev_c = eigenvalues(c, 2);
  CHECK(ev_c[0] == doctest::Approx(0.25 * pi * pi).epsilon(1e-5));
  CHECK(ev_c[1] == doctest::Approx(2.25 * pi * pi).epsilon(1e-5));
}

TEST_CASE("negative counts across the families") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    CHECK(negative_count(discretize(family_condition(f), 1000)) == 0);
  CHECK(negative_count(discretize(family_condition(Family::E), 1000)) == 1);
}

TEST_CASE("attractive versus repulsive Robin wall") {
  const BoundaryCondition attract{{2.0, 1.0, 0.0}, {1.0, 0.0, 0.0}};
  const BoundaryCondition repel{{-2.0, 1.0, 0.0}, {1.0, 0.0, 0.0}};
  CHECK(negative_count(discretize(attract, 2000)) == 1);
  CHECK(negative_count(discretize(repel, 2000)) == 0);
  const double ev = eigenvalues(discretize(attract, 2000), 1)[0];
  const double q = 1.9150080481545375;
  CHECK(ev == doctest::Approx(-q * q).epsilon(1e-5));
}

TEST_CASE("an exact linear zero mode stays exact at every grid size") {
  // psi(0) + psi'(0) = 0 with a Dirichlet far wall admits psi = x - 1
  const BoundaryCondition tilted{{1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}};
  for (int n : {10, 37, 200}) {
    const auto hm = discretize(tilted, n);
    CHECK(std::abs(eigenvalues(hm, 1)[0]) < 1e-10);
    CHECK(negative_count(hm) == 0);
  }
}

TEST_CASE("Richardson extrapolation recovers the continuum limit at order 2") {
  const auto rr = richardson_extrapolate(family_condition(Family::A), 0,
                                         {500, 1000, 2000});
  CHECK(rr.observed_order == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::abs(rr.extrapolated - pi * pi) < 1e-8);
  CHECK(rr.error_estimate < 1e-4);
  REQUIRE(rr.values.size() == 3);
  CHECK(rr.values[0] < rr.values[1]);
  CHECK(rr.values[1] < rr.values[2]);

  const auto re = richardson_extrapolate(family_condition(Family::E), 0,
                                         {500, 1000, 2000});
  CHECK(re.observed_order == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::abs(re.extrapolated - (-1.0)) < 1e-6);
}

TEST_CASE("Richardson refuses non-doubling or short sequences") {
  const auto bc = family_condition(Family::A);
  CHECK_THROWS_AS(richardson_extrapolate(bc, 0, {500, 1500, 3000}), std::invalid_argument);
  CHECK_THROWS_AS(richardson_extrapolate(bc, 0, {500, 1000}), std::invalid_argument);
  CHECK_THROWS_AS(richardson_extrapolate(bc, -1, {500, 1000, 2000}), std::invalid_argument);
  CHECK_THROWS_AS(richardson_extrapolate(bc, 5000, {500, 1000, 2000}),
                  std::invalid_argument);
}

TEST_CASE("Richardson flags eigenvalues stuck at the roundoff floor") {
  // the double-Neumann ground state is exactly zero at every grid size, so no
  // convergence order exists for it
  CHECK_THROWS_AS(
      richardson_extrapolate(family_condition(Family::B), 0, {500, 1000, 2000}),
      ConvergenceDiagnostic);
  // its first excited state behaves normally
  const auto rr = richardson_extrapolate(family_condition(Family::B), 1,
                                         {500, 1000, 2000});
  CHECK(rr.observed_order == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::abs(rr.extrapolated - pi * pi) < 1e-7);
}
