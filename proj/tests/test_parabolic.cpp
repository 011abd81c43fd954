#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "parcr/parabolic.hpp"

using namespace parcr;

namespace {

WeightSystem rank2_quarter_half() {
  return WeightSystem::full_flag({{Rational(1, 4), Rational(1, 2)}});
}

WeightSystem rank3_ninths_two_points() {
  return WeightSystem::full_flag(
      {{Rational(0), Rational(1, 9), Rational(2, 9)},
       {Rational(0), Rational(1, 9), Rational(2, 9)}});
}

}  // namespace

TEST_CASE("parabolic degree") {
  CHECK(par_degree(ParabolicData(2, 1, rank2_quarter_half())) ==
        Rational(7, 4));
  CHECK(par_degree(ParabolicData(3, 0, rank3_ninths_two_points())) ==
        Rational(2, 3));
  CHECK(par_degree(ParabolicData(4, -5, WeightSystem())) == Rational(-5));
}

TEST_CASE("parabolic slope") {
  CHECK(par_slope(ParabolicData(2, 1, rank2_quarter_half())) ==
        Rational(7, 8));
  CHECK(par_slope(ParabolicData(3, 0, rank3_ninths_two_points())) ==
        Rational(2, 9));
  CHECK(par_slope(ParabolicData(3, 7, WeightSystem())) == Rational(7, 3));
}

TEST_CASE("parabolic degree shifts with the underlying degree") {
  const WeightSystem w = rank3_ninths_two_points();
  const Rational base = par_degree(ParabolicData(3, 0, w));
  for (long long n : {-4LL, 1LL, 9LL}) {
    CHECK(par_degree(ParabolicData(3, n, w)) == base + Rational(n));
  }
}

TEST_CASE("trivial weights degrade to ordinary slope") {
  const WeightSystem trivial({FlagPoint{{Rational(0)}, {3}},
                              FlagPoint{{Rational(0)}, {3}}});
  const ParabolicData p(3, 5, trivial);
  CHECK(par_degree(p) == Rational(5));
  CHECK(par_slope(p) == Rational(5, 3));
}

TEST_CASE("weighted flag multiplicities") {
  const WeightSystem w(
      {FlagPoint{{Rational(0), Rational(1, 4), Rational(1, 2)}, {2, 1, 1}}});
  CHECK(par_degree(ParabolicData(4, 2, w)) == Rational(11, 4));
}

TEST_CASE("semistability classification") {
  CHECK(semistable_compare(Rational(7, 8), Rational(1)) ==
        SlopeClass::stable_direction);
  CHECK(semistable_compare(Rational(1), Rational(1)) ==
        SlopeClass::semistable_boundary);
  CHECK(semistable_compare(Rational(9, 8), Rational(1)) ==
        SlopeClass::destabilizing);
}

TEST_CASE("concentration") {
  CHECK(is_concentrated(
      WeightSystem::full_flag({{Rational(0), Rational(1, 10), Rational(1, 5)}}),
      3, 1));
  CHECK_FALSE(is_concentrated(
      WeightSystem::full_flag({{Rational(0), Rational(3, 10), Rational(1, 2)}}),
      3, 1));
  // Boundary: the spread must be strictly below 4/(m r^2).
  CHECK_FALSE(is_concentrated(
      WeightSystem::full_flag({{Rational(0), Rational(1, 9), Rational(4, 9)}}),
      3, 1));
  CHECK(is_concentrated(WeightSystem::full_flag({{Rational(1, 3)}}), 1, 1));
  CHECK(is_concentrated(WeightSystem(), 5, 0));
}

TEST_CASE("concentration is monotone under shrinking spreads") {
  for (long long denom : {9LL, 10LL, 24LL, 100LL}) {
    const WeightSystem w = WeightSystem::full_flag(
        {{Rational(0), Rational(1, denom), Rational(2, denom)}});
    if (is_concentrated(w, 3, 1)) {
      const WeightSystem half = WeightSystem::full_flag(
          {{Rational(0), Rational(1, 2 * denom), Rational(1, denom)}});
      CHECK(is_concentrated(half, 3, 1));
    }
  }
}

TEST_CASE("concentration rejects non-full flags") {
  const WeightSystem partial({FlagPoint{{Rational(0)}, {3}}});
  CHECK_THROWS_AS(is_concentrated(partial, 3, 1), std::domain_error);
  CHECK_THROWS_AS(
      is_concentrated(WeightSystem::full_flag({{Rational(0), Rational(1, 2)}}),
                      2, 2),
      std::domain_error);
}

TEST_CASE("weight system invariants") {
  CHECK_THROWS_AS(WeightSystem::full_flag({{Rational(1, 2), Rational(1, 4)}}),
                  std::domain_error);
  CHECK_THROWS_AS(WeightSystem::full_flag({{Rational(0), Rational(0)}}),
                  std::domain_error);
  CHECK_THROWS_AS(WeightSystem::full_flag({{Rational(-1, 4)}}),
                  std::domain_error);
  CHECK_THROWS_AS(WeightSystem::full_flag({{Rational(0), Rational(1)}}),
                  std::domain_error);
  CHECK_THROWS_AS(WeightSystem({FlagPoint{{Rational(0)}, {0}}}),
                  std::domain_error);
  CHECK_THROWS_AS(WeightSystem({FlagPoint{{Rational(0)}, {1, 2}}}),
                  std::domain_error);
  CHECK_THROWS_AS(WeightSystem({FlagPoint{{}, {}}}), std::domain_error);
}

TEST_CASE("parabolic data invariants") {
  CHECK_THROWS_AS(ParabolicData(0, 1, WeightSystem()), std::domain_error);
  CHECK_THROWS_AS(ParabolicData(3, 1, rank2_quarter_half()),
                  std::domain_error);
  CHECK_NOTHROW(ParabolicData(2, 1, rank2_quarter_half()));
}
