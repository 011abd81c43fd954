#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "parcr/cohomology.hpp"

using namespace parcr;

namespace {

GradedDims table_of(Rational span,
                    std::vector<std::pair<Rational, Integer>> entries) {
  GradedDims t(std::move(span));
  for (const auto& [degree, dim] : entries) t.add(degree, dim);
  return t;
}

const GeometryParams kR3{3, 2, 1, 1};

SectorInput frozen_input() {
  SectorInput in;
  in.untwisted = table_of(Rational(22), {{Rational(0), Integer(1)}});
  in.prym_quotient = table_of(Rational(4), {{Rational(0), Integer(1)}});
  return in;
}

}  // namespace

TEST_CASE("graded dimension tables") {
  GradedDims t(Rational(4));
  t.add(Rational(1, 3), 2);
  t.add(Rational(1, 3), 3);
  t.add(Rational(4), 1);
  t.add(Rational(2), 0);  // zero entries are skipped
  CHECK(t.span() == Rational(4));
  CHECK(t.at(Rational(1, 3)) == 5);
  CHECK(t.at(Rational(2)) == 0);
  CHECK(t.total() == 6);
  CHECK(t.entries().size() == 2);

  CHECK_THROWS_AS(GradedDims(Rational(-1)), std::domain_error);
  CHECK_THROWS_AS(t.add(Rational(5), 1), std::domain_error);
  CHECK_THROWS_AS(t.add(Rational(-1, 2), 1), std::domain_error);
  CHECK_THROWS_AS(t.add(Rational(1), -1), std::domain_error);

  CHECK(t == t);
  GradedDims other(Rational(4));
  CHECK_FALSE(t == other);
}

TEST_CASE("assembly of the frozen rank-3 case") {
  const GradedDims out = assemble(kR3, frozen_input());
  CHECK(out.span() == Rational(22));
  CHECK(out.at(Rational(0)) == 1);
  CHECK(out.at(Rational(26, 3)) == 240);
  CHECK(out.at(Rational(28, 3)) == 240);
  CHECK(out.total() == 481);
  CHECK(out.entries().size() == 3);
}

TEST_CASE("assembly is additive in the sector tables") {
  SectorInput doubled = frozen_input();
  doubled.prym_quotient.add(Rational(0), 1);
  const GradedDims out = assemble(kR3, doubled);
  CHECK(out.at(Rational(26, 3)) == 480);
  CHECK(out.at(Rational(0)) == 1);

  SectorInput no_prym = frozen_input();
  no_prym.prym_quotient = GradedDims(Rational(4));
  CHECK(assemble(kR3, no_prym) == no_prym.untwisted);
}

TEST_CASE("assembly validates the spans") {
  SectorInput in = frozen_input();
  in.untwisted = GradedDims(Rational(20));
  CHECK_THROWS_AS(assemble(kR3, in), std::domain_error);

  in = frozen_input();
  in.prym_quotient = GradedDims(Rational(6));
  CHECK_THROWS_AS(assemble(kR3, in), std::domain_error);
}

TEST_CASE("duality detection") {
  CHECK(duality_check(table_of(Rational(3),
                               {{Rational(0), Integer(1)},
                                {Rational(3), Integer(1)}}))
            .ok);
  const DualityReport bad =
      duality_check(table_of(Rational(3), {{Rational(0), Integer(1)}}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.bad_degrees == std::vector<Rational>{Rational(0), Rational(3)});

  // Palindromic inputs assemble to a palindromic table.
  SectorInput in;
  in.untwisted = table_of(Rational(22), {{Rational(0), Integer(1)},
                                         {Rational(11), Integer(2)},
                                         {Rational(22), Integer(1)}});
  in.prym_quotient = table_of(Rational(4), {{Rational(0), Integer(1)},
                                            {Rational(4), Integer(1)}});
  const DualityReport good = duality_check(assemble(kR3, in));
  CHECK(good.ok);
  CHECK(good.span == Rational(22));

  // The one-sided placeholder cannot be palindromic once twists enter.
  const DualityReport skew = duality_check(assemble(kR3, frozen_input()));
  CHECK_FALSE(skew.ok);
  CHECK_FALSE(skew.bad_degrees.empty());
}

TEST_CASE("sector references") {
  const SectorRef u = SectorRef::untwisted();
  CHECK_FALSE(u.is_twisted());
  CHECK_THROWS_AS(u.l(), std::domain_error);
  const SectorRef t = SectorRef::twisted({1, 2});
  CHECK(t.is_twisted());
  CHECK(t.l() == std::vector<int>{1, 2});
  CHECK(t == SectorRef::twisted({1, 2}));
  CHECK_FALSE(t == u);
}

TEST_CASE("pairing partners") {
  const auto [partner, degree] =
      pairing_partner(SectorRef::twisted({1}), Rational(26, 3), kR3);
  CHECK(partner == SectorRef::twisted({2}));
  CHECK(degree == Rational(40, 3));

  const auto [back, back_degree] = pairing_partner(partner, degree, kR3);
  CHECK(back == SectorRef::twisted({1}));
  CHECK(back_degree == Rational(26, 3));

  const auto [u, uq] =
      pairing_partner(SectorRef::untwisted(), Rational(5), kR3);
  CHECK(u == SectorRef::untwisted());
  CHECK(uq == Rational(17));

  // Rank 2: the single twisted tuple is self-complementary.
  const GeometryParams r2{2, 2, 1, 1};
  const auto [self, q2] =
      pairing_partner(SectorRef::twisted({1}), Rational(3), r2);
  CHECK(self == SectorRef::twisted({1}));
  CHECK(q2 == Rational(5));
}

TEST_CASE("pairing rejects out-of-span degrees") {
  CHECK_THROWS_AS(pairing_partner(SectorRef::twisted({1}), Rational(0), kR3),
                  std::domain_error);
  CHECK_THROWS_AS(pairing_partner(SectorRef::twisted({1}), Rational(22), kR3),
                  std::domain_error);
  CHECK_THROWS_AS(pairing_partner(SectorRef::untwisted(), Rational(23), kR3),
                  std::domain_error);
  CHECK_THROWS_AS(pairing_partner(SectorRef::twisted({1, 2}), Rational(9), kR3),
                  std::invalid_argument);
}

TEST_CASE("internal degree sums separate the two conventions") {
  const SectorRef t = SectorRef::twisted({1});
  CHECK(pairing_internal_degree_sum(t, Rational(26, 3), kR3,
                                    PairingConvention::complementary_sector) ==
        Rational(4));
  CHECK(pairing_internal_degree_sum(t, Rational(26, 3), kR3,
                                    PairingConvention::same_sector) ==
        Rational(14, 3));
  CHECK(pairing_internal_degree_sum(SectorRef::untwisted(), Rational(5), kR3,
                                    PairingConvention::same_sector) ==
        Rational(22));
}

TEST_CASE("obstruction ranks") {
  CHECK(obstruction_rank(
            2, kR3, {Rational(13, 3), Rational(0), Rational(14, 3)}) == 0);
  CHECK(obstruction_rank(
            2, kR3, {Rational(13, 3), Rational(13, 3), Rational(13, 3)}) == 4);
  CHECK_THROWS_AS(
      obstruction_rank(2, kR3,
                       {Rational(13, 3), Rational(13, 3), Rational(14, 3)}),
      InvalidComponentCombination);
  CHECK_THROWS_AS(
      obstruction_rank(0, kR3, {Rational(0), Rational(0), Rational(0)}),
      std::domain_error);
  CHECK_THROWS_AS(obstruction_rank(2, kR3, {Rational(0), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      obstruction_rank(2, kR3, {Rational(-1), Rational(0), Rational(0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      obstruction_rank(2, kR3, {Rational(1, 2), Rational(0), Rational(0)}),
      std::invalid_argument);
}

TEST_CASE("orbifold scaling") {
  CHECK(orbifold_scale(Rational(81), GeometryParams{3, 2, 0, 1}) == 1);
  CHECK(orbifold_scale(Rational(1), GeometryParams{2, 2, 0, 1}) ==
        Rational(1, 16));
  CHECK(orbifold_scale(Rational(0), GeometryParams{3, 2, 0, 1}) == 0);
}
