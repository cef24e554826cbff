#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hlbc/characters.hpp"

using namespace hlbc;

namespace {

long long coeff_sum(const HLPoly& p) {
  long long s = 0;
  for (const auto& [v, c] : p.terms) s += c.eval01(0);
  return s;
}

}  // namespace

TEST_CASE("rho") {
  CHECK(rho(LieType::C, 3) == WeightVec::from_ints({3, 2, 1}));
  CHECK(rho(LieType::B, 2) == WeightVec{std::vector<int>{3, 1}});
}

TEST_CASE("trivial weight") {
  for (LieType type : {LieType::B, LieType::C}) {
    const WeightVec zero = WeightVec::zero(2);
    const HLPoly chi = weyl_character(type, 2, zero);
    CHECK(chi.term_count() == 1);
    CHECK(chi.terms.at(zero) == TPoly::constant(1));
    CHECK(orbit_sum(type, 2, zero).term_count() == 1);
    CHECK(dimension(type, 2, zero) == 1);
  }
}

TEST_CASE("rank-2 vector representation") {
  HLPoly expected;
  for (const auto& v : {std::vector<int>{1, 0}, {0, 1}, {-1, 0}, {0, -1}})
    expected.add(WeightVec::from_ints(v), TPoly::constant(1));
  CHECK(weyl_character(LieType::C, 2, WeightVec::from_ints({1, 0})) == expected);
  CHECK(dimension(LieType::C, 2, WeightVec::from_ints({1, 0})) == 4);
}

TEST_CASE("dimensions") {
  CHECK(dimension(LieType::C, 2, WeightVec::from_ints({2, 1})) == 16);
  CHECK(coeff_sum(weyl_character(LieType::C, 2, WeightVec::from_ints({2, 1}))) == 16);
  // the rank-2 spin weight (1/2, 1/2)
  CHECK(dimension(LieType::B, 2, WeightVec{std::vector<int>{1, 1}}) == 4);
  CHECK(coeff_sum(weyl_character(LieType::B, 2, WeightVec{std::vector<int>{1, 1}})) == 4);
  CHECK(dimension(LieType::C, 3, WeightVec::from_ints({3, 2, 1})) == 512);
}

TEST_CASE("character equals dimension at the unit evaluation") {
  for (LieType type : {LieType::B, LieType::C})
    for (const auto& lam :
         {WeightVec::from_ints({2, 1}), WeightVec::from_ints({3, 1}),
          WeightVec::from_ints({2, 2}), WeightVec{std::vector<int>{3, 1}}}) {
      if (type == LieType::C && !lam.all_even()) continue;
      CHECK(coeff_sum(weyl_character(type, 2, lam)) == dimension(type, 2, lam));
    }
}

TEST_CASE("characters and orbit sums are invariant") {
  for (LieType type : {LieType::B, LieType::C}) {
    const WeightVec lam = WeightVec::from_ints({2, 1});
    const HLPoly chi = weyl_character(type, 2, lam);
    const HLPoly orb = orbit_sum(type, 2, lam);
    for (const SignedPerm& w : enumerate_group(2)) {
      CHECK(chi.apply_group_element(w) == chi);
      CHECK(orb.apply_group_element(w) == orb);
    }
  }
}

TEST_CASE("orbit sizes") {
  // regular weight: free orbit
  CHECK(orbit_sum(LieType::C, 2, WeightVec::from_ints({2, 1})).term_count() == 8);
  // stabilized weight: orbit of (1,1) has 4 elements
  CHECK(orbit_sum(LieType::C, 2, WeightVec::from_ints({1, 1})).term_count() == 4);
  CHECK(orbit_sum(LieType::C, 2, WeightVec::zero(2)).term_count() == 1);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(weyl_character(LieType::C, 2, WeightVec::from_ints({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(weyl_character(LieType::C, 2, WeightVec{std::vector<int>{3, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dimension(LieType::B, 2, WeightVec::from_ints({-1, -2})),
                  std::invalid_argument);
}
