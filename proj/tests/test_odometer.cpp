#include <doctest.h>

#include <random>

#include "bfree/error.hpp"
#include "bfree/odometer.hpp"
#include "oracles.hpp"

using bfree::Int;
using bfree::OdometerElement;

namespace {

const bfree::Family& b357() {
  static const bfree::Family f = bfree::Family::make({3, 5, 7});
  return f;
}

OdometerElement random_element(std::mt19937_64& rng, int depth) {
  const Int top = b357().period(depth);
  return OdometerElement::from_integer(b357(), std::uniform_int_distribution<Int>(0, top - 1)(rng), depth);
}

}  // namespace

TEST_SUITE("odometer") {
  TEST_CASE("from_integer reduces each level") {
    const auto g = OdometerElement::from_integer(b357(), -1, 3);
    CHECK(g.residues() == std::vector<Int>{5, 59, 839});
    CHECK(g.moduli() == std::vector<Int>{6, 60, 840});
    CHECK(g.residue(2) == 59);
  }

  TEST_CASE("make validates compatibility") {
    CHECK_NOTHROW(OdometerElement::make(b357(), {5, 59}));
    CHECK_THROWS_AS(OdometerElement::make(b357(), {5, 58}), bfree::Error);
    CHECK_THROWS_AS(OdometerElement::make(b357(), {6}), bfree::Error);
  }

  TEST_CASE("addition is a homomorphism from the integers") {
    for (Int a = -10000; a <= 10000; a += 997) {
      for (Int b = -10000; b <= 10000; b += 1201) {
        const auto lhs = OdometerElement::from_integer(b357(), a, 3) + OdometerElement::from_integer(b357(), b, 3);
        CHECK(lhs == OdometerElement::from_integer(b357(), a + b, 3));
      }
    }
    CHECK_THROWS_AS(OdometerElement::from_integer(b357(), 1, 2) + OdometerElement::from_integer(b357(), 1, 3),
                    bfree::Error);
    CHECK(OdometerElement::from_integer(b357(), 4, 3).translate() == OdometerElement::from_integer(b357(), 5, 3));
  }

  TEST_CASE("metric is an ultrametric") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const auto g = random_element(rng, 3), h = random_element(rng, 3), k = random_element(rng, 3);
      CHECK(bfree::metric(g, h) == bfree::metric(h, g));
      CHECK(bfree::metric(g, g) == bfree::Rational(0));
      CHECK(bfree::metric(g, k) <= std::max(bfree::metric(g, h), bfree::metric(h, k)));
    }
  }

  TEST_CASE("shifted skeleton moves holes by -n_t") {
    for (int t = 1; t <= 3; ++t) {
      const auto base = bfree::skeleton_exact(b357(), t);
      const Int p = base.period;
      for (Int n = 0; n < p; ++n) {
        const auto g = OdometerElement::from_integer(b357(), n, t);
        const auto moved = bfree::shifted_skeleton(b357(), t, g);
        std::vector<Int> want;
        for (Int hole : base.holes) want.push_back(oracle::pos_mod(hole - n, p));
        std::sort(want.begin(), want.end());
        REQUIRE(moved.holes == want);
      }
    }
  }

  TEST_CASE("point_of is periodic at each level it fills") {
    const auto g = OdometerElement::from_integer(b357(), 17, 3);
    const auto x = bfree::point_of(b357(), g, 0, 3 * 840);
    for (int t = 1; t <= 3; ++t) {
      const Int p = b357().period(t);
      const auto a = bfree::shifted_skeleton(b357(), t, g);
      for (Int i = 0; i + p < static_cast<Int>(x.size()); ++i) {
        if (!a.is_hole(i)) CHECK(x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(i + p)]);
      }
    }
    // An integer point agrees with eta translated, wherever it is filled.
    for (Int i = 0; i < static_cast<Int>(x.size()); ++i) {
      if (x[static_cast<std::size_t>(i)] != bfree::Cell::Hole) {
        CHECK(static_cast<int>(x[static_cast<std::size_t>(i)]) == oracle::eta({3, 5, 7}, 17 + i));
      }
    }
  }

  TEST_CASE("classification of simple elements") {
    const auto c0 = bfree::classify_at_depth(b357(), OdometerElement::from_integer(b357(), 0, 3));
    CHECK_FALSE(c0.in_g2);
    CHECK(c0.in_g0_at_depth);
    CHECK(bfree::classify_at_depth(b357(), OdometerElement::from_integer(b357(), 2, 1)).in_g2);
    const auto g = OdometerElement::make(b357(), {2, 8});
    CHECK(bfree::classify_at_depth(b357(), g).in_g2);
    // A bounded integer translate of a G_2 element is found as a G_1 witness.
    const auto moved = bfree::classify_at_depth(b357(), g + OdometerElement::from_integer(b357(), 3, 2));
    CHECK_FALSE(moved.in_g2);
    CHECK(moved.g1_witness == Int{-3});
  }
}
