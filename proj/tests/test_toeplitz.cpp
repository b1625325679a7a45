#include <doctest.h>

#include <numeric>
#include <set>

#include "bfree/error.hpp"
#include "bfree/toeplitz.hpp"
#include "oracles.hpp"

using bfree::Int;

namespace {

const bfree::Family& b357() {
  static const bfree::Family f = bfree::Family::make({3, 5, 7});
  return f;
}

}  // namespace

TEST_SUITE("toeplitz") {
  TEST_CASE("skeleton cells at t = 1") {
    const auto a1 = bfree::skeleton_exact(b357(), 1);
    CHECK(a1.cells_string() == "01_1_1");
    CHECK(a1.holes == std::vector<Int>{2, 4});
    CHECK(bfree::SkeletonBlock::parse(1, "01_1_1") == a1);
    CHECK_THROWS_AS(bfree::SkeletonBlock::parse(1, "01x"), bfree::Error);
  }

  TEST_CASE("holes equal the divisibility oracle and count law") {
    Int count = 1;
    for (int t = 1; t <= 3; ++t) {
      count *= b357().generator(t) - 1;
      const auto block = bfree::skeleton_exact(b357(), t);
      CHECK(block.holes == oracle::holes_by_divisibility({3, 5, 7}, t));
      CHECK(static_cast<Int>(block.holes.size()) == count);
    }
  }

  TEST_CASE("holes equal the behavioural scan oracle") {
    for (int t = 1; t <= 2; ++t) {
      CHECK(bfree::skeleton_exact(b357(), t).holes == oracle::holes_by_scan({3, 5, 7}, t, 200));
    }
  }

  TEST_CASE("per_set_brute documented example") {
    const auto deep = b357().extended_for_range(-2520, 2520);
    const auto w = bfree::eta_window(deep, -2520, 2520);
    CHECK(bfree::per_set_brute(w, 6, 100) == std::vector<Int>{0, 1, 3, 5});
    CHECK_THROWS_AS(bfree::per_set_brute(w, 60, 100), bfree::Error);
  }

  TEST_CASE("skeleton refines by concatenation") {
    for (int t = 1; t < 3; ++t) {
      const auto lo = bfree::skeleton_exact(b357(), t);
      const auto hi = bfree::skeleton_exact(b357(), t + 1);
      CHECK(hi.period % lo.period == 0);
      for (Int s = 0; s < hi.period; ++s) {
        const auto c = lo.cells[static_cast<std::size_t>(s % lo.period)];
        if (c != bfree::Cell::Hole) CHECK(hi.cells[static_cast<std::size_t>(s)] == c);
      }
    }
  }

  TEST_CASE("gap law and first two holes") {
    for (int t = 1; t <= 3; ++t) {
      const auto block = bfree::skeleton_exact(b357(), t);
      CHECK(bfree::sh_gap(block) == Int{1} << t);
      CHECK(bfree::sh_gap(b357(), t) == Int{1} << t);
      CHECK(block.holes[0] == Int{1} << t);
      CHECK(block.holes[1] == Int{1} << (t + 1));
    }
  }

  TEST_CASE("hole residues fill every nonzero class") {
    for (int t = 1; t <= 3; ++t) {
      for (int i = 1; i <= t; ++i) {
        std::vector<Int> want(static_cast<std::size_t>(b357().generator(i) - 1));
        std::iota(want.begin(), want.end(), Int{1});
        CHECK(bfree::residue_classes_of_holes(b357(), t, i) == want);
      }
    }
  }

  TEST_CASE("regularity ratios") {
    CHECK(bfree::regularity_ratio(b357(), 1) == bfree::Rational(1, 3));
    CHECK(bfree::regularity_ratio(b357(), 2) == bfree::Rational(2, 15));
    CHECK(bfree::regularity_ratio(b357(), 3) == bfree::Rational(2, 35));
  }

  TEST_CASE("essential check witnesses every s < p_t for t <= 2") {
    for (int t = 1; t <= 2; ++t) {
      const Int p = b357().period(t);
      for (Int s = 1; s < p; ++s) {
        const auto w = bfree::essential_check(b357(), t, s);
        REQUIRE(w.essential_violated_by_s);
        CHECK(oracle::periodic_at({3, 5, 7}, w.witness, p, 200));
        CHECK(oracle::eta({3, 5, 7}, w.witness + w.step * s) != oracle::eta({3, 5, 7}, w.witness));
      }
    }
    const auto w = bfree::essential_check(b357(), 2, 30);
    CHECK(w.which == bfree::EssentialCase::AllDivide);
    CHECK(w.witness == 20);
  }

  TEST_CASE("periodic structure reports essential periods") {
    const auto r = bfree::periodic_structure(b357(), 3);
    REQUIRE(r.levels.size() == 3);
    for (const auto& level : r.levels) {
      CHECK(level.period == b357().period(level.t));
      CHECK(level.essential);
    }
  }
}
