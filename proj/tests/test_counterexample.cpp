#include <doctest.h>

#include "bfree/automorphism.hpp"
#include "bfree/counterexample.hpp"
#include "bfree/error.hpp"
#include "oracles.hpp"

using bfree::Int;

namespace {

// Independent string build: B_{t+1} = B c ~B c B, holes never filled.
std::string b_block(const std::string& seed, int depth, const std::vector<int>& bits) {
  std::string b = seed;
  for (int t = 1; t < depth; ++t) {
    std::string neg = b;
    for (char& c : neg) c = c == '1' ? '0' : '1';
    const std::size_t idx = static_cast<std::size_t>(t - 1);
    const char c = idx < bits.size() && bits[idx] ? '1' : '0';
    b = b + c + neg + c + b;
  }
  return b;
}

}  // namespace

TEST_SUITE("counterexample") {
  TEST_CASE("first blocks") {
    const auto blocks = bfree::build_blocks({"1", {}, 3});
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].cells_string() == "1_0_");
    CHECK(blocks[1].cells_string() == "10001_01110_");
    CHECK(blocks[1].holes == std::vector<Int>{5, 11});
  }

  TEST_CASE("tripling, refinement and fill ratio") {
    const auto blocks = bfree::build_blocks({"1", {1, 0, 1}, 6});
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      const auto& lo = blocks[i];
      const auto& hi = blocks[i + 1];
      CHECK(hi.period == 3 * lo.period);
      for (Int s = 0; s < hi.period; ++s) {
        const auto c = lo.cells[static_cast<std::size_t>(s % lo.period)];
        if (c != bfree::Cell::Hole) CHECK(hi.cells[static_cast<std::size_t>(s)] == c);
      }
    }
    for (const auto& b : blocks) {
      const Int filled = b.period - static_cast<Int>(b.holes.size());
      CHECK(bfree::Rational(filled, b.period) == bfree::Rational(1) - bfree::Rational(2, b.period));
    }
  }

  TEST_CASE("window equals the independent string build") {
    for (const std::vector<int>& bits : {std::vector<int>{}, std::vector<int>{1, 1, 0, 1, 0, 1}}) {
      const bfree::ToeplitzConstruction c{"10", bits, 7};
      const std::string want = b_block("10", 7, bits);
      const auto w = bfree::window_of(c, 0, static_cast<Int>(want.size()));
      CHECK(w.to_string() == want);
    }
  }

  TEST_CASE("unfilled positions raise DepthInsufficient") {
    const bfree::ToeplitzConstruction c{"1", {}, 2};
    try {
      (void)bfree::window_of(c, 0, 20);
      FAIL("expected DepthInsufficient");
    } catch (const bfree::DepthInsufficient& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(bfree::window_of({"1", {}, 6}, -1, 0), bfree::DepthInsufficient);
    CHECK(bfree::depth_to_fill(c, 1) == 1);
    CHECK(bfree::depth_to_fill(c, 5) == 2);
    CHECK(bfree::depth_to_fill(c, 6) == 3);
  }

  TEST_CASE("complement closure and the positive control search") {
    bfree::ToeplitzConstruction c{"1", {}, 4};
    const Int span = 4 * bfree::build_blocks(c).back().period;
    c.depth = bfree::depth_to_fill(c, span);
    for (int len = 1; len <= 6; ++len) CHECK(bfree::complement_closure_check(c, len, 4));
    const auto w = bfree::window_of(c, 0, span);
    const auto r = bfree::endomorphism_search(w, {1, 0, 6, 1'000'000, 0});
    bool complement = false, identity = false;
    for (const auto& s : r.survivors) {
      complement = complement || (s.cls == bfree::CodeClass::Complement && s.code.rule == 1);
      identity = identity || (s.cls == bfree::CodeClass::ShiftPower && s.code.rule == 2);
    }
    CHECK(complement);
    CHECK(identity);
  }

  TEST_CASE("complement_closed on small windows") {
    CHECK(bfree::complement_closed(bfree::SymbolWindow::from_string(0, "00110"), 2));
    CHECK_FALSE(bfree::complement_closed(bfree::SymbolWindow::from_string(0, "0110"), 2));
  }

  TEST_CASE("detected_period") {
    CHECK(bfree::detected_period(bfree::SymbolWindow::from_string(0, "011011011"), 5) == Int{3});
    const bfree::ToeplitzConstruction c{"1", {}, 6};
    CHECK_FALSE(bfree::detected_period(bfree::window_of(c, 0, 300), 100).has_value());
  }
}
