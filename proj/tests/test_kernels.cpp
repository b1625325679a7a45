#include <doctest.h>

#include <random>

#include "bfree/kernels.hpp"
#include "oracles.hpp"

namespace k = bfree::kernels;

namespace {

std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1u);
  return v;
}

std::vector<k::Isa> isas() {
  std::vector<k::Isa> out{k::Isa::Scalar};
  if (k::available(k::Isa::Avx2)) out.push_back(k::Isa::Avx2);
  if (k::available(k::Isa::Neon)) out.push_back(k::Isa::Neon);
  return out;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar is always available and the active table is usable") {
    CHECK(k::available(k::Isa::Scalar));
    MESSAGE("active isa: " << k::to_string(k::active().isa));
    CHECK(k::available(k::active().isa));
  }

  TEST_CASE("apply_rule agrees with the oracle on every isa") {
    std::mt19937_64 rng(1);
    for (auto isa : isas()) {
      const auto& table = k::table(isa);
      for (int trial = 0; trial < 300; ++trial) {
        const int width = 1 + static_cast<int>(rng() % 6);
        const std::size_t n = static_cast<std::size_t>(width) + rng() % 300;
        const auto in = random_bits(rng, n);
        const std::uint64_t rule = width == 6 ? rng() : rng() & ((std::uint64_t{1} << (1u << width)) - 1);
        std::vector<std::uint8_t> out(n - static_cast<std::size_t>(width) + 1);
        table.apply_rule(in.data(), out.size(), width, rule, out.data());
        REQUIRE(out == oracle::apply_rule(in, width, rule));
      }
    }
  }

  TEST_CASE("mismatch kernels and complement agree with scalar") {
    std::mt19937_64 rng(2);
    const auto& ref = k::table(k::Isa::Scalar);
    for (auto isa : isas()) {
      const auto& table = k::table(isa);
      for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 1000;
        const auto a = random_bits(rng, n);
        auto b = a;
        for (std::size_t i = 0; i < n; ++i) {
          if (rng() % 7 == 0) b[i] ^= 1u;
        }
        std::size_t expected = 0;
        for (std::size_t i = 0; i < n; ++i) expected += a[i] != b[i];
        CHECK(table.count_mismatch(a.data(), b.data(), n) == expected);
        CHECK(ref.count_mismatch(a.data(), b.data(), n) == expected);

        std::vector<std::uint8_t> f1(n), f2(n), c1(n), c2(n);
        table.mismatch_flags(a.data(), b.data(), n, f1.data());
        ref.mismatch_flags(a.data(), b.data(), n, f2.data());
        CHECK(f1 == f2);
        table.complement(a.data(), n, c1.data());
        ref.complement(a.data(), n, c2.data());
        CHECK(c1 == c2);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(c1[i] == (a[i] ^ 1u));
      }
    }
  }

  TEST_CASE("span wrappers check sizes") {
    std::vector<std::uint8_t> a{0, 1, 1}, out(2);
    k::apply_rule(a, 2, 0b0110, out);
    CHECK(out == std::vector<std::uint8_t>{1, 0});
    std::vector<std::uint8_t> too_long(3);
    CHECK_THROWS(k::apply_rule(a, 2, 0b0110, too_long));
  }
}
