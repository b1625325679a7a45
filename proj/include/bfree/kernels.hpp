#pragma once

// Data-parallel inner loops over {0,1} byte streams (one symbol per byte).
// Every kernel has a scalar reference; vector variants are chosen once at startup
// from what the CPU reports, and can be pinned with BFREE_ISA=scalar|avx2|neon.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace bfree::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  // out[m] = bit w(m) of `rule`, w(m) = in[m]*2^(width-1) + ... + in[m+width-1]; reads n + width - 1 inputs.
  void (*apply_rule)(const std::uint8_t* in, std::size_t n, int width, std::uint64_t rule, std::uint8_t* out);
  // Number of indices with a[i] != b[i].
  std::size_t (*count_mismatch)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
  // out[i] = (a[i] != b[i]).
  void (*mismatch_flags)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t* out);
  // out[i] = 1 - in[i].
  void (*complement)(const std::uint8_t* in, std::size_t n, std::uint8_t* out);
};

bool available(Isa isa) noexcept;
const KernelTable& table(Isa isa);
const KernelTable& active();

// Span conveniences over active().
void apply_rule(std::span<const std::uint8_t> in, int width, std::uint64_t rule, std::span<std::uint8_t> out);
std::size_t count_mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
void mismatch_flags(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::span<std::uint8_t> out);
void complement(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

namespace detail {
const KernelTable& scalar_table() noexcept;
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace bfree::kernels
