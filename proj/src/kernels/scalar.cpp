#include "bfree/kernels.hpp"

namespace bfree::kernels::detail {

namespace {

void apply_rule_scalar(const std::uint8_t* in, std::size_t n, int width, std::uint64_t rule, std::uint8_t* out) {
  if (n == 0) return;
  const std::uint32_t mask = (width >= 32) ? 0xffffffffu : ((1u << width) - 1u);
  std::uint32_t word = 0;
  for (int i = 0; i < width - 1; ++i) word = (word << 1) | in[i];
  for (std::size_t m = 0; m < n; ++m) {
    word = ((word << 1) | in[m + static_cast<std::size_t>(width) - 1]) & mask;
    out[m] = static_cast<std::uint8_t>((rule >> word) & 1u);
  }
}

std::size_t count_mismatch_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (a[i] != b[i]);
  return count;
}

void mismatch_flags_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] != b[i]);
}

void complement_scalar(const std::uint8_t* in, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(1u - in[i]);
}

constexpr KernelTable kScalar{Isa::Scalar, apply_rule_scalar, count_mismatch_scalar, mismatch_flags_scalar,
                              complement_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace bfree::kernels::detail
