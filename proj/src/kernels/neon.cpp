#include "bfree/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace bfree::kernels::detail {

namespace {

std::uint8_t rule_at(const std::uint8_t* in, std::size_t m, int width, std::uint64_t rule) {
  std::uint32_t word = 0;
  for (int i = 0; i < width; ++i) word = (word << 1) | in[m + static_cast<std::size_t>(i)];
  return static_cast<std::uint8_t>((rule >> word) & 1u);
}

void apply_rule_neon(const std::uint8_t* in, std::size_t n, int width, std::uint64_t rule, std::uint8_t* out) {
  if (width > 6) {
    scalar_table().apply_rule(in, n, width, rule, out);
    return;
  }
  // vqtbl4q covers 64 entries, enough for every width <= 6.
  std::uint8_t bytes[64] = {};
  for (int w = 0; w < (1 << width); ++w) bytes[w] = static_cast<std::uint8_t>((rule >> w) & 1u);
  const uint8x16x4_t table = vld1q_u8_x4(bytes);

  std::size_t m = 0;
  for (; m + 16 <= n; m += 16) {
    uint8x16_t word = vdupq_n_u8(0);
    for (int i = 0; i < width; ++i) {
      word = vaddq_u8(vshlq_n_u8(word, 1), vld1q_u8(in + m + static_cast<std::size_t>(i)));
    }
    vst1q_u8(out + m, vqtbl4q_u8(table, word));
  }
  for (; m < n; ++m) out[m] = rule_at(in, m, width, rule);
}

std::size_t count_mismatch_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t ne = vmvnq_u8(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    count += vaddvq_u8(vshrq_n_u8(ne, 7));
  }
  for (; i < n; ++i) count += (a[i] != b[i]);
  return count;
}

void mismatch_flags_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t* out) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t ne = vmvnq_u8(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    vst1q_u8(out + i, vshrq_n_u8(ne, 7));
  }
  for (; i < n; ++i) out[i] = (a[i] != b[i]);
}

void complement_neon(const std::uint8_t* in, std::size_t n, std::uint8_t* out) {
  const uint8x16_t ones = vdupq_n_u8(1);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) vst1q_u8(out + i, vsubq_u8(ones, vld1q_u8(in + i)));
  for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(1u - in[i]);
}

constexpr KernelTable kNeon{Isa::Neon, apply_rule_neon, count_mismatch_neon, mismatch_flags_neon, complement_neon};

}  // namespace

const KernelTable* neon_table() noexcept { return &kNeon; }

}  // namespace bfree::kernels::detail

#else

namespace bfree::kernels::detail {
const KernelTable* neon_table() noexcept { return nullptr; }
}  // namespace bfree::kernels::detail

#endif
