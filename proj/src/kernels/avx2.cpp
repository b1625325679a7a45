#include "bfree/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace bfree::kernels::detail {

namespace {

std::uint8_t rule_at(const std::uint8_t* in, std::size_t m, int width, std::uint64_t rule) {
  std::uint32_t word = 0;
  for (int i = 0; i < width; ++i) word = (word << 1) | in[m + static_cast<std::size_t>(i)];
  return static_cast<std::uint8_t>((rule >> word) & 1u);
}

// 16-entry byte table for words 16*block .. 16*block+15, replicated into both lanes.
__m256i rule_table(std::uint64_t rule, int block) {
  alignas(16) std::uint8_t bytes[16];
  for (int w = 0; w < 16; ++w) bytes[w] = static_cast<std::uint8_t>((rule >> (16 * block + w)) & 1u);
  return _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(bytes)));
}

void apply_rule_avx2(const std::uint8_t* in, std::size_t n, int width, std::uint64_t rule, std::uint8_t* out) {
  if (width > 6) {
    scalar_table().apply_rule(in, n, width, rule, out);
    return;
  }
  const int blocks = width <= 4 ? 1 : (1 << (width - 4));
  __m256i tables[4];
  for (int b = 0; b < blocks; ++b) tables[b] = rule_table(rule, b);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);

  std::size_t m = 0;
  for (; m + 32 <= n; m += 32) {
    __m256i word = _mm256_setzero_si256();
    for (int i = 0; i < width; ++i) {
      const __m256i bit = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + m + static_cast<std::size_t>(i)));
      word = _mm256_add_epi8(_mm256_add_epi8(word, word), bit);
    }
    __m256i result;
    if (blocks == 1) {
      result = _mm256_shuffle_epi8(tables[0], word);
    } else {
      const __m256i lo = _mm256_and_si256(word, low_nibble);
      const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(word, 4), low_nibble);
      result = _mm256_setzero_si256();
      for (int b = 0; b < blocks; ++b) {
        const __m256i hit = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(static_cast<char>(b)));
        result = _mm256_or_si256(result, _mm256_and_si256(hit, _mm256_shuffle_epi8(tables[b], lo)));
      }
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + m), result);
  }
  for (; m < n; ++m) out[m] = rule_at(in, m, width, rule);
}

std::size_t count_mismatch_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    count += static_cast<std::size_t>(__builtin_popcount(~eq));
  }
  for (; i < n; ++i) count += (a[i] != b[i]);
  return count;
}

void mismatch_flags_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t* out) {
  const __m256i ones = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i eq = _mm256_cmpeq_epi8(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_andnot_si256(eq, ones));
  }
  for (; i < n; ++i) out[i] = (a[i] != b[i]);
}

void complement_avx2(const std::uint8_t* in, std::size_t n, std::uint8_t* out) {
  const __m256i ones = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi8(ones, v));
  }
  for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(1u - in[i]);
}

constexpr KernelTable kAvx2{Isa::Avx2, apply_rule_avx2, count_mismatch_avx2, mismatch_flags_avx2, complement_avx2};

}  // namespace

const KernelTable* avx2_table() noexcept { return &kAvx2; }

}  // namespace bfree::kernels::detail

#else

namespace bfree::kernels::detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace bfree::kernels::detail

#endif
