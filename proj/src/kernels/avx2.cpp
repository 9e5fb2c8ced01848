// AVX2 kernels. This file is the only one compiled with -mavx2; nothing here
// runs unless dispatch.cpp has confirmed CPU support.

#include <immintrin.h>

#include "tss/kernels.hpp"

namespace tss::kernels {
namespace {

void compose_avx2(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out, std::size_t n) {
  if (n <= 16) {
    const __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(p));
    const __m128i index = _mm_load_si128(reinterpret_cast<const __m128i*>(q));
    _mm_store_si128(reinterpret_cast<__m128i*>(out), _mm_shuffle_epi8(table, index));
    return;
  }

  // Larger tables: look each 16-byte chunk of p up in turn and keep the lanes
  // whose index falls inside that chunk.
  const std::size_t span = active_span(n);
  const std::size_t chunks = span / 16;
  const __m256i sixteen = _mm256_set1_epi8(16);
  const __m256i minus_one = _mm256_set1_epi8(-1);
  for (std::size_t block = 0; block < span; block += 32) {
    const __m256i index = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + block));
    __m256i result = _mm256_setzero_si256();
    for (std::size_t c = 0; c < chunks; ++c) {
      const __m256i table =
          _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(p + 16 * c)));
      const __m256i local = _mm256_sub_epi8(index, _mm256_set1_epi8(static_cast<char>(16 * c)));
      const __m256i in_chunk =
          _mm256_and_si256(_mm256_cmpgt_epi8(sixteen, local), _mm256_cmpgt_epi8(local, minus_one));
      result = _mm256_blendv_epi8(result, _mm256_shuffle_epi8(table, local), in_chunk);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + block), result);
  }
}

std::size_t filter_members_avx2(const std::uint16_t* row, std::size_t len, const std::uint16_t* values,
                                std::size_t nvalues, std::uint32_t* out) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    const __m256i lane = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    __m256i hit = _mm256_setzero_si256();
    for (std::size_t j = 0; j < nvalues; ++j) {
      hit = _mm256_or_si256(hit, _mm256_cmpeq_epi16(lane, _mm256_set1_epi16(static_cast<short>(values[j]))));
    }
    // Two mask bits per 16-bit lane; keep the low one.
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(hit)) & 0x55555555u;
    while (mask != 0) {
      out[count++] = static_cast<std::uint32_t>(i + (__builtin_ctz(mask) >> 1));
      mask &= mask - 1;
    }
  }
  for (; i < len; ++i) {
    for (std::size_t j = 0; j < nvalues; ++j) {
      if (values[j] == row[i]) {
        out[count++] = static_cast<std::uint32_t>(i);
        break;
      }
    }
  }
  return count;
}

constexpr KernelTable kAvx2{"avx2", compose_avx2, filter_members_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table() { return &kAvx2; }
}  // namespace detail

}  // namespace tss::kernels
