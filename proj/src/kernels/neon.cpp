// NEON kernels for aarch64, where Advanced SIMD is part of the baseline ISA.

#include <arm_neon.h>

#include "tss/kernels.hpp"

namespace tss::kernels {
namespace {

void compose_neon(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out, std::size_t n) {
  const std::size_t span = active_span(n);
  if (span <= 16) {
    vst1q_u8(out, vqtbl1q_u8(vld1q_u8(p), vld1q_u8(q)));
    return;
  }
  // tbl returns 0 for out-of-range indices and tbx leaves the lane alone, so
  // two 64-byte lookups cover the whole 128-byte table.
  const uint8x16x4_t low = {vld1q_u8(p), vld1q_u8(p + 16), vld1q_u8(p + 32), vld1q_u8(p + 48)};
  const uint8x16x4_t high = {vld1q_u8(p + 64), vld1q_u8(p + 80), vld1q_u8(p + 96), vld1q_u8(p + 112)};
  const uint8x16_t sixty_four = vdupq_n_u8(64);
  for (std::size_t block = 0; block < span; block += 16) {
    const uint8x16_t index = vld1q_u8(q + block);
    uint8x16_t result = vqtbl4q_u8(low, index);
    if (span > 64) result = vqtbx4q_u8(result, high, vsubq_u8(index, sixty_four));
    vst1q_u8(out + block, result);
  }
}

std::size_t filter_members_neon(const std::uint16_t* row, std::size_t len, const std::uint16_t* values,
                                std::size_t nvalues, std::uint32_t* out) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const uint16x8_t lane = vld1q_u16(row + i);
    uint16x8_t hit = vdupq_n_u16(0);
    for (std::size_t j = 0; j < nvalues; ++j) hit = vorrq_u16(hit, vceqq_u16(lane, vdupq_n_u16(values[j])));
    if (vmaxvq_u16(hit) == 0) continue;
    std::uint16_t flags[8];
    vst1q_u16(flags, hit);
    for (std::size_t b = 0; b < 8; ++b) {
      if (flags[b] != 0) out[count++] = static_cast<std::uint32_t>(i + b);
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

constexpr KernelTable kNeon{"neon", compose_neon, filter_members_neon};

}  // namespace

namespace detail {
const KernelTable* neon_table() { return &kNeon; }
}  // namespace detail

}  // namespace tss::kernels
