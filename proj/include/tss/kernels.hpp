#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; SIMD variants are compiled in separate translation units
// and chosen once at startup from what the CPU reports. All variants of a
// kernel must produce identical output (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tss::kernels {

// Bytes of image storage behind every Permutation.
inline constexpr std::size_t kPermStorage = 128;

// Number of leading bytes a compose kernel reads and writes for degree n.
constexpr std::size_t active_span(std::size_t n) { return (n + 15) & ~std::size_t{15}; }

struct KernelTable {
  const char* name;

  // out[i] = p[q[i]] for i < active_span(n). Buffers hold kPermStorage bytes,
  // are 16-byte aligned, and bytes in [n, active_span(n)) of p and q are the
  // identity. Bytes past active_span(n) of out may be clobbered.
  void (*compose)(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out, std::size_t n);

  // Writes, in ascending order, every index i < len with row[i] equal to one
  // of values[0..nvalues). Returns how many were written. out must have room
  // for len entries.
  std::size_t (*filter_members)(const std::uint16_t* row, std::size_t len, const std::uint16_t* values,
                                std::size_t nvalues, std::uint32_t* out);
};

const KernelTable& scalar_kernels();

// Variants compiled into this build and supported by the running CPU,
// scalar first.
std::span<const KernelTable* const> available_kernels();

// The table used by the library. Defaults to the widest available variant;
// the TSS_KERNELS environment variable ("scalar", "avx2", "neon") overrides.
const KernelTable& active();

// Switches the active table by name. Returns false if unavailable.
bool select(std::string_view name);

namespace detail {
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace tss::kernels
