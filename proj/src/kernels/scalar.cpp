#include "tss/kernels.hpp"

namespace tss::kernels {
namespace {

void compose_scalar(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out, std::size_t n) {
  const std::size_t span = active_span(n);
  for (std::size_t i = 0; i < span; ++i) out[i] = p[q[i]];
}

std::size_t filter_members_scalar(const std::uint16_t* row, std::size_t len, const std::uint16_t* values,
                                  std::size_t nvalues, std::uint32_t* out) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint16_t v = row[i];
    for (std::size_t j = 0; j < nvalues; ++j) {
      if (values[j] == v) {
        out[count++] = static_cast<std::uint32_t>(i);
        break;
      }
    }
  }
  return count;
}

constexpr KernelTable kScalar{"scalar", compose_scalar, filter_members_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace tss::kernels
