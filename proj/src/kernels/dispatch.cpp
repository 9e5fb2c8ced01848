// Runtime kernel selection. No intrinsics in this file.

#include <atomic>
#include <cstdlib>
#include <string_view>
#include <vector>

#include "tss/kernels.hpp"

namespace tss::kernels {

#ifndef TSS_HAVE_AVX2_KERNELS
const KernelTable* detail::avx2_table() { return nullptr; }
#endif
#ifndef TSS_HAVE_NEON_KERNELS
const KernelTable* detail::neon_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const std::vector<const KernelTable*>& registry() {
  static const std::vector<const KernelTable*> tables = [] {
    std::vector<const KernelTable*> out{&scalar_kernels()};
    if (const auto* t = detail::avx2_table(); t != nullptr && cpu_has_avx2()) out.push_back(t);
    if (const auto* t = detail::neon_table(); t != nullptr) out.push_back(t);
    return out;
  }();
  return tables;
}

const KernelTable* find(std::string_view name) {
  for (const auto* t : registry()) {
    if (name == t->name) return t;
  }
  return nullptr;
}

const KernelTable* initial() {
  if (const char* env = std::getenv("TSS_KERNELS"); env != nullptr) {
    if (const auto* t = find(env)) return t;
  }
  return registry().back();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial()};
  return table;
}

}  // namespace

std::span<const KernelTable* const> available_kernels() { return registry(); }

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  const auto* t = find(name);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

}  // namespace tss::kernels
