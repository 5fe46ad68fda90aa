#include "loopideal/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace loopideal {
namespace kern {

namespace {

bool scalar_leq(const u32* a, const u32* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool scalar_eq(const u32* a, const u32* b, std::size_t n) {
  return std::memcmp(a, b, n * sizeof(u32)) == 0;
}

void scalar_vmin(u32* dst, const u32* a, const u32* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] < b[i] ? a[i] : b[i];
}

void scalar_vmax(u32* dst, const u32* a, const u32* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

void scalar_vadd(u32* dst, const u32* a, const u32* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void scalar_vsub(u32* dst, const u32* a, const u32* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

u64 scalar_vsum(const u32* a, std::size_t n) {
  u64 s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

const Backend kScalar = {
    "scalar",   scalar_leq,  scalar_eq,   scalar_vmin,
    scalar_vmax, scalar_vadd, scalar_vsub, scalar_vsum,
};

const Backend* g_active = nullptr;

}  // namespace

// Defined in kernels_avx2.cpp; returns nullptr when the build target or the
// running CPU lacks AVX2.
const Backend* avx2_backend();

const Backend& scalar_backend() { return kScalar; }

const std::vector<const Backend*>& available_backends() {
  static const std::vector<const Backend*> all = [] {
    std::vector<const Backend*> v{&kScalar};
    if (const Backend* b = avx2_backend()) v.push_back(b);
    return v;
  }();
  return all;
}

bool force_backend(const std::string& name) {
  for (const Backend* b : available_backends()) {
    if (name == b->name) {
      g_active = b;
      return true;
    }
  }
  return false;
}

const Backend& active() {
  if (!g_active) {
    if (const char* env = std::getenv("LOOPIDEAL_KERNELS")) {
      if (force_backend(env)) return *g_active;
    }
    g_active = available_backends().back();
  }
  return *g_active;
}

}  // namespace kern
}  // namespace loopideal
