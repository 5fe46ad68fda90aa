#ifndef LOOPIDEAL_KERNELS_HPP
#define LOOPIDEAL_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace loopideal {
namespace kern {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Componentwise primitives on exponent vectors. Every monomial operation in
/// the library bottoms out here, so each primitive exists in a scalar
/// reference version and, on x86-64, an AVX2 version selected at runtime.
/// dst may alias a or b exactly; partial overlap is not allowed.
struct Backend {
  const char* name;
  bool (*leq)(const u32* a, const u32* b, std::size_t n);    // all a[i] <= b[i]
  bool (*eq)(const u32* a, const u32* b, std::size_t n);
  void (*vmin)(u32* dst, const u32* a, const u32* b, std::size_t n);
  void (*vmax)(u32* dst, const u32* a, const u32* b, std::size_t n);
  void (*vadd)(u32* dst, const u32* a, const u32* b, std::size_t n);
  void (*vsub)(u32* dst, const u32* a, const u32* b, std::size_t n);  // needs a[i] >= b[i]
  u64 (*vsum)(const u32* a, std::size_t n);
};

const Backend& scalar_backend();

/// Backends usable on this machine, scalar first.
const std::vector<const Backend*>& available_backends();

/// Active backend: the widest available one, unless overridden by
/// force_backend() or the LOOPIDEAL_KERNELS environment variable
/// ("scalar" or "avx2").
const Backend& active();

/// Returns false when the named backend is not available here.
bool force_backend(const std::string& name);

}  // namespace kern
}  // namespace loopideal

#endif
