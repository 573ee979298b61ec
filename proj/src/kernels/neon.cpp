#include "eulerform/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace eulerform::kernels::detail {
namespace {

std::ptrdiff_t find_divisor_neon(const Exponents* candidates, std::size_t n,
                                 const Exponents& target) {
  const uint16x8_t t = vld1q_u16(target.e.data());
  for (std::size_t i = 0; i < n; ++i) {
    const uint16x8_t le = vcleq_u16(vld1q_u16(candidates[i].e.data()), t);
    if (vminvq_u16(le) == 0xFFFF) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

void shift_neon(const Exponents* src, std::size_t n, const Exponents& by, Exponents* dst) {
  const uint16x8_t b = vld1q_u16(by.e.data());
  for (std::size_t i = 0; i < n; ++i) vst1q_u16(dst[i].e.data(), vaddq_u16(vld1q_u16(src[i].e.data()), b));
}

void axpy_mod_neon(std::uint32_t* row, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t p, std::size_t n) {
  const std::uint32_t neg = (p - factor % p) % p;
  const uint32x4_t vneg = vdupq_n_u32(neg);
  const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t x = vmlaq_u32(vld1q_u32(row + i), vneg, vld1q_u32(src + i));
    const uint64x2_t xlo = vmovl_u32(vget_low_u32(x));
    const uint64x2_t xhi = vmovl_u32(vget_high_u32(x));
    const uint64x2_t qlo = vcvtq_u64_f64(vmulq_f64(vcvtq_f64_u64(xlo), vinv));
    const uint64x2_t qhi = vcvtq_u64_f64(vmulq_f64(vcvtq_f64_u64(xhi), vinv));
    const uint32x4_t q = vcombine_u32(vmovn_u64(qlo), vmovn_u64(qhi));
    uint32x4_t y = vmlsq_u32(x, q, vp);
    // y is in [0, 2p) because the float quotient can only undershoot by one.
    y = vsubq_u32(y, vandq_u32(vcgeq_u32(y, vp), vp));
    vst1q_u32(row + i, y);
  }
  if (i < n) scalar_table().axpy_mod(row + i, src + i, factor, p, n - i);
}

const KernelTable kNeon{"neon", find_divisor_neon, shift_neon, axpy_mod_neon};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace eulerform::kernels::detail

#else

namespace eulerform::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace eulerform::kernels::detail

#endif
