#include "eulerform/kernels.hpp"

namespace eulerform::kernels {
namespace {

std::ptrdiff_t find_divisor_scalar(const Exponents* candidates, std::size_t n,
                                   const Exponents& target) {
  for (std::size_t i = 0; i < n; ++i) {
    bool divides = true;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (candidates[i].e[v] > target.e[v]) {
        divides = false;
        break;
      }
    }
    if (divides) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

void shift_scalar(const Exponents* src, std::size_t n, const Exponents& by, Exponents* dst) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < kMaxVars; ++v)
      dst[i].e[v] = static_cast<std::uint16_t>(src[i].e[v] + by.e[v]);
}

void axpy_mod_scalar(std::uint32_t* row, const std::uint32_t* src, std::uint32_t factor,
                     std::uint32_t p, std::size_t n) {
  const std::uint64_t neg = (p - factor % p) % p;
  for (std::size_t i = 0; i < n; ++i)
    row[i] = static_cast<std::uint32_t>((row[i] + neg * src[i]) % p);
}

const KernelTable kScalar{"scalar", find_divisor_scalar, shift_scalar, axpy_mod_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace eulerform::kernels
