#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "eulerform/monomial.hpp"

namespace eulerform::kernels {

/// Data-parallel inner loops of the engine. Every table implements the
/// same contract as the scalar reference; variants are picked at runtime
/// from the CPU's feature set.
struct KernelTable {
  const char* name;

  /// Index of the first candidate whose exponents are componentwise
  /// <= target's, or -1.
  std::ptrdiff_t (*find_divisor)(const Exponents* candidates, std::size_t n,
                                 const Exponents& target);

  /// dst[i] = src[i] + by, exponentwise. dst may alias src.
  void (*shift)(const Exponents* src, std::size_t n, const Exponents& by, Exponents* dst);

  /// row[i] = (row[i] - factor * src[i]) mod p, for entries in [0, p) and
  /// p < 2^15.
  void (*axpy_mod)(std::uint32_t* row, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t p, std::size_t n);
};

inline constexpr std::uint32_t kAxpyMaxModulus = 1u << 15;

const KernelTable& scalar_table();
/// Tables runnable on this CPU, scalar first.
std::vector<const KernelTable*> available();
/// Best available table, or the one named by EULERFORM_KERNELS.
const KernelTable& active();
/// Overrides the active table by name; returns false if unknown or
/// unsupported here.
bool select(std::string_view name);

namespace detail {
const KernelTable* sse2_table();
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace eulerform::kernels
