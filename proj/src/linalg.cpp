#include "eulerform/linalg.hpp"

#include <utility>

#include "eulerform/errors.hpp"
#include "eulerform/kernels.hpp"

namespace eulerform::linalg {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  if (p >= kernels::kAxpyMaxModulus) throw ContractError("rank_mod_p needs p < 2^15");
  const auto& k = kernels::active();
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint32_t inv = inv_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r][c] != 0) k.axpy_mod(rows[r].data(), rows[rank].data(), rows[r][c], p, ncols);
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<std::vector<mpq_class>>& rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    mpq_class inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace eulerform::linalg
