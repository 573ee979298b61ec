#pragma once

#include <cstdint>
#include <vector>

#include "eulerform/field.hpp"

namespace eulerform::linalg {

/// Rank of a dense matrix over GF(p), p < 2^15 (rows are modified).
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p);

/// Rank of a dense rational matrix (rows are modified).
std::size_t rank_rational(std::vector<std::vector<mpq_class>>& rows);

}  // namespace eulerform::linalg
