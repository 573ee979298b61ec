#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerform/module.hpp"

namespace eulerform {

/// Graded free resolution F_0 <- F_1 <- ... of a module.
struct FreeResolution {
  RingPtr ring;
  /// modules[i] = F_i.
  std::vector<FreeModule> modules;
  /// maps[i] = d_{i+1} : F_{i+1} -> F_i.
  std::vector<Matrix> maps;
  bool minimal = true;
  /// Set when the computation stopped at this homological degree with a
  /// nonzero kernel still to resolve.
  std::optional<int> truncated_at;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  int rank(int i) const;
  /// Twists n_ij of F_i = ⊕ R[n_ij] (negated generator degrees).
  std::vector<int> twists(int i) const;
  /// d_i as a list of columns; empty if out of range.
  const Matrix* differential(int i) const;
};

/// Minimal resolution over a polynomial ring (ContractError over a
/// quotient).
FreeResolution minimal_free_resolution(const GradedModule& m);

/// Minimal resolution over a quotient ring through F_bound.
FreeResolution truncated_resolution(const GradedModule& m, int bound);

/// Either of the above; `bound` only matters over quotient rings.
FreeResolution resolve(const GradedModule& m, int bound);

/// Default truncation for quotient rings: 2·nvars + 4, or the value of
/// EULERFORM_BOUND if set.
int default_bound(const Ring& ring);

struct Period {
  int start;
  int period;
};
/// Smallest (start, period) with period in {1, 2} such that d_{i+period}
/// equals d_i up to a uniform twist shift for every i > start inside the
/// computed window (at least two comparisons required). Only meaningful for
/// truncated resolutions; finite ones return nothing.
std::optional<Period> detect_period(const FreeResolution& res);

std::vector<int> betti_numbers(const FreeResolution& res);

/// Composites d_i ∘ d_{i+1} vanish modulo the ring's ideal.
bool is_complex(const FreeResolution& res);

}  // namespace eulerform
