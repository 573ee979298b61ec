#pragma once

#include <climits>
#include <string>
#include <vector>

#include "eulerform/resolution.hpp"

namespace eulerform {

/// Ext^i or Tor_i, converted from subquotient to a minimal cokernel
/// presentation.
struct HomologyModule {
  GradedModule module;
  int index;
  std::string functor;  ///< "Ext" or "Tor"
};

/// Ext^i(M, N) from a resolution of M. Throws InsufficientTruncation when
/// i is beyond what a truncated resolution determines.
HomologyModule ext_module(int i, const FreeResolution& res_m, const GradedModule& n);
HomologyModule tor_module(int i, const FreeResolution& res_m, const GradedModule& n);

/// Convenience forms resolving M with the default bound (raised to i + 1
/// when needed).
HomologyModule ext_module(int i, const GradedModule& m, const GradedModule& n);
HomologyModule tor_module(int i, const GradedModule& m, const GradedModule& n);

/// ker(alpha) / (im beta + relations), everything inside free module T.
/// `alpha_images[j]` is the image of basis vector j in `target` (whose
/// relations are `target_relations`); an empty `target` means alpha = 0.
GradedModule subquotient(const RingPtr& ring, const FreeModule& t,
                         const std::vector<FreeVector>& relations,
                         const FreeModule& target, const std::vector<FreeVector>& alpha_images,
                         const std::vector<FreeVector>& target_relations,
                         const std::vector<FreeVector>& beta_images);

/// k = R/(x_1, ..., x_n).
GradedModule residue_field(const RingPtr& ring);

inline constexpr int kInfiniteDepth = INT_MAX;

/// depth X; kInfiniteDepth for X = 0.
int module_depth(const GradedModule& x);

/// Highest i with F_i != 0 in a finite minimal resolution (pdim), or -1 if
/// the resolution was truncated.
int projective_dimension(const FreeResolution& res);

}  // namespace eulerform
