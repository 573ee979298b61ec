#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eulerform/free_module.hpp"
#include "eulerform/kernels.hpp"

namespace eulerform {

/// Gröbner basis of a submodule of a graded free module (rank 1 = ideal).
struct GroebnerBasis {
  PolyRingPtr ring;
  FreeModule module;
  std::vector<FreeVector> gens;
  bool reduced = false;

  VectorSpace space() const { return VectorSpace(*ring, module); }
};

/// Incremental Buchberger for homogeneous input, processed degree by
/// degree (sugar = degree). Pairs are managed with the Gebauer–Möller
/// chain criterion and, for ideals, the coprimality criterion.
///
/// With tracking on, every basis element carries its representation in
/// terms of the inputs, and reductions to zero are recorded as syzygies of
/// the inputs. The recorded syzygies generate the full syzygy module once
/// the basis is complete.
class GroebnerBuilder {
 public:
  GroebnerBuilder(PolyRingPtr ring, FreeModule module, bool track = false);

  /// Queues a homogeneous generator. Throws StructuralError if it is not
  /// homogeneous. Returns the input index (used by tracking).
  std::size_t add(FreeVector v);
  void add_all(const std::vector<FreeVector>& vs) {
    for (const auto& v : vs) add(v);
  }

  /// Processes every queued input and pair of degree <= `degree`.
  void advance_to(int degree);
  void complete() { advance_to(INT_MAX); }
  bool is_complete() const;

  /// Full normal form against the current basis; exact for vectors of
  /// degree <= the last advanced degree.
  FreeVector normal_form(const FreeVector& f) const;

  /// Interreduced, monic basis sorted ascending by leading term.
  GroebnerBasis reduced_basis() const;

  const std::vector<FreeVector>& basis() const { return basis_; }
  /// Representations of basis elements (tracking only).
  const std::vector<FreeVector>& representations() const { return reps_; }
  /// Syzygies of the inputs (tracking only); live in `input_module()`.
  const std::vector<FreeVector>& syzygies() const { return syzygies_; }
  const FreeModule& input_module() const { return *input_module_; }
  std::size_t input_count() const { return input_degrees_.size(); }

  const VectorSpace& space() const { return space_; }

 private:
  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    int degree;
  };
  struct Pending {
    FreeVector vec;
    FreeVector rep;
  };

  void insert(FreeVector h, FreeVector rep);
  void process(FreeVector f, FreeVector rep);
  std::ptrdiff_t find_reducer(const VTerm& t) const;
  FreeVector reduce(FreeVector f, FreeVector* rep, bool full) const;
  void rebuild_input_module();

  PolyRingPtr ring_;
  std::unique_ptr<FreeModule> module_;
  VectorSpace space_;
  bool track_;
  const kernels::KernelTable* kernels_;

  std::vector<FreeVector> basis_;
  std::vector<FreeVector> reps_;
  // Leading exponents grouped by component, for the divisor-search kernel.
  std::vector<std::vector<Exponents>> lead_exps_;
  std::vector<std::vector<std::uint32_t>> lead_index_;

  std::vector<Pair> pairs_;
  std::multimap<int, Pending> inputs_;
  std::vector<int> input_degrees_;
  std::unique_ptr<FreeModule> input_module_;
  std::vector<FreeVector> syzygies_;
  int done_degree_ = INT_MIN;
};

/// Normal form of f against a Gröbner basis.
FreeVector normal_form(const FreeVector& f, const GroebnerBasis& g);

/// Reduced Gröbner basis of homogeneous generators.
GroebnerBasis buchberger(PolyRingPtr ring, FreeModule module, const std::vector<FreeVector>& gens);

/// Generators of the syzygy module of `gens`, as vectors in the free module
/// with one basis vector per generator (degree = generator degree).
struct SyzygyResult {
  FreeModule module;
  std::vector<FreeVector> syzygies;
};
SyzygyResult syzygy_module(PolyRingPtr ring, const FreeModule& module,
                           const std::vector<FreeVector>& gens);

/// Leading terms of a Gröbner basis as monic monomial vectors.
GroebnerBasis initial_module(const GroebnerBasis& g);

/// Per-component monomial ideals of the initial module: entry j holds the
/// minimal monomial generators of the component-j part.
std::vector<std::vector<Monomial>> initial_ideals(const GroebnerBasis& g);

/// Canonical minimal homogeneous generators of (U + B) / B, chosen from the
/// reduced Gröbner basis of U + B in increasing module order.
std::vector<FreeVector> minimal_generators(PolyRingPtr ring, const FreeModule& module,
                                           const std::vector<FreeVector>& u,
                                           const std::vector<FreeVector>& background);

}  // namespace eulerform
