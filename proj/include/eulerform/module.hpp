#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eulerform/groebner.hpp"

namespace eulerform {

/// Polynomial ring, or its quotient by a proper homogeneous ideal.
class Ring {
 public:
  explicit Ring(PolyRingPtr poly, std::vector<Polynomial> ideal = {});

  const PolyRingPtr& poly() const { return poly_; }
  const PolyRing& base() const { return *poly_; }
  std::size_t nvars() const { return poly_->nvars(); }
  bool is_quotient() const { return !ideal_.empty(); }
  /// Reduced Gröbner basis of the defining ideal (empty for P itself).
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  /// The vectors g·e_j, g in the defining ideal's basis: what every
  /// submodule of `f` implicitly contains when viewed over P.
  std::vector<FreeVector> background(const FreeModule& f) const;
  std::string description() const;

 private:
  PolyRingPtr poly_;
  std::vector<Polynomial> ideal_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(PolyRingPtr poly, std::vector<Polynomial> ideal = {});

/// Finitely presented graded module coker(F <- relations). Over a quotient
/// ring the relations are understood modulo I·F, which the stored Gröbner
/// basis includes.
class GradedModule {
 public:
  GradedModule(RingPtr ring, FreeModule free, std::vector<FreeVector> relations);

  static GradedModule free(RingPtr ring, std::vector<int> degrees);
  /// R/I with its generator in degree `degree`.
  static GradedModule cyclic(RingPtr ring, const std::vector<Polynomial>& ideal, int degree = 0);
  static GradedModule zero(RingPtr ring) { return free(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const PolyRingPtr& poly() const { return ring_->poly(); }
  const FreeModule& generators() const { return *free_; }
  const std::vector<int>& degrees() const { return free_->degrees(); }
  std::size_t rank() const { return free_->rank(); }
  const std::vector<FreeVector>& relations() const { return relations_; }
  /// Gröbner basis of relations + background.
  const GroebnerBasis& gb() const { return *gb_; }
  VectorSpace space() const { return VectorSpace(*ring_->poly(), *free_); }

  bool is_zero() const;
  /// M[k], with M[k]_n = M_{n+k}: every generator degree drops by k.
  GradedModule shift(int k) const;
  GradedModule direct_sum(const GradedModule& other) const;
  /// Fewest generators, relations minimal and reduced.
  GradedModule minimal_presentation() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::shared_ptr<const FreeModule> free_;
  std::vector<FreeVector> relations_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

/// M ⊗ N, presented on the products of generators.
GradedModule tensor(const GradedModule& m, const GradedModule& n);

/// Copies a vector into another free module with the same component
/// indexing (the target's order decides term order).
FreeVector rebase(const PolyRing& ring, const FreeModule& target, const FreeVector& v);

}  // namespace eulerform
