#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eulerform/ring.hpp"

namespace eulerform {

enum class ModuleOrderKind {
  kTermOverPosition,  ///< (twisted degree, monomial, position)
  kPositionOverTerm,  ///< (position, monomial)
  kSchreyer,          ///< induced from leading terms in a previous free module
};

class FreeModule;

/// Leading-term data a Schreyer order is induced from: generator j of this
/// module is compared as lead_mono[j] * e_{lead_comp[j]} in `base`.
struct SchreyerData {
  std::shared_ptr<const FreeModule> base;
  std::vector<Monomial> lead_mono;
  std::vector<std::uint32_t> lead_comp;
};

/// Graded free module ⊕ R(-d_j). `degrees[j]` is the degree of the j-th
/// basis vector, so its twist in the M[k]_n = M_{n+k} convention is -d_j.
class FreeModule {
 public:
  FreeModule() = default;
  explicit FreeModule(std::vector<int> degrees,
                      ModuleOrderKind kind = ModuleOrderKind::kTermOverPosition)
      : degrees_(std::move(degrees)), kind_(kind) {}
  static FreeModule schreyer(std::shared_ptr<const FreeModule> base,
                             std::vector<Monomial> lead_mono,
                             std::vector<std::uint32_t> lead_comp);

  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::vector<int> twists() const;
  ModuleOrderKind order_kind() const { return kind_; }
  const SchreyerData* schreyer_data() const { return schreyer_.get(); }

  std::strong_ordering compare(const MonomialOrder& mo, const Monomial& a, std::uint32_t ca,
                               const Monomial& b, std::uint32_t cb) const;

  bool operator==(const FreeModule& o) const { return degrees_ == o.degrees_ && kind_ == o.kind_; }

 private:
  std::vector<int> degrees_;
  ModuleOrderKind kind_ = ModuleOrderKind::kTermOverPosition;
  std::shared_ptr<const SchreyerData> schreyer_;
};

struct VTerm {
  Scalar coeff;
  Monomial mono;
  std::uint32_t comp = 0;
};

/// Element of a free module: terms strictly descending in the module
/// order, no zero coefficients.
struct FreeVector {
  std::vector<VTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
  bool operator==(const FreeVector& o) const;
};

/// Arithmetic on vectors of one free module over one ring.
class VectorSpace {
 public:
  VectorSpace(const PolyRing& ring, const FreeModule& module) : ring_(&ring), module_(&module) {}

  const PolyRing& ring() const { return *ring_; }
  const FreeModule& module() const { return *module_; }

  std::strong_ordering compare(const VTerm& a, const VTerm& b) const {
    return module_->compare(ring_->order(), a.mono, a.comp, b.mono, b.comp);
  }

  FreeVector from_terms(std::vector<VTerm> terms) const;
  FreeVector from_columns(const std::vector<Polynomial>& entries) const;
  std::vector<Polynomial> to_columns(const FreeVector& v) const;
  FreeVector basis(std::uint32_t j) const;

  FreeVector add(const FreeVector& a, const FreeVector& b) const;
  FreeVector sub(const FreeVector& a, const FreeVector& b) const;
  FreeVector scale(const FreeVector& a, const Scalar& c) const;
  FreeVector mul_term(const FreeVector& a, const Scalar& c, const Monomial& m) const;
  FreeVector mul_poly(const FreeVector& a, const Polynomial& f) const;
  /// a - c*m*b, the reduction step.
  FreeVector sub_mul(const FreeVector& a, const Scalar& c, const Monomial& m,
                     const FreeVector& b) const;
  FreeVector monic(const FreeVector& a) const;

  /// Degree of a term: monomial degree plus basis-vector degree.
  int degree(const VTerm& t) const { return t.mono.degree + module_->degrees()[t.comp]; }
  bool is_homogeneous(const FreeVector& v) const;
  int degree(const FreeVector& v) const;

  std::string to_string(const FreeVector& v) const;

 private:
  const PolyRing* ring_;
  const FreeModule* module_;
};

/// Column-major matrix of polynomials: column j is the image of source
/// basis vector j in the target free module.
struct Matrix {
  FreeModule target;
  FreeModule source;
  std::vector<std::vector<Polynomial>> columns;

  std::size_t rows() const { return target.rank(); }
  std::size_t cols() const { return source.rank(); }
  const Polynomial& at(std::size_t r, std::size_t c) const { return columns[c][r]; }
};

}  // namespace eulerform
