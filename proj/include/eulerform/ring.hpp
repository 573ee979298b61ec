#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eulerform/field.hpp"
#include "eulerform/monomial.hpp"

namespace eulerform {

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Sparse polynomial: terms strictly descending in the ring's monomial
/// order, no zero coefficients. The empty term list is 0.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const Polynomial& o) const;
};

/// Weighted polynomial ring k[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars, std::vector<int> weights = {},
           OrderKind order = OrderKind::kWeightedGrevlex);

  const Field& field() const { return field_; }
  const Weights& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  /// Index of a variable name, or -1.
  int variable_index(const std::string& name) const;

  // Construction.
  Polynomial zero() const { return {}; }
  Polynomial constant(const Scalar& c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Scalar& c, const Monomial& m) const;
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const;

  // Arithmetic; inputs must belong to this ring.
  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, const Scalar& c) const;
  Polynomial mul_term(const Polynomial& f, const Scalar& c, const Monomial& m) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial pow(const Polynomial& f, unsigned e) const;
  /// Divides by the leading coefficient.
  Polynomial monic(const Polynomial& f) const;

  bool is_homogeneous(const Polynomial& f) const;
  /// Weighted degree of a nonzero homogeneous polynomial (of its leading
  /// term otherwise).
  int degree(const Polynomial& f) const;
  /// Coefficient of the constant monomial.
  Scalar constant_term(const Polynomial& f) const;

  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;
  std::string description() const;

  bool operator==(const PolyRing& o) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  Weights weights_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Exact-rational rendering: "3", "-1/2".
std::string scalar_to_string(const Scalar& s);

}  // namespace eulerform
