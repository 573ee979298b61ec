#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerform/module.hpp"

namespace eulerform {

/// Laurent polynomial in t with integer coefficients.
using Laurent = std::map<int, mpz_class>;

/// Hilbert series as numerator / ∏(1 - t^{w_i}).
struct HilbertSeries {
  Laurent numerator;
  std::vector<int> weights;
};

HilbertSeries hilbert_series(const GradedModule& m);

/// dim_k M_d, read off the series.
mpz_class hilbert_function(const GradedModule& m, int degree);

/// Returned for modules of infinite length.
inline constexpr long kInfinite = -1;

/// length(M) as a k-vector space, or kInfinite.
long module_length(const GradedModule& m);

/// Sentinel dimension of the zero module.
inline constexpr int kNegInfinity = INT_MIN;

/// Krull dimension of M; kNegInfinity for M = 0.
int module_dimension(const GradedModule& m);

/// Cumulative Hilbert polynomial P_M(n) = Σ_{k<=n} dim M_k for n >= n0.
/// Standard gradings only.
struct HilbertPolynomial {
  /// coefficients[i] is the coefficient of n^i; no trailing zeros.
  std::vector<mpq_class> coefficients;
  int n0 = 0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  mpq_class operator()(const mpq_class& n) const;
  HilbertPolynomial derivative(int k = 1) const;
  std::string to_string() const;
  bool operator==(const HilbertPolynomial& o) const { return coefficients == o.coefficients; }
};

HilbertPolynomial hilbert_polynomial(const GradedModule& m);

/// Numerator of the Hilbert series of P/J for a monomial ideal J.
Laurent monomial_quotient_numerator(std::vector<Monomial> gens, const Weights& w, std::size_t nvars);

/// Krull dimension of P/J for a monomial ideal J (kNegInfinity if J = P).
int monomial_quotient_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

}  // namespace eulerform
