#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eulerform {

/// Exact coefficient. Over QQ it is a canonical rational; over GF(p) it is
/// an integer in [0, p) with denominator 1.
using Scalar = mpq_class;

/// Coefficient field descriptor: QQ (modulus 0) or GF(p).
///
/// All arithmetic goes through the field so prime-field values stay
/// reduced. Rationals are kept in lowest terms with positive denominator
/// (GMP canonical form).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws StructuralError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  void normalize(Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// a -= b * c, in place.
  void submul(Scalar& a, const Scalar& b, const Scalar& c) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  bool operator==(const Field& o) const { return modulus_ == o.modulus_; }

 private:
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace eulerform
