#include "eulerform/field.hpp"

#include <stdexcept>

#include "eulerform/errors.hpp"

namespace eulerform {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw StructuralError("GF(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(modulus_) + ")";
}

void Field::normalize(Scalar& a) const {
  if (modulus_ == 0) {
    a.canonicalize();
    return;
  }
  mpz_class m(modulus_);
  if (a.get_den() != 1) {
    mpz_class d = a.get_den() % m;
    if (d < 0) d += m;
    if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    mpz_class n = (a.get_num() * dinv) % m;
    if (n < 0) n += m;
    a = Scalar(n);
    return;
  }
  mpz_class n = a.get_num() % m;
  if (n < 0) n += m;
  a = Scalar(n);
}

Scalar Field::from_int(long v) const {
  Scalar a(v);
  normalize(a);
  return a;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar a(q);
  normalize(a);
  return a;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (modulus_ != 0 && r >= modulus_) r -= modulus_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (modulus_ != 0 && r < 0) r += modulus_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (modulus_ == 0) return a * b;
  mpz_class n = (a.get_num() * b.get_num()) % modulus_;
  return Scalar(n);
}

Scalar Field::neg(const Scalar& a) const {
  if (modulus_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Scalar(modulus_ - a);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  if (modulus_ == 0) return 1 / a;
  mpz_class m(modulus_), r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

void Field::submul(Scalar& a, const Scalar& b, const Scalar& c) const {
  if (modulus_ == 0) {
    a -= b * c;
    return;
  }
  mpz_class n = (a.get_num() - b.get_num() * c.get_num()) % modulus_;
  if (n < 0) n += modulus_;
  a = Scalar(n);
}

}  // namespace eulerform
