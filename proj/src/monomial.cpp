#include "eulerform/monomial.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

Weights::Weights(std::vector<int> w) : n_(w.size()) {
  if (w.size() > kMaxVars)
    throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1) throw StructuralError("variable weights must be positive integers");
    w_[i] = w[i];
  }
}

bool Weights::standard() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (w_[i] != 1) return false;
  return true;
}

std::int32_t Weights::degree_of(const Exponents& e) const {
  std::int32_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += w_[i] * e.e[i];
  return d;
}

Monomial Weights::make(std::span<const int> exps) const {
  if (exps.size() != n_) throw StructuralError("exponent vector length does not match variable count");
  Monomial m;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exps[i] < 0 || exps[i] > 0x7fff) throw StructuralError("exponent out of range");
    m.exps.e[i] = static_cast<std::uint16_t>(exps[i]);
  }
  m.degree = degree_of(m.exps);
  return m;
}

Monomial Weights::variable(std::size_t i, int power) const {
  Monomial m;
  m.exps.e[i] = static_cast<std::uint16_t>(power);
  m.degree = w_[i] * power;
  return m;
}

Monomial Weights::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps.e[i] = std::max(a.exps.e[i], b.exps.e[i]);
  m.degree = degree_of(m.exps);
  return m;
}

Monomial Weights::gcd(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps.e[i] = std::min(a.exps.e[i], b.exps.e[i]);
  m.degree = degree_of(m.exps);
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exps.e[i] = static_cast<std::uint16_t>(a.exps.e[i] + b.exps.e[i]);
  m.degree = a.degree + b.degree;
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exps.e[i] = static_cast<std::uint16_t>(a.exps.e[i] - b.exps.e[i]);
  m.degree = a.degree - b.degree;
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exps.e[i] > b.exps.e[i]) return false;
  return true;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exps.e[i] != 0 && b.exps.e[i] != 0) return false;
  return true;
}

int total_exponent(const Monomial& a) {
  int s = 0;
  for (auto v : a.exps.e) s += v;
  return s;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::kLex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a.exps.e[i] != b.exps.e[i]) return a.exps.e[i] <=> b.exps.e[i];
      return std::strong_ordering::equal;
    case OrderKind::kGrevlex: {
      int da = total_exponent(a), db = total_exponent(b);
      if (da != db) return da <=> db;
      break;
    }
    case OrderKind::kWeightedGrevlex:
      if (a.degree != b.degree) return a.degree <=> b.degree;
      break;
  }
  for (std::size_t i = nvars; i-- > 0;)
    if (a.exps.e[i] != b.exps.e[i]) return b.exps.e[i] <=> a.exps.e[i];
  return std::strong_ordering::equal;
}

std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::kGrevlex: return "grevlex";
    case OrderKind::kLex: return "lex";
    case OrderKind::kWeightedGrevlex: return "weighted-grevlex";
  }
  return "?";
}

}  // namespace eulerform
