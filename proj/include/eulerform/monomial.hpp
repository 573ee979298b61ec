#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace eulerform {

inline constexpr std::size_t kMaxVars = 8;

/// Packed exponent vector. Unused slots stay zero, so divisibility and
/// multiplication can run on the whole 128-bit block at once.
struct alignas(16) Exponents {
  std::array<std::uint16_t, kMaxVars> e{};
  bool operator==(const Exponents&) const = default;
};

/// A monomial with its weighted degree cached.
struct Monomial {
  Exponents exps;
  std::int32_t degree = 0;

  std::uint16_t operator[](std::size_t i) const { return exps.e[i]; }
  bool is_one() const { return degree == 0 && exps == Exponents{}; }
  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Per-ring variable weights; every monomial operation that creates new
/// exponent vectors needs them to keep `degree` right.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<int> w);

  std::size_t nvars() const { return n_; }
  int operator[](std::size_t i) const { return w_[i]; }
  bool standard() const;

  std::int32_t degree_of(const Exponents& e) const;
  Monomial make(std::span<const int> exps) const;
  Monomial variable(std::size_t i, int power = 1) const;
  Monomial one() const { return Monomial{}; }

  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;

 private:
  std::array<int, kMaxVars> w_{};
  std::size_t n_ = 0;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b, assuming b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
int total_exponent(const Monomial& a);

enum class OrderKind { kGrevlex, kLex, kWeightedGrevlex };

/// Monomial order. Grevlex compares the plain total degree, the weighted
/// variant compares the weighted degree; both break ties by the reversed
/// last-variable rule (smaller exponent wins).
struct MonomialOrder {
  OrderKind kind = OrderKind::kWeightedGrevlex;
  std::size_t nvars = 0;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

std::string order_name(OrderKind k);

}  // namespace eulerform
