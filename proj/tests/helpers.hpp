#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "eulerform/poly_parse.hpp"
#include "eulerform/free_module.hpp"

namespace testing_util {

using namespace eulerform;

inline PolyRingPtr qq(std::vector<std::string> vars, std::vector<int> w = {},
                      OrderKind o = OrderKind::kWeightedGrevlex) {
  return std::make_shared<const PolyRing>(Field::rationals(), std::move(vars), std::move(w), o);
}

inline PolyRingPtr gf(std::uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(Field::prime(p), std::move(vars));
}

inline Polynomial P(const PolyRingPtr& r, const std::string& s) { return parse_polynomial(*r, s); }

inline std::vector<FreeVector> ideal_vectors(const PolyRingPtr& r, const FreeModule& f,
                                             const std::string& gens) {
  VectorSpace vs(*r, f);
  std::vector<FreeVector> out;
  for (auto& p : parse_polynomials(*r, gens)) out.push_back(vs.from_columns({p}));
  return out;
}

}  // namespace testing_util

#include "eulerform/module.hpp"

namespace testing_util {

inline RingPtr ring_of(const PolyRingPtr& p, const std::string& ideal = "") {
  return make_ring(p, ideal.empty() ? std::vector<Polynomial>{} : parse_polynomials(*p, ideal));
}

/// R/(gens); "" gives R itself.
inline GradedModule cyc(const RingPtr& r, const std::string& gens) {
  return GradedModule::cyclic(r, gens.empty() ? std::vector<Polynomial>{} : parse_polynomials(r->base(), gens));
}

/// Random homogeneous ideal generators: monomials or binomials of degree
/// 1..maxdeg.
inline std::vector<Polynomial> random_ideal(std::mt19937_64& rng, const PolyRing& r, int ngens, int maxdeg) {
  std::vector<Polynomial> out;
  const std::size_t n = r.nvars();
  auto rand_mono = [&](int d) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < d; ++k) e[rng() % n]++;
    return r.weights().make(e);
  };
  for (int g = 0; g < ngens; ++g) {
    int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxdeg));
    std::vector<Term> ts{{r.field().from_int(1), rand_mono(d)}};
    if (rng() % 2) ts.push_back({r.field().from_int(rng() % 2 ? 1 : -1), rand_mono(d)});
    auto p = r.from_terms(ts);
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

}  // namespace testing_util
