#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eulerform/ring.hpp"

namespace eulerform {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `t` under root seed `root`; independent of other trials.
std::uint64_t trial_seed(std::uint64_t root, std::uint64_t t);

/// Standard variable names: x, y, z, w for up to four variables, else
/// x1..xn.
std::vector<std::string> default_variables(int n);

/// Random homogeneous monomials and binomials over a standard graded ring.
class InstanceGenerator {
 public:
  InstanceGenerator(std::uint64_t seed, PolyRingPtr ring, int maxdeg);

  /// A monomial (sometimes a pure power) or a binomial m1 ± m2 of degree
  /// 1..maxdeg.
  Polynomial generator();
  std::vector<Polynomial> ideal(int min_gens, int max_gens);
  int uniform(int lo, int hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  Monomial monomial(int degree);

  std::mt19937_64 rng_;
  PolyRingPtr ring_;
  int maxdeg_;
};

}  // namespace eulerform
