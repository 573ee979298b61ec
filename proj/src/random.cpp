#include "eulerform/random.hpp"

#include "eulerform/errors.hpp"

namespace eulerform {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t root, std::uint64_t t) {
  return splitmix64(splitmix64(root) ^ (t * 0xd1b54a32d192ed03ULL));
}

std::vector<std::string> default_variables(int n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, PolyRingPtr ring, int maxdeg)
    : rng_(seed), ring_(std::move(ring)), maxdeg_(maxdeg) {
  if (!ring_->weights().standard()) throw ContractError("random instances need a standard grading");
  if (maxdeg_ < 1) throw ContractError("maxdeg must be positive");
}

int InstanceGenerator::uniform(int lo, int hi) {
  return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Monomial InstanceGenerator::monomial(int degree) {
  const int n = static_cast<int>(ring_->nvars());
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  if (uniform(0, 2) == 0) {
    e[static_cast<std::size_t>(uniform(0, n - 1))] = degree;
  } else {
    for (int k = 0; k < degree; ++k) e[static_cast<std::size_t>(uniform(0, n - 1))]++;
  }
  return ring_->weights().make(e);
}

Polynomial InstanceGenerator::generator() {
  const int d = uniform(1, maxdeg_);
  const Field& f = ring_->field();
  std::vector<Term> ts{{f.from_int(1), monomial(d)}};
  if (uniform(0, 2) == 0) {
    Monomial other = monomial(d);
    if (!(other == ts[0].mono)) ts.push_back({f.from_int(uniform(0, 1) ? 1 : -1), other});
  }
  return ring_->from_terms(std::move(ts));
}

std::vector<Polynomial> InstanceGenerator::ideal(int min_gens, int max_gens) {
  std::vector<Polynomial> out;
  const int k = uniform(min_gens, max_gens);
  for (int i = 0; i < k; ++i) out.push_back(generator());
  return out;
}

}  // namespace eulerform
