#include "eulerform/homology.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"
#include "eulerform/hilbert.hpp"

namespace eulerform {

namespace {

// Terms of `v` with component < n, re-sorted in `f`.
FreeVector project(const PolyRing& P, const FreeModule& f, const FreeVector& v, std::size_t n) {
  std::vector<VTerm> ts;
  for (const auto& t : v.terms)
    if (t.comp < n) ts.push_back(t);
  return VectorSpace(P, f).from_terms(std::move(ts));
}

void check_same_ring(const FreeResolution& res, const GradedModule& n) {
  if (res.ring != n.ring() && res.ring->description() != n.ring()->description())
    throw StructuralError("modules live over different rings: " + res.ring->description() + " vs " +
                          n.ring()->description());
}

// Needs d_1..d_{i+1} to be known (or the resolution to be finite).
void check_window(int i, const FreeResolution& res) {
  if (i < 0) throw ContractError("homological index must be nonnegative");
  if (res.truncated_at && i + 1 > *res.truncated_at) throw InsufficientTruncation(i, *res.truncated_at);
}

// One block per generator of F_i, each a copy of N's generators.
struct Blocks {
  FreeModule free;
  std::vector<FreeVector> relations;
};

Blocks blocks(const FreeResolution& res, int i, const GradedModule& n, int sign) {
  const PolyRing& P = res.ring->base();
  std::vector<int> fdeg = i >= 0 && i <= res.length() ? res.modules[static_cast<std::size_t>(i)].degrees()
                                                      : std::vector<int>{};
  const std::size_t nb = n.rank();
  std::vector<int> degs;
  for (int fa : fdeg)
    for (int gb : n.degrees()) degs.push_back(gb + sign * fa);
  Blocks out{FreeModule(degs), {}};
  VectorSpace vs(P, out.free);
  for (std::size_t a = 0; a < fdeg.size(); ++a)
    for (const auto& r : n.relations()) {
      std::vector<VTerm> ts;
      for (const auto& t : r.terms)
        ts.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(a * nb + t.comp)});
      out.relations.push_back(vs.from_terms(std::move(ts)));
    }
  return out;
}

// Images of the block basis under d ⊗ 1 (covariant, F_i -> F_{i-1}) or
// Hom(d, 1) (contravariant, F_{i-1}^* -> F_i^*), with d = d_i.
std::vector<FreeVector> tensor_map(const PolyRing& P, const Matrix& d, std::size_t nb, const FreeModule& target) {
  VectorSpace vs(P, target);
  std::vector<FreeVector> out;
  for (std::size_t a = 0; a < d.cols(); ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<VTerm> ts;
      for (std::size_t c = 0; c < d.rows(); ++c)
        for (const auto& t : d.at(c, a).terms) ts.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(c * nb + b)});
      out.push_back(vs.from_terms(std::move(ts)));
    }
  return out;
}

std::vector<FreeVector> hom_map(const PolyRing& P, const Matrix& d, std::size_t nb, const FreeModule& target) {
  VectorSpace vs(P, target);
  std::vector<FreeVector> out;
  for (std::size_t c = 0; c < d.rows(); ++c)
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<VTerm> ts;
      for (std::size_t a = 0; a < d.cols(); ++a)
        for (const auto& t : d.at(c, a).terms) ts.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(a * nb + b)});
      out.push_back(vs.from_terms(std::move(ts)));
    }
  return out;
}

}  // namespace

GradedModule subquotient(const RingPtr& ring, const FreeModule& t, const std::vector<FreeVector>& relations,
                         const FreeModule& target, const std::vector<FreeVector>& alpha_images,
                         const std::vector<FreeVector>& target_relations,
                         const std::vector<FreeVector>& beta_images) {
  const PolyRing& P = ring->base();
  const PolyRingPtr& pp = ring->poly();
  VectorSpace ts(P, t);

  std::vector<FreeVector> kernel;
  if (target.rank() == 0 || alpha_images.empty()) {
    for (std::uint32_t j = 0; j < t.rank(); ++j) kernel.push_back(ts.basis(j));
  } else {
    std::vector<FreeVector> gens = alpha_images;
    gens.insert(gens.end(), target_relations.begin(), target_relations.end());
    auto bg = ring->background(target);
    gens.insert(gens.end(), bg.begin(), bg.end());
    // Zero images are kernel elements on their own; syzygy_module records
    // them as unit syzygies.
    SyzygyResult syz = syzygy_module(pp, target, gens);
    for (const auto& s : syz.syzygies) {
      FreeVector v = project(P, t, s, alpha_images.size());
      if (!v.is_zero()) kernel.push_back(std::move(v));
    }
  }

  std::vector<FreeVector> sub = beta_images;
  sub.insert(sub.end(), relations.begin(), relations.end());
  auto bg = ring->background(t);
  sub.insert(sub.end(), bg.begin(), bg.end());
  std::erase_if(sub, [](const FreeVector& v) { return v.is_zero(); });

  std::vector<FreeVector> kgens = minimal_generators(pp, t, kernel, sub);
  if (kgens.empty()) return GradedModule::zero(ring);

  std::vector<int> hdeg;
  for (const auto& g : kgens) hdeg.push_back(ts.degree(g));
  FreeModule h(hdeg);
  std::vector<FreeVector> gens = kgens;
  gens.insert(gens.end(), sub.begin(), sub.end());
  SyzygyResult syz = syzygy_module(pp, t, gens);
  std::vector<FreeVector> rels;
  for (const auto& s : syz.syzygies) {
    FreeVector v = project(P, h, s, kgens.size());
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  return GradedModule(ring, std::move(h), std::move(rels)).minimal_presentation();
}

HomologyModule ext_module(int i, const FreeResolution& res, const GradedModule& n) {
  check_same_ring(res, n);
  check_window(i, res);
  const PolyRing& P = res.ring->base();
  if (i > res.length() || n.rank() == 0) return {GradedModule::zero(res.ring), i, "Ext"};
  Blocks here = blocks(res, i, n, -1);
  Blocks next = blocks(res, i + 1, n, -1);
  std::vector<FreeVector> alpha, beta;
  if (const Matrix* d = res.differential(i + 1)) alpha = hom_map(P, *d, n.rank(), next.free);
  if (const Matrix* d = res.differential(i)) beta = hom_map(P, *d, n.rank(), here.free);
  GradedModule h = subquotient(res.ring, here.free, here.relations, next.free, alpha, next.relations, beta);
  return {std::move(h), i, "Ext"};
}

HomologyModule tor_module(int i, const FreeResolution& res, const GradedModule& n) {
  check_same_ring(res, n);
  check_window(i, res);
  const PolyRing& P = res.ring->base();
  if (i > res.length() || n.rank() == 0) return {GradedModule::zero(res.ring), i, "Tor"};
  Blocks here = blocks(res, i, n, +1);
  Blocks prev = blocks(res, i - 1, n, +1);
  std::vector<FreeVector> alpha, beta;
  if (const Matrix* d = res.differential(i)) alpha = tensor_map(P, *d, n.rank(), prev.free);
  if (const Matrix* d = res.differential(i + 1)) beta = tensor_map(P, *d, n.rank(), here.free);
  GradedModule h = subquotient(res.ring, here.free, here.relations, prev.free, alpha, prev.relations, beta);
  return {std::move(h), i, "Tor"};
}

HomologyModule ext_module(int i, const GradedModule& m, const GradedModule& n) {
  int bound = std::max(default_bound(*m.ring()), i + 1);
  return ext_module(i, resolve(m, bound), n);
}

HomologyModule tor_module(int i, const GradedModule& m, const GradedModule& n) {
  int bound = std::max(default_bound(*m.ring()), i + 1);
  return tor_module(i, resolve(m, bound), n);
}

GradedModule residue_field(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->base().variable(i));
  return GradedModule::cyclic(ring, vars);
}

int projective_dimension(const FreeResolution& res) {
  if (res.truncated_at) return -1;
  return res.length();
}

int module_depth(const GradedModule& x) {
  if (x.is_zero()) return kInfiniteDepth;
  const RingPtr& ring = x.ring();
  if (!ring->is_quotient()) {
    return static_cast<int>(ring->nvars()) - projective_dimension(minimal_free_resolution(x));
  }
  // depth X <= dim X, so Ext^i(k, X) for i <= dim X decides it.
  int dim = module_dimension(x);
  FreeResolution rk = truncated_resolution(residue_field(ring), dim + 1);
  for (int i = 0; i <= dim; ++i)
    if (!ext_module(i, rk, x).module.is_zero()) return i;
  throw AlgebraError("no nonvanishing Ext(k, X) up to dim X");
}

}  // namespace eulerform
