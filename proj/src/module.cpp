#include "eulerform/module.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

Ring::Ring(PolyRingPtr poly, std::vector<Polynomial> ideal) : poly_(std::move(poly)) {
  FreeModule one({0});
  VectorSpace vs(*poly_, one);
  std::vector<FreeVector> gens;
  for (auto& f : ideal) {
    if (f.is_zero()) continue;
    if (!poly_->is_homogeneous(f))
      throw StructuralError("defining ideal must be homogeneous: " + poly_->to_string(f));
    gens.push_back(vs.from_columns({f}));
  }
  if (gens.empty()) return;
  auto g = buchberger(poly_, one, gens);
  for (auto& v : g.gens) {
    Polynomial p = vs.to_columns(v)[0];
    if (p.lead().mono.is_one()) throw StructuralError("defining ideal is the unit ideal");
    ideal_.push_back(std::move(p));
  }
}

std::vector<FreeVector> Ring::background(const FreeModule& f) const {
  std::vector<FreeVector> out;
  if (ideal_.empty()) return out;
  VectorSpace vs(*poly_, f);
  for (std::uint32_t j = 0; j < f.rank(); ++j)
    for (const auto& g : ideal_) out.push_back(vs.mul_poly(vs.basis(j), g));
  return out;
}

std::string Ring::description() const {
  std::string s = poly_->description();
  if (ideal_.empty()) return s;
  s += "/(";
  for (std::size_t i = 0; i < ideal_.size(); ++i) {
    if (i) s += ", ";
    s += poly_->to_string(ideal_[i]);
  }
  return s + ")";
}

RingPtr make_ring(PolyRingPtr poly, std::vector<Polynomial> ideal) {
  return std::make_shared<const Ring>(std::move(poly), std::move(ideal));
}

FreeVector rebase(const PolyRing& ring, const FreeModule& target, const FreeVector& v) {
  return VectorSpace(ring, target).from_terms(v.terms);
}

GradedModule::GradedModule(RingPtr ring, FreeModule free, std::vector<FreeVector> relations)
    : ring_(std::move(ring)), free_(std::make_shared<const FreeModule>(std::move(free))) {
  VectorSpace vs(*ring_->poly(), *free_);
  for (auto& r : relations) {
    FreeVector v = vs.from_terms(std::move(r.terms));
    if (v.is_zero()) continue;
    if (!vs.is_homogeneous(v))
      throw StructuralError("relation is not homogeneous for the generator degrees: " + vs.to_string(v));
    relations_.push_back(std::move(v));
  }
  GroebnerBuilder b(ring_->poly(), *free_);
  b.add_all(relations_);
  b.add_all(ring_->background(*free_));
  b.complete();
  gb_ = std::make_shared<const GroebnerBasis>(b.reduced_basis());
}

GradedModule GradedModule::free(RingPtr ring, std::vector<int> degrees) {
  return GradedModule(std::move(ring), FreeModule(std::move(degrees)), {});
}

GradedModule GradedModule::cyclic(RingPtr ring, const std::vector<Polynomial>& ideal, int degree) {
  FreeModule f({degree});
  VectorSpace vs(*ring->poly(), f);
  std::vector<FreeVector> rels;
  for (const auto& p : ideal)
    if (!p.is_zero()) rels.push_back(vs.from_columns({p}));
  return GradedModule(std::move(ring), std::move(f), std::move(rels));
}

bool GradedModule::is_zero() const {
  std::vector<bool> unit(rank(), false);
  for (const auto& g : gb_->gens)
    if (g.lead().mono.is_one()) unit[g.lead().comp] = true;
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

GradedModule GradedModule::shift(int k) const {
  std::vector<int> degs = degrees();
  for (int& d : degs) d -= k;
  FreeModule f(degs);
  std::vector<FreeVector> rels;
  for (const auto& r : relations_) rels.push_back(rebase(*poly(), f, r));
  return GradedModule(ring_, std::move(f), std::move(rels));
}

GradedModule GradedModule::direct_sum(const GradedModule& other) const {
  std::vector<int> degs = degrees();
  degs.insert(degs.end(), other.degrees().begin(), other.degrees().end());
  FreeModule f(degs);
  std::vector<FreeVector> rels;
  for (const auto& r : relations_) rels.push_back(rebase(*poly(), f, r));
  const auto offset = static_cast<std::uint32_t>(rank());
  for (const auto& r : other.relations_) {
    FreeVector v = r;
    for (auto& t : v.terms) t.comp += offset;
    rels.push_back(rebase(*poly(), f, v));
  }
  return GradedModule(ring_, std::move(f), std::move(rels));
}

GradedModule GradedModule::minimal_presentation() const {
  const PolyRing& P = *poly();
  const Field& k = P.field();
  std::vector<int> degs = degrees();
  // Work with dense columns while generators are being eliminated.
  VectorSpace vs(P, *free_);
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& r : relations_) cols.push_back(vs.to_columns(r));

  while (true) {
    std::size_t rel = cols.size(), comp = 0;
    for (std::size_t r = 0; r < cols.size() && rel == cols.size(); ++r)
      for (std::size_t j = 0; j < degs.size(); ++j) {
        const Polynomial& e = cols[r][j];
        if (!e.is_zero() && e.lead().mono.is_one()) {
          rel = r;
          comp = j;
          break;
        }
      }
    if (rel == cols.size()) break;
    // Generator `comp` equals -(1/c) times the rest of relation `rel`.
    std::vector<Polynomial> pivot = cols[rel];
    Scalar cinv = k.inv(pivot[comp].lead().coeff);
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(rel));
    for (auto& c : cols) {
      if (c[comp].is_zero()) continue;
      Polynomial factor = P.scale(c[comp], cinv);
      for (std::size_t j = 0; j < degs.size(); ++j) c[j] = P.sub(c[j], P.mul(factor, pivot[j]));
    }
    for (auto& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(comp));
    degs.erase(degs.begin() + static_cast<std::ptrdiff_t>(comp));
  }

  FreeModule f(degs);
  VectorSpace fs(P, f);
  std::vector<FreeVector> rels;
  for (auto& c : cols) {
    FreeVector v = fs.from_columns(c);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  rels = minimal_generators(poly(), f, rels, ring_->background(f));
  return GradedModule(ring_, std::move(f), std::move(rels));
}

std::string GradedModule::to_string() const {
  std::string s = "coker {";
  for (std::size_t j = 0; j < degrees().size(); ++j) {
    if (j) s += ",";
    s += std::to_string(degrees()[j]);
  }
  s += "} [";
  VectorSpace vs = space();
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (i) s += ", ";
    s += vs.to_string(relations_[i]);
  }
  return s + "]";
}

GradedModule tensor(const GradedModule& m, const GradedModule& n) {
  const PolyRing& P = *m.poly();
  const std::size_t a = m.rank(), b = n.rank();
  std::vector<int> degs;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) degs.push_back(m.degrees()[i] + n.degrees()[j]);
  FreeModule f(degs);
  VectorSpace fs(P, f);
  std::vector<FreeVector> rels;
  for (const auto& r : m.relations())
    for (std::uint32_t j = 0; j < b; ++j) {
      std::vector<VTerm> ts;
      for (const auto& t : r.terms) ts.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(t.comp * b + j)});
      rels.push_back(fs.from_terms(std::move(ts)));
    }
  for (const auto& r : n.relations())
    for (std::uint32_t i = 0; i < a; ++i) {
      std::vector<VTerm> ts;
      for (const auto& t : r.terms) ts.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(i * b + t.comp)});
      rels.push_back(fs.from_terms(std::move(ts)));
    }
  return GradedModule(m.ring(), std::move(f), std::move(rels));
}

}  // namespace eulerform
