#include "eulerform/free_module.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

FreeModule FreeModule::schreyer(std::shared_ptr<const FreeModule> base,
                                std::vector<Monomial> lead_mono,
                                std::vector<std::uint32_t> lead_comp) {
  if (lead_mono.size() != lead_comp.size())
    throw StructuralError("Schreyer data: monomial and component lists differ in length");
  std::vector<int> degs;
  degs.reserve(lead_mono.size());
  for (std::size_t j = 0; j < lead_mono.size(); ++j)
    degs.push_back(lead_mono[j].degree + base->degrees().at(lead_comp[j]));
  FreeModule f(std::move(degs), ModuleOrderKind::kSchreyer);
  f.schreyer_ = std::make_shared<SchreyerData>(
      SchreyerData{std::move(base), std::move(lead_mono), std::move(lead_comp)});
  return f;
}

std::vector<int> FreeModule::twists() const {
  std::vector<int> t;
  t.reserve(degrees_.size());
  for (int d : degrees_) t.push_back(-d);
  return t;
}

std::strong_ordering FreeModule::compare(const MonomialOrder& mo, const Monomial& a,
                                         std::uint32_t ca, const Monomial& b,
                                         std::uint32_t cb) const {
  switch (kind_) {
    case ModuleOrderKind::kTermOverPosition: {
      int da = a.degree + degrees_[ca], db = b.degree + degrees_[cb];
      if (da != db) return da <=> db;
      auto c = mo.compare(a, b);
      if (c != 0) return c;
      // Lower index is the larger basis vector.
      return cb <=> ca;
    }
    case ModuleOrderKind::kPositionOverTerm:
      if (ca != cb) return cb <=> ca;
      return mo.compare(a, b);
    case ModuleOrderKind::kSchreyer: {
      const auto& s = *schreyer_;
      auto c = s.base->compare(mo, mono_mul(a, s.lead_mono[ca]), s.lead_comp[ca],
                               mono_mul(b, s.lead_mono[cb]), s.lead_comp[cb]);
      if (c != 0) return c;
      if (ca != cb) return cb <=> ca;
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

bool FreeVector::operator==(const FreeVector& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].comp != o.terms[i].comp || !(terms[i].mono == o.terms[i].mono) ||
        terms[i].coeff != o.terms[i].coeff)
      return false;
  return true;
}

FreeVector VectorSpace::from_terms(std::vector<VTerm> terms) const {
  const Field& k = ring_->field();
  for (auto& t : terms) {
    if (t.comp >= module_->rank()) throw StructuralError("vector component out of range");
    k.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  FreeVector out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().comp == t.comp && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = k.add(out.terms.back().coeff, t.coeff);
      if (Field::is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

FreeVector VectorSpace::from_columns(const std::vector<Polynomial>& entries) const {
  if (entries.size() != module_->rank())
    throw StructuralError("column length " + std::to_string(entries.size()) +
                          " does not match free module rank " + std::to_string(module_->rank()));
  std::vector<VTerm> terms;
  for (std::uint32_t j = 0; j < entries.size(); ++j)
    for (const auto& t : entries[j].terms) terms.push_back({t.coeff, t.mono, j});
  return from_terms(std::move(terms));
}

std::vector<Polynomial> VectorSpace::to_columns(const FreeVector& v) const {
  std::vector<std::vector<Term>> parts(module_->rank());
  for (const auto& t : v.terms) parts[t.comp].push_back({t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(ring_->from_terms(std::move(p)));
  return out;
}

FreeVector VectorSpace::basis(std::uint32_t j) const {
  FreeVector v;
  v.terms.push_back({ring_->field().from_int(1), ring_->weights().one(), j});
  return v;
}

FreeVector VectorSpace::add(const FreeVector& a, const FreeVector& b) const {
  const Field& k = ring_->field();
  FreeVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    auto c = compare(a.terms[i], b.terms[j]);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Scalar s = k.add(a.terms[i].coeff, b.terms[j].coeff);
      if (!Field::is_zero(s)) out.terms.push_back({std::move(s), a.terms[i].mono, a.terms[i].comp});
      ++i;
      ++j;
    }
  }
  out.terms.insert(out.terms.end(), a.terms.begin() + static_cast<std::ptrdiff_t>(i), a.terms.end());
  out.terms.insert(out.terms.end(), b.terms.begin() + static_cast<std::ptrdiff_t>(j), b.terms.end());
  return out;
}

FreeVector VectorSpace::scale(const FreeVector& a, const Scalar& c) const {
  if (Field::is_zero(c)) return {};
  FreeVector out = a;
  for (auto& t : out.terms) t.coeff = ring_->field().mul(t.coeff, c);
  return out;
}

FreeVector VectorSpace::sub(const FreeVector& a, const FreeVector& b) const {
  return add(a, scale(b, ring_->field().from_int(-1)));
}

FreeVector VectorSpace::mul_term(const FreeVector& a, const Scalar& c, const Monomial& m) const {
  if (Field::is_zero(c)) return {};
  FreeVector out = a;
  for (auto& t : out.terms) {
    t.coeff = ring_->field().mul(t.coeff, c);
    t.mono = mono_mul(t.mono, m);
  }
  return out;
}

FreeVector VectorSpace::mul_poly(const FreeVector& a, const Polynomial& f) const {
  FreeVector acc;
  for (const auto& t : f.terms) acc = add(acc, mul_term(a, t.coeff, t.mono));
  return acc;
}

FreeVector VectorSpace::sub_mul(const FreeVector& a, const Scalar& c, const Monomial& m,
                                const FreeVector& b) const {
  const Field& k = ring_->field();
  FreeVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  VTerm shifted;
  auto load = [&](std::size_t idx) {
    shifted.mono = mono_mul(b.terms[idx].mono, m);
    shifted.comp = b.terms[idx].comp;
  };
  if (j < b.terms.size()) load(j);
  while (i < a.terms.size() && j < b.terms.size()) {
    auto cmp = compare(a.terms[i], shifted);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({k.neg(k.mul(c, b.terms[j].coeff)), shifted.mono, shifted.comp});
      if (++j < b.terms.size()) load(j);
    } else {
      Scalar s = a.terms[i].coeff;
      k.submul(s, c, b.terms[j].coeff);
      if (!Field::is_zero(s)) out.terms.push_back({std::move(s), shifted.mono, shifted.comp});
      ++i;
      if (++j < b.terms.size()) load(j);
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) {
    load(j);
    out.terms.push_back({k.neg(k.mul(c, b.terms[j].coeff)), shifted.mono, shifted.comp});
  }
  return out;
}

FreeVector VectorSpace::monic(const FreeVector& a) const {
  if (a.is_zero()) return a;
  return scale(a, ring_->field().inv(a.lead().coeff));
}

bool VectorSpace::is_homogeneous(const FreeVector& v) const {
  if (v.is_zero()) return true;
  int d = degree(v.terms.front());
  for (const auto& t : v.terms)
    if (degree(t) != d) return false;
  return true;
}

int VectorSpace::degree(const FreeVector& v) const {
  if (v.is_zero()) throw ContractError("degree of the zero vector");
  int d = degree(v.terms.front());
  for (const auto& t : v.terms) d = std::max(d, degree(t));
  return d;
}

std::string VectorSpace::to_string(const FreeVector& v) const {
  auto cols = to_columns(v);
  std::string s = "(";
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j) s += ", ";
    s += ring_->to_string(cols[j]);
  }
  return s + ")";
}

}  // namespace eulerform
