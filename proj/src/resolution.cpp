#include "eulerform/resolution.hpp"

#include <cstdlib>

#include "eulerform/errors.hpp"

namespace eulerform {

int FreeResolution::rank(int i) const {
  if (i < 0 || i > length()) return 0;
  return static_cast<int>(modules[static_cast<std::size_t>(i)].rank());
}

std::vector<int> FreeResolution::twists(int i) const {
  if (i < 0 || i > length()) return {};
  return modules[static_cast<std::size_t>(i)].twists();
}

const Matrix* FreeResolution::differential(int i) const {
  if (i < 1 || i > static_cast<int>(maps.size())) return nullptr;
  return &maps[static_cast<std::size_t>(i - 1)];
}

namespace {

// Generators of {a in F_{n} : sum a_k cols_k in I·F}, minimal modulo I·F_n
// where F_n has one basis vector per column.
std::vector<FreeVector> kernel(const Ring& ring, const FreeModule& target,
                               const std::vector<FreeVector>& cols, const FreeModule& source) {
  std::vector<FreeVector> gens = cols;
  auto bg = ring.background(target);
  gens.insert(gens.end(), bg.begin(), bg.end());
  SyzygyResult syz = syzygy_module(ring.poly(), target, gens);
  VectorSpace vs(ring.base(), source);
  std::vector<FreeVector> proj;
  for (const auto& s : syz.syzygies) {
    std::vector<VTerm> ts;
    for (const auto& t : s.terms)
      if (t.comp < cols.size()) ts.push_back(t);
    FreeVector v = vs.from_terms(std::move(ts));
    if (!v.is_zero()) proj.push_back(std::move(v));
  }
  return minimal_generators(ring.poly(), source, proj, ring.background(source));
}

FreeResolution build(const GradedModule& input, std::optional<int> bound) {
  GradedModule m = input.minimal_presentation();
  const Ring& ring = *m.ring();
  const PolyRing& P = ring.base();
  FreeResolution res;
  res.ring = m.ring();
  res.modules.push_back(m.generators());
  std::vector<FreeVector> cols = m.relations();
  int i = 0;
  while (!cols.empty()) {
    if (bound && i >= *bound) {
      res.truncated_at = i;
      break;
    }
    const FreeModule& target = res.modules.back();
    std::vector<int> degs;
    VectorSpace ts(P, target);
    for (const auto& c : cols) degs.push_back(ts.degree(c));
    FreeModule source(degs);
    Matrix d{target, source, {}};
    for (const auto& c : cols) d.columns.push_back(ts.to_columns(c));
    std::vector<FreeVector> next = kernel(ring, target, cols, source);
    res.maps.push_back(std::move(d));
    res.modules.push_back(std::move(source));
    cols = std::move(next);
    ++i;
    if (!bound && i > static_cast<int>(P.nvars()) + 1)
      throw AlgebraError("resolution longer than the number of variables");
  }
  return res;
}

}  // namespace

int default_bound(const Ring& ring) {
  if (const char* env = std::getenv("EULERFORM_BOUND")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 2 * static_cast<int>(ring.nvars()) + 4;
}

FreeResolution minimal_free_resolution(const GradedModule& m) {
  if (m.ring()->is_quotient())
    throw ContractError("minimal_free_resolution needs a polynomial ring; use truncated_resolution");
  return build(m, std::nullopt);
}

FreeResolution truncated_resolution(const GradedModule& m, int bound) {
  if (bound < 1) throw ContractError("truncation bound must be positive");
  return build(m, bound);
}

FreeResolution resolve(const GradedModule& m, int bound) {
  if (m.ring()->is_quotient()) return truncated_resolution(m, bound);
  return minimal_free_resolution(m);
}

namespace {

bool same_up_to_shift(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.rows() == 0 || a.cols() == 0) return false;
  const int shift = b.source.degrees()[0] - a.source.degrees()[0];
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (b.source.degrees()[j] - a.source.degrees()[j] != shift) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (b.target.degrees()[r] - a.target.degrees()[r] != shift) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!(a.at(r, j) == b.at(r, j))) return false;
  return true;
}

}  // namespace

std::optional<Period> detect_period(const FreeResolution& res) {
  if (!res.truncated_at) return std::nullopt;
  const int len = static_cast<int>(res.maps.size());
  for (int start = 0; start < len; ++start)
    for (int p = 1; p <= 2; ++p) {
      // Comparisons d_i vs d_{i+p} for start < i, i + p <= len.
      int comparisons = len - p - start;
      if (comparisons < 2) continue;
      bool ok = true;
      for (int i = start + 1; i + p <= len && ok; ++i)
        ok = same_up_to_shift(*res.differential(i), *res.differential(i + p));
      if (ok) return Period{start, p};
    }
  return std::nullopt;
}

std::vector<int> betti_numbers(const FreeResolution& res) {
  if (!res.minimal) throw ContractError("Betti numbers need a minimal resolution");
  std::vector<int> out;
  for (int i = 0; i <= res.length(); ++i) out.push_back(res.rank(i));
  return out;
}

bool is_complex(const FreeResolution& res) {
  const PolyRing& P = res.ring->base();
  for (int i = 1; i < static_cast<int>(res.maps.size()); ++i) {
    const Matrix& a = *res.differential(i);
    const Matrix& b = *res.differential(i + 1);
    GradedModule quotient(res.ring, a.target, {});
    VectorSpace vs(P, a.target);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FreeVector acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = vs.add(acc, vs.mul_poly(vs.from_columns(a.columns[k]), b.at(k, j)));
      if (!normal_form(acc, quotient.gb()).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace eulerform
