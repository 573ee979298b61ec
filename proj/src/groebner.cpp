#include "eulerform/groebner.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

GroebnerBuilder::GroebnerBuilder(PolyRingPtr ring, FreeModule module, bool track)
    : ring_(std::move(ring)),
      module_(std::make_unique<FreeModule>(std::move(module))),
      space_(*ring_, *module_),
      track_(track),
      kernels_(&kernels::active()),
      lead_exps_(module_->rank()),
      lead_index_(module_->rank()),
      input_module_(std::make_unique<FreeModule>()) {}

void GroebnerBuilder::rebuild_input_module() {
  input_module_ = std::make_unique<FreeModule>(input_degrees_);
}

std::size_t GroebnerBuilder::add(FreeVector v) {
  if (!space_.is_homogeneous(v))
    throw StructuralError("Gröbner input must be homogeneous: " + space_.to_string(v));
  const std::size_t index = input_degrees_.size();
  int deg = v.is_zero() ? 0 : space_.degree(v.lead());
  input_degrees_.push_back(deg);
  if (track_) rebuild_input_module();
  if (v.is_zero()) {
    if (track_) syzygies_.push_back(VectorSpace(*ring_, *input_module_).basis(static_cast<std::uint32_t>(index)));
    return index;
  }
  FreeVector rep;
  if (track_) rep = VectorSpace(*ring_, *input_module_).basis(static_cast<std::uint32_t>(index));
  inputs_.emplace(deg, Pending{std::move(v), std::move(rep)});
  if (deg <= done_degree_) done_degree_ = deg - 1;
  return index;
}

bool GroebnerBuilder::is_complete() const { return inputs_.empty() && pairs_.empty(); }

std::ptrdiff_t GroebnerBuilder::find_reducer(const VTerm& t) const {
  const auto& exps = lead_exps_[t.comp];
  std::ptrdiff_t k = kernels_->find_divisor(exps.data(), exps.size(), t.mono.exps);
  return k < 0 ? -1 : static_cast<std::ptrdiff_t>(lead_index_[t.comp][static_cast<std::size_t>(k)]);
}

FreeVector GroebnerBuilder::reduce(FreeVector f, FreeVector* rep, bool full) const {
  const Field& k = ring_->field();
  FreeVector rest;
  std::size_t start = 0;
  std::optional<VectorSpace> rep_space;
  if (rep != nullptr) rep_space.emplace(*ring_, *input_module_);
  while (start < f.terms.size()) {
    const VTerm& t = f.terms[start];
    std::ptrdiff_t r = find_reducer(t);
    if (r < 0) {
      if (!full) break;
      ++start;
      continue;
    }
    const FreeVector& g = basis_[static_cast<std::size_t>(r)];
    Scalar c = k.div(t.coeff, g.lead().coeff);
    Monomial m = mono_div(t.mono, g.lead().mono);
    if (start > 0) {
      rest.terms.insert(rest.terms.end(), f.terms.begin(), f.terms.begin() + static_cast<std::ptrdiff_t>(start));
      f.terms.erase(f.terms.begin(), f.terms.begin() + static_cast<std::ptrdiff_t>(start));
      start = 0;
    }
    f = space_.sub_mul(f, c, m, g);
    if (rep != nullptr) *rep = rep_space->sub_mul(*rep, c, m, reps_[static_cast<std::size_t>(r)]);
  }
  if (!full) return f;
  rest.terms.insert(rest.terms.end(), f.terms.begin(), f.terms.end());
  return rest;
}

FreeVector GroebnerBuilder::normal_form(const FreeVector& f) const { return reduce(f, nullptr, true); }

void GroebnerBuilder::insert(FreeVector h, FreeVector rep) {
  const Field& k = ring_->field();
  Scalar inv = k.inv(h.lead().coeff);
  h = space_.scale(h, inv);
  if (track_) rep = VectorSpace(*ring_, *input_module_).scale(rep, inv);

  const auto t = static_cast<std::uint32_t>(basis_.size());
  const Monomial lt = h.lead().mono;
  const std::uint32_t comp = h.lead().comp;
  const Weights& w = ring_->weights();
  const bool ideal = module_->rank() == 1;

  // Gebauer–Möller update.
  struct Cand {
    std::uint32_t i;
    Monomial lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cands;
  for (std::uint32_t i : lead_index_[comp]) {
    const Monomial& li = basis_[i].lead().mono;
    cands.push_back({i, w.lcm(li, lt), ideal && mono_coprime(li, lt)});
  }
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    cands[a].alive = false;
    bool keep = cands[a].coprime;
    if (!keep) {
      keep = true;
      for (std::size_t b = 0; b < cands.size() && keep; ++b)
        if (cands[b].alive && mono_divides(cands[b].lcm, cands[a].lcm)) keep = false;
      for (std::size_t b : kept)
        if (keep && mono_divides(cands[b].lcm, cands[a].lcm)) keep = false;
    }
    if (keep) kept.push_back(a);
  }

  std::vector<Pair> next;
  next.reserve(pairs_.size() + kept.size());
  for (const auto& p : pairs_) {
    const FreeVector& gi = basis_[p.i];
    if (gi.lead().comp == comp && mono_divides(lt, p.lcm)) {
      Monomial l1 = w.lcm(gi.lead().mono, lt);
      Monomial l2 = w.lcm(basis_[p.j].lead().mono, lt);
      if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
    }
    next.push_back(p);
  }
  for (std::size_t a : kept) {
    const Cand& c = cands[a];
    if (c.coprime) {
      if (track_) {
        // g_i * rep_h - h * rep_i is the Koszul syzygy of the pair.
        VectorSpace rs(*ring_, *input_module_);
        Polynomial gi = space_.to_columns(basis_[c.i])[0];
        Polynomial hp = space_.to_columns(h)[0];
        FreeVector s = rs.sub(rs.mul_poly(rep, gi), rs.mul_poly(reps_[c.i], hp));
        if (!s.is_zero()) syzygies_.push_back(std::move(s));
      }
      continue;
    }
    next.push_back(Pair{c.i, t, c.lcm, c.lcm.degree + module_->degrees()[comp]});
  }
  pairs_ = std::move(next);

  basis_.push_back(std::move(h));
  reps_.push_back(std::move(rep));
  lead_exps_[comp].push_back(lt.exps);
  lead_index_[comp].push_back(t);
}

void GroebnerBuilder::process(FreeVector f, FreeVector rep) {
  FreeVector r = reduce(std::move(f), track_ ? &rep : nullptr, true);
  if (r.is_zero()) {
    if (track_ && !rep.is_zero()) syzygies_.push_back(std::move(rep));
    return;
  }
  insert(std::move(r), std::move(rep));
}

void GroebnerBuilder::advance_to(int degree) {
  const Field& k = ring_->field();
  while (true) {
    int d = INT_MAX;
    if (!inputs_.empty()) d = inputs_.begin()->first;
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    if (d == INT_MAX || d > degree) break;

    // Pairs first, then inputs of the same degree; both may spawn new
    // pairs of degree d, which the loop picks up again.
    auto it = std::find_if(pairs_.begin(), pairs_.end(), [&](const Pair& p) { return p.degree == d; });
    if (it != pairs_.end()) {
      Pair p = *it;
      pairs_.erase(it);
      const FreeVector& gi = basis_[p.i];
      const FreeVector& gj = basis_[p.j];
      Monomial mi = mono_div(p.lcm, gi.lead().mono);
      Monomial mj = mono_div(p.lcm, gj.lead().mono);
      Scalar one = k.from_int(1);
      FreeVector s = space_.sub_mul(space_.mul_term(gi, one, mi), one, mj, gj);
      FreeVector rep;
      if (track_) {
        VectorSpace rs(*ring_, *input_module_);
        rep = rs.sub_mul(rs.mul_term(reps_[p.i], one, mi), one, mj, reps_[p.j]);
      }
      process(std::move(s), std::move(rep));
      continue;
    }
    auto in = inputs_.begin();
    Pending pending = std::move(in->second);
    inputs_.erase(in);
    process(std::move(pending.vec), std::move(pending.rep));
  }
  done_degree_ = std::max(done_degree_, degree);
}

GroebnerBasis GroebnerBuilder::reduced_basis() const {
  GroebnerBasis out{ring_, *module_, {}, true};
  VectorSpace vs(*ring_, out.module);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    // A low-degree input queued after a higher degree was finished can make
    // an earlier leading term redundant.
    const VTerm& lt = basis_[i].lead();
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j)
      redundant = j != i && basis_[j].lead().comp == lt.comp &&
                  mono_divides(basis_[j].lead().mono, lt.mono) &&
                  (!(basis_[j].lead().mono == lt.mono) || j < i);
    if (redundant) continue;
    FreeVector g = basis_[i];
    FreeVector head;
    head.terms.push_back(g.terms.front());
    g.terms.erase(g.terms.begin());
    FreeVector tail = reduce(std::move(g), nullptr, true);
    out.gens.push_back(vs.add(head, tail));
  }
  std::sort(out.gens.begin(), out.gens.end(),
            [&](const FreeVector& a, const FreeVector& b) { return vs.compare(a.lead(), b.lead()) < 0; });
  return out;
}

FreeVector normal_form(const FreeVector& f, const GroebnerBasis& g) {
  const PolyRing& ring = *g.ring;
  const Field& k = ring.field();
  VectorSpace vs(ring, g.module);
  const auto& kt = kernels::active();
  std::vector<std::vector<Exponents>> exps(g.module.rank());
  std::vector<std::vector<std::size_t>> idx(g.module.rank());
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    if (g.gens[i].is_zero()) continue;
    exps[g.gens[i].lead().comp].push_back(g.gens[i].lead().mono.exps);
    idx[g.gens[i].lead().comp].push_back(i);
  }
  FreeVector p = f, rest;
  while (!p.is_zero()) {
    const VTerm& t = p.lead();
    std::ptrdiff_t r = kt.find_divisor(exps[t.comp].data(), exps[t.comp].size(), t.mono.exps);
    if (r < 0) {
      rest.terms.push_back(t);
      p.terms.erase(p.terms.begin());
      continue;
    }
    const FreeVector& h = g.gens[idx[t.comp][static_cast<std::size_t>(r)]];
    p = vs.sub_mul(p, k.div(t.coeff, h.lead().coeff), mono_div(t.mono, h.lead().mono), h);
  }
  return rest;
}

GroebnerBasis buchberger(PolyRingPtr ring, FreeModule module, const std::vector<FreeVector>& gens) {
  GroebnerBuilder b(std::move(ring), std::move(module));
  b.add_all(gens);
  b.complete();
  return b.reduced_basis();
}

SyzygyResult syzygy_module(PolyRingPtr ring, const FreeModule& module,
                           const std::vector<FreeVector>& gens) {
  GroebnerBuilder b(std::move(ring), module, true);
  b.add_all(gens);
  b.complete();
  SyzygyResult out{b.input_module(), {}};
  VectorSpace vs(b.space().ring(), out.module);
  for (const auto& s : b.syzygies()) {
    // Re-sort in the final input module (its degrees are complete now).
    std::vector<VTerm> terms = s.terms;
    FreeVector v = vs.from_terms(std::move(terms));
    if (!v.is_zero()) out.syzygies.push_back(std::move(v));
  }
  return out;
}

GroebnerBasis initial_module(const GroebnerBasis& g) {
  GroebnerBasis out{g.ring, g.module, {}, true};
  const Field& k = g.ring->field();
  for (const auto& v : g.gens) {
    if (v.is_zero()) continue;
    FreeVector lt;
    lt.terms.push_back({k.from_int(1), v.lead().mono, v.lead().comp});
    out.gens.push_back(std::move(lt));
  }
  return out;
}

std::vector<std::vector<Monomial>> initial_ideals(const GroebnerBasis& g) {
  std::vector<std::vector<Monomial>> out(g.module.rank());
  for (const auto& v : g.gens)
    if (!v.is_zero()) out[v.lead().comp].push_back(v.lead().mono);
  for (auto& ideal : out) {
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < ideal.size() && !redundant; ++j) {
        if (i == j) continue;
        if (mono_divides(ideal[j], ideal[i]) && (!(ideal[j] == ideal[i]) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(ideal[i]);
    }
    ideal = std::move(minimal);
  }
  return out;
}

std::vector<FreeVector> minimal_generators(PolyRingPtr ring, const FreeModule& module,
                                           const std::vector<FreeVector>& u,
                                           const std::vector<FreeVector>& background) {
  GroebnerBuilder all(ring, module);
  all.add_all(u);
  all.add_all(background);
  all.complete();
  GroebnerBasis g = all.reduced_basis();

  GroebnerBuilder seen(ring, module);
  seen.add_all(background);
  const VectorSpace& vs = seen.space();
  std::vector<FreeVector> kept;
  for (const auto& cand : g.gens) {
    seen.advance_to(vs.degree(cand));
    if (seen.normal_form(cand).is_zero()) continue;
    kept.push_back(cand);
    seen.add(cand);
  }
  return kept;
}

}  // namespace eulerform
