#include "eulerform/invariants.hpp"

#include <algorithm>

#include "eulerform/errors.hpp"

namespace eulerform {

namespace {

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

bool finite_tensor(const GradedModule& m, const GradedModule& n) {
  return module_length(tensor(m, n)) != kInfinite;
}

// Largest homological index to sum over; needs pdim M < ∞.
int top_index(PairContext& ctx) {
  int p = ctx.pdim_m();
  if (p < 0)
    throw HypothesisViolated("pdim M < ∞", "M has no finite resolution within bound " +
                                              std::to_string(ctx.bound_used()));
  return p;
}

void require_finite(long len, const std::string& what, int i) {
  if (len == kInfinite)
    throw HypothesisViolated("length(" + what + std::to_string(i) + ") < ∞",
                             what + std::to_string(i) + "(M,N) has infinite length");
}

}  // namespace

PairContext::PairContext(GradedModule m, GradedModule n, int bound)
    : m_(std::move(m)), n_(std::move(n)), bound_(bound > 0 ? bound : default_bound(*m_.ring())) {
  if (m_.ring()->description() != n_.ring()->description())
    throw StructuralError("modules live over different rings");
}

const FreeResolution& PairContext::resolution(int need_index) {
  if (!res_) res_ = resolve(m_, bound_);
  if (res_->truncated_at && need_index + 1 > *res_->truncated_at) {
    bound_ = std::max(bound_, need_index + 1);
    res_ = resolve(m_, bound_);
    tor_.clear();
    ext_.clear();
  }
  return *res_;
}

int PairContext::bound_used() const { return bound_; }

int PairContext::pdim_m() { return projective_dimension(resolution()); }

const HomologyModule& PairContext::tor(int i) {
  if (auto it = tor_.find(i); it != tor_.end()) return it->second;
  const FreeResolution& r = resolution(i);
  return tor_.emplace(i, tor_module(i, r, n_)).first->second;
}

const HomologyModule& PairContext::ext(int i) {
  if (auto it = ext_.find(i); it != ext_.end()) return it->second;
  const FreeResolution& r = resolution(i);
  return ext_.emplace(i, ext_module(i, r, n_)).first->second;
}

long PairContext::tor_length(int i) {
  long l = module_length(tor(i).module);
  consulted_["Tor_" + std::to_string(i)] = l;
  return l;
}

long PairContext::ext_length(int i) {
  long l = module_length(ext(i).module);
  consulted_["Ext^" + std::to_string(i)] = l;
  return l;
}

long chi_partial(int j, PairContext& ctx) {
  if (j < 0) throw ContractError("χ_j needs j >= 0");
  const int top = top_index(ctx);
  long acc = 0;
  for (int i = j; i <= top; ++i) {
    long l = ctx.tor_length(i);
    require_finite(l, "Tor_", i);
    acc += sign(i - j) * l;
  }
  return acc;
}

long xi_partial(int j, PairContext& ctx) {
  if (j < 0) throw ContractError("ξ_j needs j >= 0");
  const int top = top_index(ctx);
  long acc = 0;
  for (int i = j; i <= top; ++i) {
    long l = ctx.ext_length(i);
    require_finite(l, "Ext^", i);
    acc += sign(i - j) * l;
  }
  return acc;
}

long xi_bar(int j, PairContext& ctx) {
  long acc = 0;
  for (int i = 0; i <= j; ++i) {
    long l = ctx.ext_length(j - i);
    require_finite(l, "Ext^", j - i);
    acc += sign(i) * l;
  }
  return acc;
}

int grade_pair(PairContext& ctx) {
  if (ctx.m().is_zero() || ctx.n().is_zero()) return kInfiniteGrade;
  int top = ctx.pdim_m();
  // grade(M,N) <= depth N <= dim N when it is finite.
  if (top < 0) top = module_dimension(ctx.n());
  for (int i = 0; i <= top; ++i)
    if (!ctx.ext(i).module.is_zero()) return i;
  return kInfiniteGrade;
}

int q_last_tor(PairContext& ctx) {
  const int top = top_index(ctx);
  for (int i = top; i >= 0; --i)
    if (!ctx.tor(i).module.is_zero()) return i;
  return kNegInfinity;
}

long chi_partial(int j, const GradedModule& m, const GradedModule& n) {
  PairContext ctx(m, n);
  return chi_partial(j, ctx);
}

long xi_partial(int j, const GradedModule& m, const GradedModule& n) {
  PairContext ctx(m, n);
  return xi_partial(j, ctx);
}

long xi_bar(int j, const GradedModule& m, const GradedModule& n) {
  PairContext ctx(m, n);
  return xi_bar(j, ctx);
}

int grade_pair(const GradedModule& m, const GradedModule& n) {
  PairContext ctx(m, n);
  return grade_pair(ctx);
}

int q_last_tor(const GradedModule& m, const GradedModule& n) {
  PairContext ctx(m, n);
  return q_last_tor(ctx);
}

int module_grade(const GradedModule& m) {
  return grade_pair(m, GradedModule::free(m.ring(), {0}));
}

TwistCoefficients twist_coefficients(const FreeResolution& res) {
  if (res.truncated_at) throw ContractError("twist coefficients need a finite resolution");
  const int n = static_cast<int>(res.ring->nvars());
  TwistCoefficients out;
  mpz_class fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    mpz_class sum = 0;
    for (int i = 0; i <= res.length(); ++i)
      for (int t : res.twists(i)) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(t).get_mpz_t(), static_cast<unsigned long>(k));
        sum += (i % 2 == 0) ? p : mpz_class(-p);
      }
    out.c.push_back(mpq_class(sum, fact));
    out.c.back().canonicalize();
  }
  auto it = std::find_if(out.c.begin(), out.c.end(), [](const mpq_class& c) { return c != 0; });
  if (it == out.c.end()) throw ContractError("twist coefficients of the zero module");
  out.k0 = static_cast<int>(it - out.c.begin());
  return out;
}

void CheckReport::set(const std::string& key, const std::string& value) {
  for (auto& kv : values)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  values.emplace_back(key, value);
}

std::string CheckReport::get(const std::string& key) const {
  for (const auto& kv : values)
    if (kv.first == key) return kv.second;
  return "";
}

std::string grade_to_string(int g) {
  if (g == kInfiniteGrade) return "INFINITE";
  if (g == kNegInfinity) return "-INFINITE";
  return std::to_string(g);
}

namespace {

template <typename F>
CheckReport guarded(const std::string& name, F body) {
  CheckReport r;
  r.name = name;
  try {
    body(r);
  } catch (const HypothesisViolated& e) {
    r.passed = false;
    r.skipped = e.hypothesis();
  }
  return r;
}

}  // namespace

CheckReport graded_chan_check(const GradedModule& m, const GradedModule& n) {
  return guarded("graded-chan", [&](CheckReport& r) {
    if (!finite_tensor(m, n)) throw HypothesisViolated("length(M⊗N) < ∞", "M⊗N has infinite length");
    if (m.is_zero()) throw HypothesisViolated("M ≠ 0", "M is zero");
    if (!m.poly()->weights().standard())
      throw HypothesisViolated("standard grading", "Hilbert polynomials need all weights 1");
    PairContext ctx(m, n);
    const long chi = chi_partial(0, ctx);
    const long xi = xi_partial(0, ctx);
    const int g = module_grade(m);
    TwistCoefficients tc = twist_coefficients(ctx.resolution());
    const int dim_r = module_dimension(GradedModule::free(m.ring(), {0}));
    const int expected_k0 = dim_r - module_dimension(m);
    HilbertPolynomial pn = hilbert_polynomial(n).derivative(tc.k0);
    if (pn.degree() > 0) throw HypothesisViolated("deg P_N <= k0", "P_N^(k0) is not constant");
    const mpq_class pk = pn.coefficients.empty() ? mpq_class(0) : pn.coefficients[0];
    const mpq_class rhs = tc.c[static_cast<std::size_t>(tc.k0)] * pk;
    r.set("chi", chi);
    r.set("xi", xi);
    r.set("grade", g);
    r.set("k0", tc.k0);
    r.set("c_k0", tc.c[static_cast<std::size_t>(tc.k0)].get_str());
    r.set("P_N^(k0)", pk.get_str());
    r.set("rhs", rhs.get_str());
    r.set("(-1)^k0*xi", sign(tc.k0) * xi);
    const bool first = mpq_class(chi) == rhs;
    const bool second = mpq_class(sign(tc.k0) * xi) == rhs;
    r.set("chi = c_k0*P^(k0)", first ? "true" : "false");
    r.set("(-1)^k0*xi = c_k0*P^(k0)", second ? "true" : "false");
    r.set("k0 = dim R - dim M", tc.k0 == expected_k0 ? "true" : "false");
    r.lengths = ctx.consulted();
    r.passed = first && second && tc.k0 == expected_k0 && chi == sign(g) * xi;
  });
}

CheckReport theorem_A_check(int j, const GradedModule& m, const GradedModule& n) {
  return guarded("theorem-A", [&](CheckReport& r) {
    if (m.ring()->is_quotient()) throw HypothesisViolated("R regular", "the ring is a proper quotient");
    if (!finite_tensor(m, n)) throw HypothesisViolated("length(M⊗N) < ∞", "M⊗N has infinite length");
    const int dim_r = static_cast<int>(m.ring()->nvars());
    const int dm = module_dimension(m), dn = module_dimension(n);
    if (dm != kNegInfinity && dn != kNegInfinity && dm + dn >= dim_r)
      throw HypothesisViolated("dim M + dim N < dim R", "dimensions too large");
    const int g = module_grade(m);
    if (j < 1 || j > g) throw HypothesisViolated("1 <= j <= grade M", "j out of range");
    PairContext ctx(m, n);
    const long xij = xi_partial(j, ctx);
    const int gp = grade_pair(ctx);
    const int p = ctx.pdim_m();
    const long chi = chi_partial(p - j + 1, ctx);
    const bool c1 = xij == 0, c2 = gp >= j, c3 = chi == 0;
    r.set("j", j);
    r.set("xi_j", xij);
    r.set("grade(M,N)", grade_to_string(gp));
    r.set("pdim M", p);
    r.set("chi_{pdim M-j+1}", chi);
    r.set("xi_j = 0", c1 ? "true" : "false");
    r.set("grade(M,N) >= j", c2 ? "true" : "false");
    r.set("chi_{pdim M-j+1} = 0", c3 ? "true" : "false");
    r.lengths = ctx.consulted();
    r.passed = xij >= 0 && c1 == c2 && c2 == c3;
  });
}

CheckReport jorgensen_check(const GradedModule& m) {
  return guarded("jorgensen", [&](CheckReport& r) {
    if (m.is_zero()) throw HypothesisViolated("M ≠ 0", "M is zero");
    PairContext ctx(m, m);
    const int p = ctx.pdim_m();
    if (p < 0) throw HypothesisViolated("pdim M < ∞", "no finite resolution within the bound");
    const int g = module_grade(m);
    int top = p;
    if (m.ring()->is_quotient()) {
      if (g > 2) throw HypothesisViolated("grade M <= 2", "grade too large for the singular case");
      top = g;
    }
    r.set("grade", g);
    r.set("pdim", p);
    bool all = true;
    std::string list;
    for (int i = 0; i <= p; ++i) {
      const bool nz = !ctx.ext(i).module.is_zero();
      list += (i ? "," : "") + std::string(nz ? "1" : "0");
      if (i <= top) all = all && nz;
    }
    r.set("Ext^n(M,M) != 0 for n=0..pdim", list);
    r.passed = all;
  });
}

CheckReport lemma_2_4_check(int j, const GradedModule& m, const GradedModule& n) {
  return guarded("lemma-2.4", [&](CheckReport& r) {
    if (j < 0) throw ContractError("j must be nonnegative");
    if (!finite_tensor(m, n)) throw HypothesisViolated("length(M⊗N) < ∞", "M⊗N has infinite length");
    PairContext ctx(m, n);
    PairContext other(n, m);
    top_index(ctx);
    if (other.pdim_m() < 0) throw HypothesisViolated("pdim N < ∞", "N has no finite resolution");
    const int g = module_grade(m);
    const long xij = xi_partial(j, ctx);
    const long chi = chi_partial(0, ctx);
    const long xb = xi_bar(j - 1, ctx);
    const long lhs = sign(g + j) * xij;
    const long rhs = chi + sign(g + j) * xb;
    r.set("j", j);
    r.set("grade M", g);
    r.set("xi_j", xij);
    r.set("chi", chi);
    r.set("xibar_{j-1}", xb);
    r.set("lhs", lhs);
    r.set("rhs", rhs);
    r.lengths = ctx.consulted();
    r.passed = lhs == rhs;
  });
}

}  // namespace eulerform
