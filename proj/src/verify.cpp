#include "eulerform/verify.hpp"

#include <algorithm>
#include <functional>

#include "eulerform/asymptotics.hpp"
#include "eulerform/errors.hpp"
#include "eulerform/poly_parse.hpp"
#include "eulerform/random.hpp"

namespace eulerform {

namespace {

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }
std::string yes(bool b) { return b ? "true" : "false"; }

struct Instance {
  RingPtr ring;
  std::vector<Polynomial> m, n;
  GradedModule M() const { return GradedModule::cyclic(ring, m); }
  GradedModule N() const { return GradedModule::cyclic(ring, n); }
};

std::string ideal_text(const PolyRing& p, const std::vector<Polynomial>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ", ") + p.to_string(g);
  return s;
}

std::string module_line(const std::string& name, const Instance& in, const std::vector<Polynomial>& gens) {
  if (gens.empty()) return "module " + name + " = R^1;\n";
  return "module " + name + " = R/(" + ideal_text(in.ring->base(), gens) + ");\n";
}

bool finite_tensor(const GradedModule& m, const GradedModule& n) {
  return module_length(tensor(m, n)) != kInfinite;
}

CheckReport skip(const std::string& name, const std::string& hypothesis) {
  CheckReport r;
  r.name = name;
  r.skipped = hypothesis;
  return r;
}

struct Suite {
  std::vector<std::string> branches;
  bool quotient = false;
  std::function<Instance(InstanceGenerator&, const RingPtr&)> make;
  /// One report per branch touched; skipped reports are out of regime.
  std::function<std::vector<CheckReport>(const Instance&, int bound)> check;
  /// compute statements replaying the values of a report.
  std::function<std::string(const CheckReport&)> replay;
};

Instance pair_instance(InstanceGenerator& g, const RingPtr& ring) {
  Instance in{ring, g.ideal(1, 3), {}};
  // N = R now and then: it feeds the equal-dimension branches.
  in.n = g.uniform(0, 4) == 0 ? std::vector<Polynomial>{} : g.ideal(1, 3);
  return in;
}

std::vector<CheckReport> chan(const Instance& in, int) {
  GradedModule m = in.M(), n = in.N();
  if (!finite_tensor(m, n)) return {skip("chan", "length(M⊗N) < ∞")};
  PairContext ctx(m, n);
  CheckReport r;
  r.name = "chan";
  const long chi = chi_partial(0, ctx), xi = xi_partial(0, ctx);
  const int g = module_grade(m);
  r.set("chi", chi);
  r.set("xi", xi);
  r.set("grade M", grade_to_string(g));
  r.lengths = ctx.consulted();
  r.passed = g != kInfiniteGrade ? chi == sign(g) * xi : chi == 0 && xi == 0;
  return {r};
}

std::vector<CheckReport> graded_chan(const Instance& in, int) {
  CheckReport r = graded_chan_check(in.M(), in.N());
  r.name = "graded-chan";
  if (!r.skipped) {
    TwistCoefficients tc = twist_coefficients(minimal_free_resolution(in.M().minimal_presentation()));
    bool below = true;
    for (int k = 0; k < tc.k0; ++k) below = below && tc.c[static_cast<std::size_t>(k)] == 0;
    r.set("c_k = 0 for k < k0", yes(below));
    r.passed = r.passed && below && tc.c[static_cast<std::size_t>(tc.k0)] != 0;
  }
  return {r};
}

std::vector<CheckReport> theorem_a(const Instance& in, int) {
  GradedModule m = in.M(), n = in.N();
  CheckReport out;
  out.name = "theorem-a";
  out.passed = true;
  int used = 0;
  const int g = module_grade(m);
  for (int j = 1; g != kInfiniteGrade && j <= g; ++j) {
    CheckReport r = theorem_A_check(j, m, n);
    if (r.skipped) return {skip("theorem-a", *r.skipped)};
    ++used;
    out.passed = out.passed && r.passed;
    for (auto& [k, v] : r.values) out.set(k + " @" + std::to_string(j), v);
    for (auto& [k, v] : r.lengths) out.lengths[k] = v;
  }
  if (used == 0) return {skip("theorem-a", "1 <= j <= grade M")};
  out.set("grade M", g);
  return {out};
}

std::vector<CheckReport> serre(const Instance& in, int) {
  GradedModule m = in.M(), n = in.N();
  if (m.is_zero() || n.is_zero()) return {skip("serre-vanishing", "M, N ≠ 0")};
  if (!finite_tensor(m, n)) return {skip("serre-vanishing", "length(M⊗N) < ∞")};
  const int dm = module_dimension(m), dn = module_dimension(n);
  if (dm + dn >= static_cast<int>(in.ring->nvars()))
    return {skip("serre-vanishing", "dim M + dim N < dim R")};
  PairContext ctx(m, n);
  CheckReport r;
  r.name = "serre-vanishing";
  const long chi = chi_partial(0, ctx), xi = xi_partial(0, ctx);
  r.set("dim M", dm);
  r.set("dim N", dn);
  r.set("chi", chi);
  r.set("xi", xi);
  r.lengths = ctx.consulted();
  r.passed = chi == 0 && xi == 0;
  return {r};
}

std::vector<CheckReport> depth_formula(const Instance& in, int) {
  GradedModule m = in.M(), n = in.N();
  if (m.is_zero() || n.is_zero()) return {skip("depth-formula", "M, N ≠ 0")};
  if (!finite_tensor(m, n)) return {skip("depth-formula", "length(M⊗N) < ∞")};
  CheckReport r;
  r.name = "depth-formula";
  const int q = q_last_tor(m, n);
  const int dr = module_depth(GradedModule::free(in.ring, {0}));
  const int dm = module_depth(m), dn = module_depth(n);
  r.set("q", q);
  r.set("depth R", dr);
  r.set("depth M", dm);
  r.set("depth N", dn);
  r.passed = q == dr - dm - dn;
  return {r};
}

std::vector<CheckReport> hochster_lichtenbaum(const Instance& in, int) {
  GradedModule m = in.M(), n = in.N();
  if (m.is_zero() || n.is_zero()) return {skip("hochster-lichtenbaum", "M, N ≠ 0")};
  PairContext ctx(m, n);
  const int p = ctx.pdim_m();
  std::vector<long> len(static_cast<std::size_t>(p + 1));
  for (int i = 1; i <= p; ++i) len[static_cast<std::size_t>(i)] = ctx.tor_length(i);
  CheckReport r;
  r.name = "hochster-lichtenbaum";
  r.passed = true;
  int used = 0;
  for (int j = p; j >= 1; --j) {
    if (len[static_cast<std::size_t>(j)] == kInfinite) break;
    const long chi = chi_partial(j, ctx);
    bool vanish = true;
    for (int i = j; i <= p; ++i) vanish = vanish && len[static_cast<std::size_t>(i)] == 0;
    r.set("chi_" + std::to_string(j), chi);
    r.set("Tor_{>=" + std::to_string(j) + "} = 0", yes(vanish));
    r.passed = r.passed && ((chi == 0) == vanish);
    ++used;
  }
  if (used == 0) return {skip("hochster-lichtenbaum", "length(Tor_i) < ∞ for i >= j")};
  r.lengths = ctx.consulted();
  return {r};
}

std::vector<CheckReport> sign_trichotomy(const Instance& in, int) {
  GradedModule m = in.M(), n = in.N();
  if (m.is_zero() || n.is_zero()) return {skip("a", "M, N ≠ 0")};
  if (!finite_tensor(m, n)) return {skip("a", "length(M⊗N) < ∞")};
  const int dim_r = static_cast<int>(in.ring->nvars());
  const int dsum = module_dimension(m) + module_dimension(n);
  const int g = module_grade(m);
  PairContext ctx(m, n);
  std::map<std::string, CheckReport> by_branch;
  for (int j = 1; j <= g; ++j) {
    const long xij = xi_partial(j, ctx);
    std::string b;
    bool ok = false;
    if (dsum < dim_r) {
      b = "a";
      ok = xij >= 0 && (xij == 0) == (grade_pair(ctx) >= j);
    } else if ((g + j) % 2 == 0) {
      b = "b";
      ok = xij > 0;
    } else if (ctx.ext(j - 1).module.is_zero()) {
      b = "c";
      ok = xij < 0;
    } else {
      continue;
    }
    CheckReport& r = by_branch[b];
    if (r.name.empty()) {
      r.name = b;
      r.passed = true;
      r.set("dim M + dim N", dsum);
      r.set("grade M", g);
    }
    r.set("xi_" + std::to_string(j), xij);
    r.passed = r.passed && ok;
  }
  std::vector<CheckReport> out;
  for (auto& [b, r] : by_branch) {
    r.lengths = ctx.consulted();
    out.push_back(r);
  }
  if (out.empty()) out.push_back(skip("a", "branch hypotheses"));
  return out;
}

std::vector<CheckReport> jorgensen(const Instance& in, int) {
  CheckReport r = jorgensen_check(in.M());
  r.name = "jorgensen";
  return {r};
}

Instance hypersurface_instance(InstanceGenerator& g, const RingPtr& base) {
  PolyRingPtr p = std::make_shared<const PolyRing>(base->poly()->field(), base->poly()->variables());
  Polynomial f = g.generator();
  while (f.is_zero() || f.lead().mono.is_one()) f = g.generator();
  Instance in{make_ring(p, {f}), g.ideal(1, 3), g.ideal(1, 3)};
  return in;
}

std::vector<CheckReport> herbrand(const Instance& in, int bound) {
  GradedModule m = in.M(), n = in.N();
  if (m.is_zero() || n.is_zero()) return {skip("herbrand", "M, N ≠ 0")};
  if (!finite_tensor(m, n)) return {skip("herbrand", "length(M⊗N) < ∞")};
  Complexity cm = complexity(m, bound), cn = complexity(n, bound);
  if (cm.confidence != Confidence::exact || cn.confidence != Confidence::exact)
    return {skip("herbrand", "certified complexity")};
  const int c = std::max(cm.value, cn.value);
  GradedModule ring_mod = GradedModule::free(in.ring, {0});
  const int dim_r = module_dimension(ring_mod);
  const int dm = module_dimension(m), dn = module_dimension(n);
  if (dm + dn > dim_r + c - 1) return {skip("herbrand", "dim M + dim N <= dim R + c - 1")};
  AsymptoticEstimate h = herbrand_h(c, m, n, bound);
  if (h.verdict != Verdict::exact) return {skip("herbrand", "certified h_c")};
  CheckReport r;
  r.name = "herbrand";
  r.set("c", c);
  r.set("h_c", h.value->get_str());
  bool propagation = true;
  if (c >= 1) {
    const int d0 = module_depth(ring_mod) - module_depth(m);
    const int top = static_cast<int>(h.lengths.size()) - 1;
    for (int s = d0 + 1; s + c - 1 <= top; ++s) {
      bool run = true;
      for (int i = s; i < s + c; ++i) run = run && h.lengths[static_cast<std::size_t>(i)].second == 0;
      if (!run) continue;
      for (int i = d0 + 1; i <= top; ++i)
        propagation = propagation && h.lengths[static_cast<std::size_t>(i)].second == 0;
      break;
    }
    r.set("depth R - depth M", d0);
  }
  std::string ls;
  for (auto& [i, l] : h.lengths) ls += (ls.empty() ? "" : ",") + std::to_string(l);
  r.set("Ext lengths", ls);
  r.set("vanishing propagates", yes(propagation));
  r.passed = *h.value == 0 && propagation;
  return {r};
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = [] {
    std::map<std::string, Suite> t;
    auto fixed = [](std::string s) { return [s](const CheckReport&) { return s; }; };
    t["chan"] = {{"chan"}, false, pair_instance, chan,
                 fixed("compute chi(M, N);\ncompute xi(M, N);\ncompute grade(M);\n")};
    t["graded-chan"] = {{"graded-chan"}, false, pair_instance, graded_chan, fixed("compute chan(M, N);\ncompute twist(M);\n")};
    t["theorem-a"] = {{"theorem-a"}, false, pair_instance, theorem_a, [](const CheckReport& r) {
                        std::string s;
                        const int g = std::stoi(r.get("grade M").empty() ? "0" : r.get("grade M"));
                        for (int j = 1; j <= g; ++j) s += "compute theoremA(" + std::to_string(j) + ", M, N);\n";
                        return s;
                      }};
    t["serre-vanishing"] = {{"serre-vanishing"}, false, pair_instance, serre,
                            fixed("compute dim(M);\ncompute dim(N);\ncompute chi(M, N);\ncompute xi(M, N);\n")};
    t["depth-formula"] = {{"depth-formula"}, false, pair_instance, depth_formula,
                          fixed("compute q(M, N);\ncompute depth(R);\ncompute depth(M);\ncompute depth(N);\n")};
    t["hochster-lichtenbaum"] = {{"hochster-lichtenbaum"}, false, pair_instance, hochster_lichtenbaum,
                                 [](const CheckReport& r) {
                                   std::string s;
                                   for (auto& [k, v] : r.values)
                                     if (k.rfind("chi_", 0) == 0)
                                       s += "compute chi(" + k.substr(4) + ", M, N);\n";
                                   return s + "compute resolution(M);\n";
                                 }};
    t["sign-trichotomy"] = {{"a", "b", "c"}, false, pair_instance, sign_trichotomy, [](const CheckReport& r) {
                              std::string s = "compute dim(M);\ncompute dim(N);\ncompute grade(M);\n";
                              for (auto& [k, v] : r.values)
                                if (k.rfind("xi_", 0) == 0) {
                                  const std::string j = k.substr(3);
                                  s += "compute xi(" + j + ", M, N);\ncompute ext(" + std::to_string(std::stoi(j) - 1) +
                                       ", M, N);\n";
                                }
                              return s;
                            }};
    t["jorgensen"] = {{"jorgensen"}, false,
                      [](InstanceGenerator& g, const RingPtr& r) { return Instance{r, g.ideal(1, 4), {}}; },
                      jorgensen, fixed("compute jorgensen(M);\n")};
    t["herbrand"] = {{"herbrand"}, true, hypersurface_instance, herbrand, [](const CheckReport& r) {
                       const std::string c = r.get("c");
                       return "compute cx(M);\ncompute cx(N);\ncompute h(" + c + ", M, N);\ncompute depth(R);\ncompute depth(M);\n";
                     }};
    return t;
  }();
  return table;
}

CheckReport witness(const RingPtr& ring, const std::string& label, const std::string& m_gens,
                    const std::string& n_gens, int expected_sign) {
  const PolyRing& p = ring->base();
  GradedModule m = GradedModule::cyclic(ring, parse_polynomials(p, m_gens));
  GradedModule n = GradedModule::cyclic(ring, parse_polynomials(p, n_gens));
  CheckReport r;
  r.name = label;
  PairContext ctx(m, n);
  const long xi1 = xi_partial(1, ctx);
  const int dsum = module_dimension(m) + module_dimension(n);
  const int g = module_grade(m);
  const bool hom = !ctx.ext(0).module.is_zero();
  r.set("M", "R/(" + m_gens + ")");
  r.set("N", "R/(" + n_gens + ")");
  r.set("xi_1", xi1);
  r.set("dim M + dim N", dsum);
  r.set("grade M", g);
  r.set("Ext^0 != 0", yes(hom));
  const long s = xi1 > 0 ? 1 : (xi1 < 0 ? -1 : 0);
  r.passed = dsum == 3 && (g + 1) % 2 == 1 && hom && s == expected_sign;
  return r;
}

}  // namespace

bool VerifySummary::ok() const {
  if (failed > 0) return false;
  for (const auto& w : witnesses)
    if (!w.passed) return false;
  for (const auto& [b, counts] : branches)
    if (counts.first < trials) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, s] : suites()) v.push_back(k);
    return v;
  }();
  return names;
}

namespace {

struct Setup {
  const Suite* suite;
  PolyRingPtr poly;
  RingPtr base;
  int bound;
};

Setup setup(const VerifyOptions& o) {
  auto it = suites().find(o.suite);
  if (it == suites().end()) throw ContractError("unknown suite: " + o.suite);
  if (o.trials < 1) throw ContractError("trials must be at least 1");
  if (o.vars < 1 || o.vars > 8) throw ContractError("vars must be between 1 and 8");
  auto poly = std::make_shared<const PolyRing>(Field::rationals(), default_variables(o.vars));
  const int bound = o.bound > 0 ? o.bound : (it->second.quotient ? 8 : 0);
  return {&it->second, poly, make_ring(poly, {}), bound};
}

// Reports of one trial; `nullopt` when the instance could not be built or
// evaluated at all.
std::optional<std::vector<Counterexample>> trial(const VerifyOptions& o, const Setup& st, int t) {
  const std::uint64_t seed = trial_seed(o.seed, static_cast<std::uint64_t>(t));
  InstanceGenerator gen(seed, st.poly, o.maxdeg);
  Instance in = st.suite->make(gen, st.base);
  std::vector<CheckReport> reports;
  try {
    reports = st.suite->check(in, st.bound);
  } catch (const StructuralError&) {
    return std::nullopt;  // e.g. a unit defining equation
  } catch (const HypothesisViolated&) {
    return std::nullopt;
  } catch (const InsufficientTruncation&) {
    return std::nullopt;
  }
  std::vector<Counterexample> out;
  for (const auto& r : reports) {
    if (r.skipped) continue;
    std::string script = "# " + o.suite + " trial " + std::to_string(t) + " seed " + std::to_string(seed);
    if (st.bound > 0) script += " bound " + std::to_string(st.bound);
    script += "\nring R = " + in.ring->description() + ";\n" + module_line("M", in, in.m) +
              module_line("N", in, in.n) + st.suite->replay(r);
    out.push_back({t, seed, script, r});
  }
  return out;
}

}  // namespace

std::vector<Counterexample> run_trial(const VerifyOptions& o, int t) {
  Setup st = setup(o);
  return trial(o, st, t).value_or(std::vector<Counterexample>{});
}

VerifySummary verify_suite(const VerifyOptions& o) {
  Setup st = setup(o);
  VerifySummary out;
  out.suite = o.suite;
  out.seed = o.seed;
  out.trials = o.trials;
  for (const auto& b : st.suite->branches) out.branches[b] = {0, 0};
  RingPtr base = st.base;
  auto done = [&] {
    for (const auto& [b, counts] : out.branches)
      if (counts.first < o.trials) return false;
    return true;
  };
  for (int t = 0; t < 20 * o.trials && !done(); ++t) {
    ++out.attempted;
    auto reports = trial(o, st, t);
    if (!reports || reports->empty()) continue;
    bool all = true;
    for (auto& c : *reports) {
      auto& counts = out.branches[c.report.name];
      ++counts.first;
      if (c.report.passed) ++counts.second;
      all = all && c.report.passed;
      if (!c.report.passed) out.counterexamples.push_back(std::move(c));
    }
    ++out.in_regime;
    if (all)
      ++out.passed;
    else
      ++out.failed;
  }

  if (o.suite == "sign-trichotomy" && o.vars == 3) {
    const std::string n1 = "(x)(x, y, z)", n2 = "(x)(x^2, y, z)";
    out.witnesses.push_back(witness(base, "odd case, negative", "y^2, z^2", n1, -1));
    out.witnesses.push_back(witness(base, "odd case, zero", "y, z", n1, 0));
    out.witnesses.push_back(witness(base, "odd case, positive", "y, z", n2, 1));
  }
  return out;
}

}  // namespace eulerform
