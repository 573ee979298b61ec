#include <chrono>
#include <map>
#include <sstream>

#include "eulerform/errors.hpp"
#include "eulerform/poly_parse.hpp"
#include "eulerform/session.hpp"

namespace eulerform {

namespace {

std::string int_or_infinite(int v) { return grade_to_string(v); }

class Executor {
 public:
  explicit Executor(const ExecConfig& c) : config_(c) {}

  void define(const RingDef& r) {
    Field field = r.characteristic ? Field::prime(r.characteristic) : Field::rationals();
    auto poly = std::make_shared<const PolyRing>(field, r.vars, r.weights);
    std::vector<Polynomial> ideal;
    for (const auto& g : r.ideal) ideal.push_back(parse_polynomial(*poly, g));
    rings_[r.name] = make_ring(poly, ideal);
  }

  void define(const ModuleDef& m) {
    std::optional<GradedModule> acc;
    for (const auto& t : m.summands) {
      GradedModule next = std::visit([&](const auto& term) { return build(term); }, t);
      acc = acc ? acc->direct_sum(next) : next;
    }
    modules_.emplace(m.name, *acc);
  }

  ResultRecord compute(const ComputeRequest& c);
  ResultRecord verify(const VerifyRequest& v);

 private:
  GradedModule build(const QuotientTerm& q) const {
    const RingPtr& r = rings_.at(q.ring);
    std::vector<Polynomial> gens;
    for (const auto& g : q.gens) gens.push_back(parse_polynomial(r->base(), g));
    return GradedModule::cyclic(r, gens);
  }
  GradedModule build(const CokerTerm& c) const {
    const RingPtr& r = rings_.at(c.ring);
    FreeModule f(c.degrees);
    VectorSpace vs(r->base(), f);
    std::vector<FreeVector> rels;
    const std::size_t ncols = c.rows.empty() ? 0 : c.rows.front().size();
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<Polynomial> col;
      for (const auto& row : c.rows) col.push_back(parse_polynomial(r->base(), row[j]));
      FreeVector v = vs.from_columns(col);
      if (!v.is_zero()) rels.push_back(std::move(v));
    }
    return GradedModule(r, f, rels);
  }
  GradedModule build(const FreeTerm& f) const { return GradedModule::free(rings_.at(f.ring), f.degrees); }
  GradedModule build(const ModuleRef& m) const { return modules_.at(m.name); }

  GradedModule module_arg(const ComputeArg& a) const {
    if (auto it = modules_.find(a.name); it != modules_.end()) return it->second;
    return GradedModule::free(rings_.at(a.name), {0});
  }

  int quotient_bound(const GradedModule& m) const {
    return config_.bound > 0 ? config_.bound : default_bound(*m.ring());
  }
  int asymptotic_bound() const { return config_.bound > 0 ? config_.bound : kDefaultAsymptoticBound; }

  void evaluate(const ComputeRequest& c, ResultRecord& rec, Json& report);

  ExecConfig config_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, GradedModule> modules_;
};

void fill_lengths(Json& report, const PairContext& ctx) { report["lengths"] = lengths_json(ctx.consulted()); }

void Executor::evaluate(const ComputeRequest& c, ResultRecord& rec, Json& report) {
  const std::string& inv = c.invariant;
  std::vector<GradedModule> mods;
  std::vector<long> ints;
  for (const auto& a : c.args) {
    if (a.is_int)
      ints.push_back(a.value);
    else
      mods.push_back(module_arg(a));
  }
  auto index = [&](std::size_t k) { return static_cast<int>(ints.at(k)); };

  if (inv == "ext" || inv == "tor") {
    FreeResolution res = resolve(mods[0], quotient_bound(mods[0]));
    HomologyModule h = inv == "ext" ? ext_module(index(0), res, mods[1]) : tor_module(index(0), res, mods[1]);
    rec.value = length_to_string(module_length(h.module));
    report["detail"] = to_json(h);
    report["lengths"] = Json::array({{{"functor", h.functor}, {"i", h.index}, {"length", rec.value}}});
  } else if (inv == "length") {
    rec.value = length_to_string(module_length(mods[0]));
  } else if (inv == "dim") {
    const int d = module_dimension(mods[0]);
    rec.value = d == kNegInfinity ? "-INFINITE" : std::to_string(d);
  } else if (inv == "depth") {
    const int d = module_depth(mods[0]);
    rec.value = d == kInfiniteDepth ? "INFINITE" : std::to_string(d);
  } else if (inv == "hilbert") {
    HilbertPolynomial p = hilbert_polynomial(mods[0]);
    rec.value = p.to_string();
    report["detail"] = to_json(p);
  } else if (inv == "betti" || inv == "resolution") {
    FreeResolution res = resolve(mods[0], quotient_bound(mods[0]));
    std::string s;
    for (int b : betti_numbers(res)) s += (s.empty() ? "" : ",") + std::to_string(b);
    if (res.truncated_at) s += ",...";
    rec.value = s;
    if (inv == "resolution") report["detail"] = to_json(res);
  } else if (inv == "chi" || inv == "xi" || inv == "xibar") {
    const int j = ints.empty() ? 0 : index(0);
    PairContext ctx(mods[0], mods[1], config_.bound);
    long v = 0;
    try {
      v = inv == "chi" ? chi_partial(j, ctx) : inv == "xi" ? xi_partial(j, ctx) : xi_bar(j, ctx);
    } catch (...) {
      fill_lengths(report, ctx);
      throw;
    }
    rec.value = std::to_string(v);
    fill_lengths(report, ctx);
  } else if (inv == "grade") {
    if (mods.size() == 1) {
      rec.value = int_or_infinite(module_grade(mods[0]));
    } else {
      PairContext ctx(mods[0], mods[1], config_.bound);
      rec.value = int_or_infinite(grade_pair(ctx));
      fill_lengths(report, ctx);
    }
  } else if (inv == "q") {
    PairContext ctx(mods[0], mods[1], config_.bound);
    rec.value = int_or_infinite(q_last_tor(ctx));
  } else if (inv == "twist") {
    TwistCoefficients tc = twist_coefficients(resolve(mods[0], quotient_bound(mods[0])));
    Json cs = Json::array();
    std::string s;
    for (const auto& x : tc.c) {
      cs.push_back(x.get_str());
      s += (s.empty() ? "" : ",") + x.get_str();
    }
    rec.value = "k0=" + std::to_string(tc.k0) + " c=" + s;
    report["detail"] = {{"c", cs}, {"k0", tc.k0}};
  } else if (inv == "chan" || inv == "theoremA" || inv == "jorgensen" || inv == "lemma24") {
    CheckReport r = inv == "chan"        ? graded_chan_check(mods[0], mods[1])
                    : inv == "theoremA"  ? theorem_A_check(index(0), mods[0], mods[1])
                    : inv == "jorgensen" ? jorgensen_check(mods[0])
                                         : lemma_2_4_check(index(0), mods[0], mods[1]);
    Json j = to_json(r, {});
    report["lengths"] = j["lengths"];
    report["hypotheses"] = j["hypotheses"];
    report["detail"] = j["values"];
    if (r.skipped) {
      rec.status = "skipped";
      rec.value = "skipped";
      rec.message = "hypothesis failed: " + *r.skipped;
    } else {
      rec.status = r.passed ? "ok" : "failed";
      rec.value = r.passed ? "pass" : "fail";
    }
  } else if (inv == "cx" || inv == "px") {
    Complexity cx = inv == "cx" ? complexity(mods[0], asymptotic_bound()) : plexity(mods[0], asymptotic_bound());
    rec.value = std::to_string(cx.value);
    rec.message = to_string(cx.confidence);
    report["detail"] = to_json(cx);
  } else if (inv == "h" || inv == "eta") {
    AsymptoticEstimate a = inv == "h" ? herbrand_h(index(0), mods[0], mods[1], asymptotic_bound())
                                      : eta(index(0), mods[0], mods[1], asymptotic_bound());
    if (a.value) {
      rec.value = a.value->get_str();
    } else if (!a.accumulation.empty()) {
      rec.value = "{" + a.accumulation[0].get_str() + ", " + a.accumulation[1].get_str() + "}";
    } else {
      rec.value = "inconclusive";
    }
    rec.message = to_string(a.verdict);
    report["detail"] = to_json(a);
    std::map<std::string, long> ls;
    for (auto& [i, l] : a.lengths) ls[(inv == "h" ? "Ext^" : "Tor_") + std::to_string(i)] = l;
    report["lengths"] = lengths_json(ls);
  } else if (inv == "ftor" || inv == "fext") {
    auto f = f_threshold(inv == "ftor" ? Functor::tor : Functor::ext, mods[0], mods[1], asymptotic_bound());
    rec.value = f ? std::to_string(*f) : "inconclusive";
  } else if (inv == "period") {
    FreeResolution res = resolve(mods[0], asymptotic_bound());
    auto p = detect_period(res);
    rec.value = p ? "start=" + std::to_string(p->start) + " period=" + std::to_string(p->period) : "none";
    report["detail"] = p ? Json{{"start", p->start}, {"period", p->period}} : Json(nullptr);
  } else {
    throw ContractError("unknown invariant " + inv);
  }
}

ResultRecord Executor::compute(const ComputeRequest& c) {
  ResultRecord rec;
  rec.status = "ok";
  Json report;
  report["invariant"] = c.invariant;
  Json args = Json::array();
  for (const auto& a : c.args) args.push_back(a.is_int ? std::to_string(a.value) : a.name);
  report["args"] = args;
  report["lengths"] = Json::array();
  report["hypotheses"] = Json::array();
  try {
    evaluate(c, rec, report);
  } catch (const HypothesisViolated& e) {
    rec.status = "skipped";
    rec.value = "skipped";
    rec.message = "hypothesis failed: " + e.hypothesis() + " (" + e.what() + ")";
    report["hypotheses"] = Json::array({{{"name", e.hypothesis()}, {"holds", false}}});
  } catch (const InsufficientTruncation& e) {
    rec.status = "error";
    rec.value = "insufficient truncation";
    rec.message = e.what();
    report["error"] = {{"kind", "insufficient truncation"}, {"requested", e.requested()}, {"bound", e.bound()}};
  } catch (const AlgebraError& e) {
    rec.status = "error";
    rec.value = "error";
    rec.message = e.what();
    report["error"] = {{"kind", "computation error"}, {"message", e.what()}};
  }
  report["value"] = rec.value;
  rec.data = report;
  return rec;
}

ResultRecord Executor::verify(const VerifyRequest& v) {
  VerifyOptions o;
  o.suite = v.suite;
  o.seed = config_.seed;
  o.bound = config_.bound;
  for (const auto& [k, val] : v.options) {
    if (k == "trials") o.trials = static_cast<int>(val);
    if (k == "seed") o.seed = static_cast<std::uint64_t>(val);
    if (k == "vars") o.vars = static_cast<int>(val);
    if (k == "maxdeg") o.maxdeg = static_cast<int>(val);
    if (k == "bound") o.bound = static_cast<int>(val);
  }
  ResultRecord rec;
  rec.seed = o.seed;
  try {
    VerifySummary s = verify_suite(o);
    rec.status = s.ok() ? "ok" : "failed";
    rec.value = std::to_string(s.passed) + "/" + std::to_string(s.in_regime) + " passed";
    std::ostringstream msg;
    msg << "attempted " << s.attempted << ", failed " << s.failed;
    if (s.branches.size() > 1)
      for (const auto& [b, counts] : s.branches) msg << ", branch " << b << " " << counts.second << "/" << counts.first;
    for (const auto& w : s.witnesses) msg << ", witness " << w.name << (w.passed ? " ok" : " FAILED");
    rec.message = msg.str();
    rec.data = to_json(s);
  } catch (const AlgebraError& e) {
    rec.status = "error";
    rec.value = "error";
    rec.message = e.what();
  }
  return rec;
}

}  // namespace

std::vector<ResultRecord> execute(const SessionScript& script, const ExecConfig& config) {
  Executor ex(config);
  std::vector<ResultRecord> out;
  for (const auto& st : script.statements) {
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<ResultRecord> rec;
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, RingDef> || std::is_same_v<T, ModuleDef>)
            ex.define(body);
          else if constexpr (std::is_same_v<T, ComputeRequest>)
            rec = ex.compute(body);
          else
            rec = ex.verify(body);
        },
        st.body);
    if (!rec) continue;
    rec->request = print_statement(st);
    rec->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(*rec));
  }
  return out;
}

int exit_code(const std::vector<ResultRecord>& records) {
  bool skipped = false;
  for (const auto& r : records) {
    if (r.status == "error" || r.status == "failed") return 1;
    if (r.status == "skipped") skipped = true;
  }
  return skipped ? 2 : 0;
}

Json records_json(const std::vector<ResultRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    Json j;
    j["request"] = r.request;
    j["status"] = r.status;
    j["value"] = r.value;
    if (!r.message.empty()) j["message"] = r.message;
    j["report"] = r.data;
    std::ostringstream t;
    t.precision(6);
    t << std::fixed << r.seconds;
    j["seconds"] = t.str();
    if (r.seed) j["seed"] = std::to_string(*r.seed);
    out.push_back(j);
  }
  return out;
}

std::string render_table(const std::vector<ResultRecord>& records) {
  if (records.empty()) return "";
  std::size_t w0 = 7, w1 = 6, w2 = 5;
  for (const auto& r : records) {
    w0 = std::max(w0, r.request.size());
    w1 = std::max(w1, r.status.size());
    w2 = std::max(w2, r.value.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::string out = pad("request", w0) + "  " + pad("status", w1) + "  " + pad("value", w2) + "  note\n";
  for (const auto& r : records) {
    std::string line = pad(r.request, w0) + "  " + pad(r.status, w1) + "  " + pad(r.value, w2) + "  " + r.message;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace eulerform
