#include "eulerform/json_export.hpp"

namespace eulerform {

std::string length_to_string(long l) { return l == kInfinite ? "INFINITE" : std::to_string(l); }

Json to_json(const FreeResolution& res) {
  const PolyRing& p = res.ring->base();
  Json levels = Json::array();
  for (int i = 0; i <= res.length(); ++i) {
    Json level;
    level["rank"] = res.rank(i);
    level["twists"] = res.twists(i);
    Json rows = Json::array();
    if (const Matrix* d = res.differential(i)) {
      for (std::size_t r = 0; r < d->rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < d->cols(); ++c) row.push_back(p.to_string(d->at(r, c)));
        rows.push_back(row);
      }
    }
    level["matrix"] = rows;
    levels.push_back(level);
  }
  Json out;
  out["ring"] = res.ring->description();
  out["levels"] = levels;
  out["truncated_at"] = res.truncated_at ? Json(*res.truncated_at) : Json(nullptr);
  return out;
}

Json to_json(const HomologyModule& h) {
  Json out;
  out["functor"] = h.functor;
  out["index"] = h.index;
  out["presentation"] = h.module.to_string();
  out["length"] = length_to_string(module_length(h.module));
  const int d = module_dimension(h.module);
  out["dimension"] = d == kNegInfinity ? "-INFINITE" : std::to_string(d);
  return out;
}

Json to_json(const HilbertPolynomial& p) {
  Json out;
  Json cs = Json::array();
  for (const auto& c : p.coefficients) cs.push_back(c.get_str());
  out["coefficients"] = cs;
  out["n0"] = p.n0;
  return out;
}

Json to_json(const AsymptoticEstimate& a) {
  Json out;
  out["e"] = a.e;
  out["functor"] = to_string(a.functor);
  out["threshold"] = a.threshold ? Json(*a.threshold) : Json("inconclusive");
  Json trace = Json::array();
  for (const auto& t : a.trace)
    trace.push_back({{"n", t.n}, {"partial_sum", t.partial_sum.get_str()}, {"scaled", t.scaled.get_str()}});
  out["trace"] = trace;
  Json verdict;
  verdict["kind"] = to_string(a.verdict);
  if (a.value) verdict["value"] = a.value->get_str();
  if (a.window) verdict["window"] = {a.window->first, a.window->second};
  if (!a.accumulation.empty()) {
    Json acc = Json::array();
    for (const auto& v : a.accumulation) acc.push_back(v.get_str());
    verdict["accumulation"] = acc;
  }
  out["verdict"] = verdict;
  out["certificate"] =
      a.certificate ? Json{{"start", a.certificate->start}, {"period", a.certificate->period}} : Json(nullptr);
  return out;
}

Json to_json(const Complexity& c) {
  Json out;
  out["value"] = c.value;
  out["confidence"] = to_string(c.confidence);
  out["sequence"] = c.sequence;
  out["certificate"] =
      c.certificate ? Json{{"start", c.certificate->start}, {"period", c.certificate->period}} : Json(nullptr);
  return out;
}

Json lengths_json(const std::map<std::string, long>& lengths) {
  Json out = Json::array();
  for (const auto& [key, l] : lengths) {
    const bool tor = key.rfind("Tor_", 0) == 0;
    out.push_back({{"functor", tor ? "Tor" : "Ext"}, {"i", std::stoi(key.substr(4))}, {"length", length_to_string(l)}});
  }
  return out;
}

Json to_json(const CheckReport& r, const std::vector<std::string>& args) {
  Json out;
  out["invariant"] = r.name;
  out["args"] = args;
  out["value"] = r.skipped ? "skipped" : (r.passed ? "pass" : "fail");
  out["lengths"] = lengths_json(r.lengths);
  Json hyps = Json::array();
  if (r.skipped) hyps.push_back({{"name", *r.skipped}, {"holds", false}});
  out["hypotheses"] = hyps;
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  out["values"] = values;
  return out;
}

Json to_json(const VerifySummary& s) {
  Json out;
  out["suite"] = s.suite;
  out["seed"] = std::to_string(s.seed);
  out["trials"] = s.trials;
  out["attempted"] = s.attempted;
  out["in_regime"] = s.in_regime;
  out["passed"] = s.passed;
  out["failed"] = s.failed;
  Json branches = Json::object();
  for (const auto& [b, c] : s.branches) branches[b] = {{"in_regime", c.first}, {"passed", c.second}};
  out["branches"] = branches;
  Json dumps = Json::array();
  for (const auto& c : s.counterexamples)
    dumps.push_back({{"trial", c.trial}, {"seed", std::to_string(c.seed)}, {"script", c.script}, {"report", to_json(c.report, {})}});
  out["counterexamples"] = dumps;
  Json wit = Json::array();
  for (const auto& w : s.witnesses) wit.push_back(to_json(w, {}));
  out["witnesses"] = wit;
  out["ok"] = s.ok();
  return out;
}

}  // namespace eulerform
