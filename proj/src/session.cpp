#include "eulerform/session.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eulerform/errors.hpp"
#include "lexer.hpp"

namespace eulerform {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

// Argument patterns per invariant: i = integer, M = module.
const std::map<std::string, std::vector<std::string>>& signatures() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"ext", {"iMM"}},      {"tor", {"iMM"}},       {"length", {"M"}},     {"dim", {"M"}},
      {"depth", {"M"}},      {"hilbert", {"M"}},     {"betti", {"M"}},      {"resolution", {"M"}},
      {"chi", {"MM", "iMM"}}, {"xi", {"MM", "iMM"}}, {"xibar", {"iMM"}},    {"grade", {"M", "MM"}},
      {"q", {"MM"}},         {"twist", {"M"}},       {"chan", {"MM"}},      {"theoremA", {"iMM"}},
      {"jorgensen", {"M"}},  {"lemma24", {"iMM"}},   {"cx", {"M"}},         {"px", {"M"}},
      {"h", {"iMM"}},        {"eta", {"iMM"}},       {"ftor", {"MM"}},      {"fext", {"MM"}},
      {"period", {"M"}},
  };
  return table;
}

const std::set<std::string>& verify_options() {
  static const std::set<std::string> s = {"trials", "seed", "vars", "maxdeg", "bound"};
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : ts_(detail::tokenize(text)) {}

  SessionScript run() {
    SessionScript out;
    while (!ts_.at_end()) out.statements.push_back(statement());
    return out;
  }

 private:
  struct RingInfo {
    PolyRingPtr poly;
    RingPtr ring;
  };

  Statement statement() {
    const Token& head = ts_.peek();
    Statement s;
    s.pos = {head.line, head.column};
    if (ts_.at_name("ring")) {
      s.body = ring_def();
    } else if (ts_.at_name("module")) {
      s.body = module_def();
    } else if (ts_.at_name("compute")) {
      s.body = compute();
    } else if (ts_.at_name("verify")) {
      s.body = verify();
    } else {
      ts_.fail("expected 'ring', 'module', 'compute' or 'verify'");
    }
    ts_.expect_symbol(";");
    return s;
  }

  std::string fresh_name() {
    const Token& t = ts_.expect_name();
    if (rings_.count(t.text) || modules_.count(t.text)) ts_.fail_at(t, "name '" + t.text + "' is already defined");
    return t.text;
  }

  RingDef ring_def() {
    ts_.next();
    RingDef def;
    def.name = fresh_name();
    ts_.expect_symbol("=");
    const Token& field_tok = ts_.expect_name();
    Field field = Field::rationals();
    if (field_tok.text == "GF") {
      ts_.expect_symbol("(");
      const Token& pt = ts_.peek();
      long p = ts_.expect_int();
      ts_.expect_symbol(")");
      if (p < 2) ts_.fail_at(pt, "GF(p) needs a prime p");
      def.characteristic = static_cast<std::uint32_t>(p);
      field = guard(pt, [&] { return Field::prime(def.characteristic); });
    } else if (field_tok.text != "QQ") {
      ts_.fail_at(field_tok, "unknown field '" + field_tok.text + "' (use QQ or GF(p))");
    }
    ts_.expect_symbol("[");
    bool weighted = false;
    do {
      if (!def.vars.empty()) ts_.next();
      def.vars.push_back(ts_.expect_name().text);
      int w = 1;
      if (ts_.at_symbol(":")) {
        ts_.next();
        const Token& wt = ts_.peek();
        w = static_cast<int>(ts_.expect_int());
        if (w < 1) ts_.fail_at(wt, "weights must be positive");
        weighted = true;
      }
      def.weights.push_back(w);
    } while (ts_.at_symbol(","));
    const Token& close = ts_.peek();
    ts_.expect_symbol("]");
    if (!weighted || std::all_of(def.weights.begin(), def.weights.end(), [](int w) { return w == 1; }))
      def.weights.clear();
    auto poly = guard(close, [&] { return std::make_shared<const PolyRing>(field, def.vars, def.weights); });
    std::vector<Polynomial> ideal;
    const Token& slash = ts_.peek();
    if (ts_.at_symbol("/")) {
      ts_.next();
      ideal = detail::parse_expr(ts_, *poly).generators();
      ideal.erase(std::remove_if(ideal.begin(), ideal.end(), [](const Polynomial& f) { return f.is_zero(); }),
                  ideal.end());
      for (const auto& f : ideal) def.ideal.push_back(poly->to_string(f));
    }
    RingPtr ring = guard(slash, [&] { return make_ring(poly, ideal); });
    rings_[def.name] = {poly, ring};
    return def;
  }

  std::vector<int> int_list(const char* open, const char* close) {
    std::vector<int> out;
    ts_.expect_symbol(open);
    if (!ts_.at_symbol(close)) {
      out.push_back(static_cast<int>(ts_.expect_int()));
      while (ts_.at_symbol(",")) {
        ts_.next();
        out.push_back(static_cast<int>(ts_.expect_int()));
      }
    }
    ts_.expect_symbol(close);
    return out;
  }

  const RingInfo& ring_named(const Token& t) {
    auto it = rings_.find(t.text);
    if (it == rings_.end()) ts_.fail_at(t, "unknown ring '" + t.text + "'");
    return it->second;
  }

  // Builds the summand to validate it and returns its ring name.
  std::pair<ModuleTerm, std::string> summand() {
    const Token& head = ts_.peek();
    if (ts_.at_name("coker")) {
      ts_.next();
      const Token& rt = ts_.expect_name();
      const RingInfo& ri = ring_named(rt);
      CokerTerm term{rt.text, int_list("{", "}"), {}};
      ts_.expect_symbol("[");
      std::vector<std::vector<Polynomial>> rows;
      while (ts_.at_symbol("[")) {
        ts_.next();
        std::vector<Polynomial> row;
        while (!ts_.at_symbol("]")) {
          if (!row.empty()) ts_.expect_symbol(",");
          detail::ExprValue v = detail::parse_expr(ts_, *ri.poly);
          if (v.is_ideal) ts_.fail("matrix entries must be polynomials");
          row.push_back(v.poly);
        }
        ts_.expect_symbol("]");
        rows.push_back(std::move(row));
        if (!ts_.at_symbol(",")) break;
        ts_.next();
      }
      ts_.expect_symbol("]");
      if (rows.size() != term.degrees.size())
        ts_.fail_at(head, "coker matrix needs one row per generator degree");
      for (const auto& row : rows) {
        if (row.size() != rows.front().size()) ts_.fail_at(head, "coker matrix rows differ in length");
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(ri.poly->to_string(e));
        term.rows.push_back(std::move(r));
      }
      guard(head, [&] { return build_coker(ri.ring, term.degrees, rows); });
      return {term, rt.text};
    }
    const Token& nt = ts_.expect_name();
    if (auto mit = modules_.find(nt.text); mit != modules_.end()) return {ModuleRef{nt.text}, mit->second};
    const RingInfo& ri = ring_named(nt);
    if (ts_.at_symbol("/")) {
      ts_.next();
      QuotientTerm term{nt.text, {}};
      std::vector<Polynomial> gens;
      for (auto& g : detail::parse_expr(ts_, *ri.poly).generators())
        if (!g.is_zero()) gens.push_back(g);
      for (const auto& g : gens) term.gens.push_back(ri.poly->to_string(g));
      guard(head, [&] { return GradedModule::cyclic(ri.ring, gens); });
      return {term, nt.text};
    }
    FreeTerm term{nt.text, {0}};
    if (ts_.at_symbol("^")) {
      ts_.next();
      if (ts_.at_symbol("{")) {
        term.degrees = int_list("{", "}");
      } else {
        const Token& kt = ts_.peek();
        long k = ts_.expect_int();
        if (k < 0 || k > 10000) ts_.fail_at(kt, "rank out of range");
        term.degrees.assign(static_cast<std::size_t>(k), 0);
      }
    }
    return {term, nt.text};
  }

  ModuleDef module_def() {
    ts_.next();
    ModuleDef def;
    def.name = fresh_name();
    ts_.expect_symbol("=");
    std::string ring;
    do {
      if (!def.summands.empty()) ts_.next();
      const Token& at = ts_.peek();
      auto [term, r] = summand();
      if (!ring.empty() && r != ring) ts_.fail_at(at, "summands live over different rings");
      ring = r;
      def.summands.push_back(std::move(term));
    } while (ts_.at_symbol("++"));
    modules_[def.name] = ring;
    return def;
  }

  ComputeRequest compute() {
    ts_.next();
    const Token& nt = ts_.expect_name();
    auto sig = signatures().find(nt.text);
    if (sig == signatures().end()) ts_.fail_at(nt, "unknown invariant '" + nt.text + "'");
    ComputeRequest req{nt.text, {}};
    ts_.expect_symbol("(");
    std::string pattern;
    while (!ts_.at_symbol(")")) {
      if (!req.args.empty()) ts_.expect_symbol(",");
      ComputeArg a;
      if (ts_.peek().kind == Tok::kName) {
        const Token& t = ts_.next();
        if (!modules_.count(t.text) && !rings_.count(t.text)) ts_.fail_at(t, "unknown identifier '" + t.text + "'");
        a.name = t.text;
        pattern += "M";
      } else {
        a.is_int = true;
        a.value = ts_.expect_int();
        pattern += "i";
      }
      req.args.push_back(std::move(a));
    }
    const auto& allowed = sig->second;
    if (std::find(allowed.begin(), allowed.end(), pattern) == allowed.end()) {
      std::string msg = nt.text + " expects arguments";
      for (const auto& p : allowed) {
        msg += " (";
        for (std::size_t k = 0; k < p.size(); ++k) msg += std::string(k ? ", " : "") + (p[k] == 'i' ? "integer" : "module");
        msg += ")";
      }
      ts_.fail(msg);
    }
    ts_.expect_symbol(")");
    return req;
  }

  VerifyRequest verify() {
    ts_.next();
    const Token& st = ts_.peek();
    VerifyRequest req;
    req.suite = ts_.expect_name().text;
    while (ts_.at_symbol("-")) {
      ts_.next();
      req.suite += "-" + ts_.expect_name().text;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), req.suite) == names.end())
      ts_.fail_at(st, "unknown suite '" + req.suite + "'");
    while (ts_.peek().kind == Tok::kName) {
      const Token& k = ts_.next();
      if (!verify_options().count(k.text)) ts_.fail_at(k, "unknown option '" + k.text + "'");
      ts_.expect_symbol("=");
      req.options.emplace_back(k.text, ts_.expect_int());
    }
    return req;
  }

  template <typename F>
  auto guard(const Token& at, F f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const AlgebraError& e) {
      ts_.fail_at(at, e.what());
    }
  }

  static GradedModule build_coker(const RingPtr& ring, const std::vector<int>& degrees,
                                  const std::vector<std::vector<Polynomial>>& rows) {
    FreeModule f(degrees);
    VectorSpace vs(ring->base(), f);
    std::vector<FreeVector> rels;
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < ncols; ++c) {
      std::vector<Polynomial> col;
      for (const auto& row : rows) col.push_back(row[c]);
      FreeVector v = vs.from_columns(col);
      if (!v.is_zero()) rels.push_back(std::move(v));
    }
    return GradedModule(ring, f, rels);
  }

  TokenStream ts_;
  std::map<std::string, RingInfo> rings_;
  std::map<std::string, std::string> modules_;  // module -> ring name
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

struct Printer {
  std::string operator()(const RingDef& r) const {
    std::string s = "ring " + r.name + " = " +
                    (r.characteristic ? "GF(" + std::to_string(r.characteristic) + ")" : std::string("QQ")) + "[";
    for (std::size_t i = 0; i < r.vars.size(); ++i) {
      if (i) s += ", ";
      s += r.vars[i];
      if (!r.weights.empty() && r.weights[i] != 1) s += ":" + std::to_string(r.weights[i]);
    }
    s += "]";
    if (!r.ideal.empty()) s += " / (" + join(r.ideal) + ")";
    return s;
  }
  std::string operator()(const ModuleDef& m) const {
    std::string s = "module " + m.name + " = ";
    for (std::size_t i = 0; i < m.summands.size(); ++i) {
      if (i) s += " ++ ";
      s += std::visit(*this, m.summands[i]);
    }
    return s;
  }
  std::string operator()(const QuotientTerm& q) const { return q.ring + "/(" + (q.gens.empty() ? "0" : join(q.gens)) + ")"; }
  std::string operator()(const CokerTerm& c) const {
    std::string s = "coker " + c.ring + " {" + join_ints(c.degrees) + "} [";
    for (std::size_t i = 0; i < c.rows.size(); ++i) s += std::string(i ? ", " : "") + "[" + join(c.rows[i]) + "]";
    return s + "]";
  }
  std::string operator()(const FreeTerm& f) const {
    if (std::all_of(f.degrees.begin(), f.degrees.end(), [](int d) { return d == 0; }))
      return f.ring + "^" + std::to_string(f.degrees.size());
    return f.ring + "^{" + join_ints(f.degrees) + "}";
  }
  std::string operator()(const ModuleRef& r) const { return r.name; }
  std::string operator()(const ComputeRequest& c) const {
    std::string s = "compute " + c.invariant + "(";
    for (std::size_t i = 0; i < c.args.size(); ++i)
      s += std::string(i ? ", " : "") + (c.args[i].is_int ? std::to_string(c.args[i].value) : c.args[i].name);
    return s + ")";
  }
  std::string operator()(const VerifyRequest& v) const {
    std::string s = "verify " + v.suite;
    for (const auto& [k, val] : v.options) s += " " + k + "=" + std::to_string(val);
    return s;
  }
};

}  // namespace

SessionScript parse_session(std::string_view text) { return Parser(text).run(); }

std::string print_statement(const Statement& s) { return std::visit(Printer{}, s.body) + ";"; }

std::string print_session(const SessionScript& script) {
  std::string out;
  for (const auto& s : script.statements) out += print_statement(s) + "\n";
  return out;
}

}  // namespace eulerform
