#include <random>

#include "doctest.h"
#include "eulerform/errors.hpp"
#include "eulerform/poly_parse.hpp"
#include "eulerform/session.hpp"

using namespace eulerform;

namespace {

std::vector<ResultRecord> run(const std::string& text, int bound = 0) {
  return execute(parse_session(text), ExecConfig{"table", 7, bound});
}

const char* kExample28 =
    "ring R = QQ[x,y,z]; module M = R/(y^2,z^2); module N = R/((x)*(x,y,z)); compute xi(1,M,N);";

ParseError parse_error(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError("", 0, 0);
}

// Random scripts for the round-trip property.
class ScriptGen {
 public:
  explicit ScriptGen(std::uint64_t seed) : rng_(seed) {}

  std::string script() {
    vars_ = pick(std::vector<std::vector<std::string>>{{"x", "y"}, {"x", "y", "z"}, {"a", "b", "c", "d"}});
    std::string s = "ring R = " + std::string(coin() ? "QQ" : "GF(" + pick(std::vector<std::string>{"7", "32003"}) + ")") + "[";
    const bool weighted = roll(4) == 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i] + (weighted ? ":1" : "");
    s += "]";
    if (roll(3) == 0) s += " / (" + poly(2) + ")";
    s += ";\n";
    std::vector<std::string> mods;
    const int nm = 1 + roll(3);
    for (int i = 0; i < nm; ++i) {
      std::string name = "M" + std::to_string(i);
      s += "module " + name + " = " + module_expr(mods) + ";\n";
      mods.push_back(name);
    }
    const int nc = roll(4);
    for (int i = 0; i < nc; ++i) s += compute(mods) + ";\n";
    if (coin()) s += "verify chan trials=" + std::to_string(1 + roll(9)) + " seed=" + std::to_string(roll(100)) + ";\n";
    return s;
  }

 private:
  int roll(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return roll(2) == 0; }
  template <typename T>
  T pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(roll(static_cast<int>(v.size())))]; }

  std::string monomial(int d) {
    std::string s;
    for (int k = 0; k < d; ++k) s += (k ? "*" : "") + pick(vars_);
    return s.empty() ? "1" : s;
  }
  // Homogeneous of degree d, sometimes as a product of two factors.
  std::string poly(int d) {
    if (d >= 2 && roll(3) == 0) return "(" + poly(1) + ")*(" + poly(d - 1) + ")";
    std::string s = monomial(d);
    const int extra = roll(3);
    for (int k = 0; k < extra; ++k) s += pick(std::vector<std::string>{" + ", " - ", " + 3*", " - 1/2*"}) + monomial(d);
    return s;
  }
  std::string ideal() {
    switch (roll(4)) {
      case 0: return "(" + poly(1 + roll(2)) + ")*(" + poly(1) + ", " + poly(1) + ")";
      case 1: return "(" + poly(1) + ", " + poly(1) + ")^2";
      case 2: return "(" + poly(2) + ") + (" + poly(1) + ", " + poly(3) + ")";
      default: return "(" + poly(1 + roll(3)) + ", " + poly(1 + roll(3)) + ")";
    }
  }
  std::string summand(const std::vector<std::string>& mods) {
    switch (roll(5)) {
      case 0: return "R^" + std::to_string(roll(3));
      case 1: return "R^{0, 1}";
      case 2: return "coker R {0, 1} [[" + poly(2) + ", " + poly(1) + "], [" + poly(1) + ", 0]]";
      case 3:
        if (!mods.empty()) return pick(mods);
        [[fallthrough]];
      default: return "R/" + ideal();
    }
  }
  std::string module_expr(const std::vector<std::string>& mods) {
    std::string s = summand(mods);
    if (roll(4) == 0) s += " ++ " + summand(mods);
    return s;
  }
  std::string compute(const std::vector<std::string>& mods) {
    const std::string m = pick(mods), n = pick(mods);
    switch (roll(6)) {
      case 0: return "compute xi(" + std::to_string(roll(3)) + ", " + m + ", " + n + ")";
      case 1: return "compute chi(" + m + ", " + n + ")";
      case 2: return "compute xibar(-1, " + m + ", " + n + ")";
      case 3: return "compute betti(" + m + ")";
      case 4: return "compute depth(R)";
      default: return "compute h(" + std::to_string(roll(3)) + ", " + m + ", " + n + ")";
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> vars_;
};

}  // namespace

TEST_CASE("parsing the worked example") {
  SessionScript s = parse_session(kExample28);
  REQUIRE(s.statements.size() == 4);
  const auto& n = std::get<ModuleDef>(s.statements[2].body);
  REQUIRE(n.summands.size() == 1);
  CHECK(std::get<QuotientTerm>(n.summands[0]).gens == std::vector<std::string>{"x^2", "x*y", "x*z"});
  // The paper-style juxtaposition gives the same ideal.
  SessionScript t = parse_session("ring R = QQ[x,y,z]; module N = R/(x)(x,y,z);");
  CHECK(std::get<ModuleDef>(t.statements[1].body) == n);
  const auto& c = std::get<ComputeRequest>(s.statements[3].body);
  CHECK(c.invariant == "xi");
  CHECK(c.args.size() == 3);
  CHECK(c.args[0].is_int);
  CHECK(s.statements[3].pos.line == 1);
}

TEST_CASE("parse diagnostics") {
  auto e1 = parse_error("ring R = QQ[x,y,z];\nmodule M = R/(x);\ncompute xi(1,M,M)");
  CHECK(e1.line() == 3);
  CHECK(e1.column() == 18);
  CHECK(std::string(e1.what()).find("end of input") != std::string::npos);

  auto e2 = parse_error("ring R = QQ[x,y];\nmodule M = R/(x + y^2);");
  CHECK(e2.line() == 2);
  CHECK(std::string(e2.what()).find("homogeneous") != std::string::npos);
  // Inhomogeneous for (1,1) but homogeneous for weights (2,1).
  CHECK_NOTHROW(parse_session("ring R = QQ[x:2,y]; module M = R/(x + y^2);"));

  auto e3 = parse_error("ring R = QQ[x,y];\ncompute dim(M);");
  CHECK(e3.line() == 2);
  CHECK(e3.column() == 13);
  CHECK(std::string(e3.what()).find("unknown identifier") != std::string::npos);

  CHECK(parse_error("ring R = QQ[x]; module M = R/(w);").column() == 31);
  CHECK(parse_error("ring R = QQ[x]; module M = S/(x);").column() == 28);
  parse_error("ring R = QQ[x]; module M = R/(x); compute frobnicate(M);");
  parse_error("ring R = QQ[x]; module M = R/(x); compute xi(M);");
  parse_error("ring R = QQ[x]; module M = R/(x); module M = R/(x^2);");
  parse_error("ring R = GF(12)[x];");
  parse_error("ring R = ZZ[x];");
  parse_error("ring R = QQ[x] / (x + 1);");
  parse_error("ring R = QQ[x]; verify nosuchsuite;");
  parse_error("ring R = QQ[x]; verify chan speed=3;");
  parse_error("ring R = QQ[x]; ring S = QQ[y]; module M = R/(x) ++ S/(y);");
  parse_error("ring R = QQ[x]; module M = coker R {0, 0} [[x]];");
  parse_error("ring R = QQ[x, y]; module M = R/(x) $");
}

TEST_CASE("printing") {
  auto s = parse_session(
      "ring S = GF(7)[x:2, y] / (x - y^2); module A = coker S {0, 1} [[y^2, x], [y, 0]] ++ S^{0, 3};"
      "verify sign-trichotomy trials=3 seed=9; compute xibar(-1, A, A);");
  CHECK(print_session(s) ==
        "ring S = GF(7)[x:2, y] / (x + 6*y^2);\n"
        "module A = coker S {0, 1} [[y^2, x], [y, 0]] ++ S^{0, 3};\n"
        "verify sign-trichotomy trials=3 seed=9;\n"
        "compute xibar(-1, A, A);\n");
  CHECK(print_session(parse_session("")) == "");
}

TEST_CASE("round trip on random scripts") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ScriptGen gen(seed);
    const std::string text = gen.script();
    CAPTURE(text);
    SessionScript a = parse_session(text);
    const std::string printed = print_session(a);
    CAPTURE(printed);
    SessionScript b = parse_session(printed);
    CHECK(a == b);
    CHECK(print_session(b) == printed);
  }
}

TEST_CASE("executing the three odd-case examples") {
  auto r = run(std::string(kExample28) +
               "module M2 = R/(y,z); module N3 = R/((x)*(x^2,y,z));"
               "compute xi(1, M2, N); compute xi(1, M2, N3); compute dim(M); compute dim(N); compute grade(M);"
               "compute ext(0, M, N);");
  REQUIRE(r.size() == 7);
  CHECK(r[0].value == "-3");
  CHECK(r[1].value == "0");
  CHECK(r[2].value == "1");
  CHECK(r[3].value == "1");
  CHECK(r[4].value == "2");
  CHECK(r[5].value == "2");
  CHECK(r[6].value != "0");
  CHECK(exit_code(r) == 0);
  CHECK(r[0].request == "compute xi(1, M, N);");
  CHECK(r[0].data["invariant"] == "xi");
  CHECK(r[0].data["value"] == "-3");
  CHECK(r[0].data["lengths"].size() == 2);
}

TEST_CASE("exit codes and structured failures") {
  CHECK(run("").empty());
  CHECK(exit_code(run("")) == 0);

  auto skip = run("ring R = QQ[x,y,z]; module M = R/(x); module N = R/(y); compute chi(M, N);");
  CHECK(skip[0].status == "skipped");
  CHECK(skip[0].data["hypotheses"][0]["name"] == "length(Tor_0) < ∞");
  CHECK(skip[0].data["hypotheses"][0]["holds"] == false);
  CHECK(exit_code(skip) == 2);

  auto trunc = run("ring A = QQ[x]/(x^2); module k = A/(x); compute ext(9, k, k);", 5);
  CHECK(trunc[0].status == "error");
  CHECK(trunc[0].value == "insufficient truncation");
  CHECK(trunc[0].data["error"]["bound"] == 5);
  CHECK(exit_code(trunc) == 1);
  auto fits = run("ring A = QQ[x]/(x^2); module k = A/(x); compute ext(4, k, k);", 5);
  CHECK(fits[0].value == "1");

  auto mixed = run("ring R = QQ[x,y:2]; module M = R/(x); compute hilbert(M); compute dim(M);");
  CHECK(mixed[0].status == "error");
  CHECK(mixed[1].value == "1");
  CHECK(exit_code(mixed) == 1);

  auto sk = run("ring R = QQ[x,y,z]; module M = R/(y^2, z^2); module N = R/(x^2, x*y, x*z);"
                "compute theoremA(1, M, N);");
  CHECK(sk[0].status == "skipped");
  CHECK(exit_code(sk) == 2);
}

TEST_CASE("JSON exports") {
  auto r = run(
      "ring R = QQ[x,y,z]; module k = R/(x,y,z); compute resolution(k); compute tor(1, k, k);"
      "compute hilbert(R); compute twist(k); compute chan(k, k);"
      "ring A = QQ[x]/(x^2); module a = A/(x); compute eta(1, a, a); compute cx(a); compute period(a);"
      "compute ftor(a, a); compute fext(R, k);");
  REQUIRE(r.size() == 10);
  const Json& res = r[0].data["detail"];
  REQUIRE(res["levels"].size() == 4);
  CHECK(res["levels"][1]["rank"] == 3);
  CHECK(res["levels"][1]["twists"] == Json::array({-1, -1, -1}));
  CHECK(res["levels"][1]["matrix"].size() == 1);
  CHECK(res["levels"][1]["matrix"][0].size() == 3);
  CHECK(res["truncated_at"].is_null());
  CHECK(r[0].value == "1,3,3,1");

  CHECK(r[1].data["detail"]["functor"] == "Tor");
  CHECK(r[1].data["detail"]["length"] == "3");
  CHECK(r[1].data["detail"]["dimension"] == "0");

  CHECK(r[2].data["detail"]["coefficients"] == Json::array({"1", "11/6", "1", "1/6"}));
  CHECK(r[3].value == "k0=3 c=0,0,0,1");
  CHECK(r[4].value == "pass");
  CHECK(r[4].data["detail"]["chi"] == "0");

  const Json& est = r[5].data["detail"];
  CHECK(est["e"] == 1);
  CHECK(est["verdict"]["kind"] == "exact");
  CHECK(est["verdict"]["value"] == "0");
  CHECK(est["certificate"]["period"] == 1);
  CHECK(est["trace"][0].contains("partial_sum"));
  CHECK(r[6].value == "1");
  CHECK(r[6].message == "exact");
  CHECK(r[7].value == "start=0 period=1");
  CHECK(r[8].value == "0");
  CHECK(r[9].value == "0");

  Json all = records_json(r);
  CHECK(all.size() == 10);
  CHECK(all[0]["status"] == "ok");
  CHECK(render_table(r).find("compute tor(1, k, k);") != std::string::npos);
}

TEST_CASE("verify statements are deterministic") {
  const std::string text = "verify depth-formula trials=1 seed=11;";
  auto a = run(text), b = run(text);
  REQUIRE(a.size() == 1);
  CHECK(a[0].data == b[0].data);
  CHECK(a[0].status == "ok");
  CHECK(a[0].seed == std::optional<std::uint64_t>(11));
  CHECK(exit_code(a) == 0);
}
