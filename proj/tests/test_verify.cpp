#include <set>

#include "doctest.h"
#include "eulerform/errors.hpp"
#include "eulerform/random.hpp"
#include "eulerform/session.hpp"
#include "eulerform/verify.hpp"

using namespace eulerform;

TEST_CASE("per-trial seeds") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_seed(7, t));
  CHECK(seen.size() == 1000);
  CHECK(trial_seed(7, 3) == trial_seed(7, 3));
  CHECK(trial_seed(7, 3) != trial_seed(8, 3));
  CHECK(default_variables(3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(default_variables(5).back() == "x5");
}

TEST_CASE("generated ideals are homogeneous and bounded in degree") {
  auto p = std::make_shared<const PolyRing>(Field::rationals(), default_variables(3));
  for (std::uint64_t s = 0; s < 20; ++s) {
    InstanceGenerator a(s, p, 4), b(s, p, 4);
    auto ia = a.ideal(1, 3), ib = b.ideal(1, 3);
    REQUIRE(ia.size() == ib.size());
    CHECK(ia.size() >= 1);
    CHECK(ia.size() <= 3);
    for (std::size_t i = 0; i < ia.size(); ++i) {
      CHECK(p->to_string(ia[i]) == p->to_string(ib[i]));
      CHECK(ia[i].terms.size() <= 2);
      const int d = ia[i].lead().mono.degree;
      CHECK(d >= 1);
      CHECK(d <= 4);
      for (const auto& t : ia[i].terms) CHECK(t.mono.degree == d);
    }
  }
  auto w = std::make_shared<const PolyRing>(Field::rationals(), default_variables(2), std::vector<int>{1, 2});
  CHECK_THROWS_AS(InstanceGenerator(1, w, 3), ContractError);
}

TEST_CASE("every suite runs clean on a few trials") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    VerifyOptions o;
    o.suite = name;
    o.trials = 4;
    o.seed = 3;
    VerifySummary s = verify_suite(o);
    CHECK(s.failed == 0);
    CHECK(s.in_regime >= 4);
    CHECK(s.attempted <= 80);
    CHECK(s.ok());
    CHECK(s.counterexamples.empty());
  }
  CHECK_THROWS_AS(verify_suite(VerifyOptions{"nope", 1, 1, 3, 4, 0}), ContractError);
  CHECK_THROWS_AS(verify_suite(VerifyOptions{"chan", 0, 1, 3, 4, 0}), ContractError);
}

TEST_CASE("summaries are deterministic") {
  VerifyOptions o{"chan", 1, 42, 3, 4, 0};
  VerifySummary a = verify_suite(o), b = verify_suite(o);
  CHECK(to_json(a) == to_json(b));
  o.trials = 6;
  CHECK(to_json(verify_suite(o)) == to_json(verify_suite(o)));
}

TEST_CASE("sign trichotomy reports each branch and the witnesses") {
  VerifySummary s = verify_suite(VerifyOptions{"sign-trichotomy", 5, 7, 3, 4, 0});
  REQUIRE(s.branches.size() == 3);
  for (const auto& [b, c] : s.branches) {
    CAPTURE(b);
    CHECK(c.first >= 5);
    CHECK(c.first == c.second);
  }
  REQUIRE(s.witnesses.size() == 3);
  CHECK(s.witnesses[0].get("xi_1") == "-3");
  CHECK(s.witnesses[1].get("xi_1") == "0");
  CHECK(s.witnesses[2].get("xi_1") == "1");
  for (const auto& w : s.witnesses) {
    CHECK(w.passed);
    CHECK(w.get("Ext^0 != 0") == "true");
    CHECK(w.get("grade M") == "2");
  }
}

TEST_CASE("replay scripts reproduce the reported values") {
  VerifyOptions o{"chan", 1, 7, 3, 4, 0};
  int replayed = 0;
  for (int t = 0; t < 40 && replayed < 5; ++t) {
    auto reports = run_trial(o, t);
    if (reports.empty()) continue;
    ++replayed;
    const auto& c = reports.front();
    CAPTURE(c.script);
    auto records = execute(parse_session(c.script), ExecConfig{});
    REQUIRE(records.size() == 3);
    CHECK(records[0].value == c.report.get("chi"));
    CHECK(records[1].value == c.report.get("xi"));
    CHECK(records[2].value == c.report.get("grade M"));
  }
  CHECK(replayed == 5);

  VerifyOptions d{"depth-formula", 1, 7, 3, 4, 0};
  for (int t = 0; t < 20; ++t) {
    auto reports = run_trial(d, t);
    if (reports.empty()) continue;
    auto records = execute(parse_session(reports.front().script), ExecConfig{});
    REQUIRE(records.size() == 4);
    CHECK(records[0].value == reports.front().report.get("q"));
    CHECK(records[2].value == reports.front().report.get("depth M"));
    break;
  }

  VerifyOptions h{"herbrand", 1, 7, 3, 4, 0};
  for (int t = 0; t < 40; ++t) {
    auto reports = run_trial(h, t);
    if (reports.empty()) continue;
    auto records = execute(parse_session(reports.front().script), ExecConfig{"table", 7, 8});
    REQUIRE(records.size() == 5);
    CHECK(records[2].value == reports.front().report.get("h_c"));
    break;
  }
}
