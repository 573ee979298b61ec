#include <random>

#include "doctest.h"
#include "eulerform/errors.hpp"
#include "eulerform/groebner.hpp"
#include "helpers.hpp"

using namespace eulerform;
using namespace testing_util;

namespace {

FreeVector vec(const PolyRingPtr& r, const FreeModule& f, std::vector<std::string> entries) {
  std::vector<Polynomial> cols;
  for (auto& e : entries) cols.push_back(P(r, e));
  return VectorSpace(*r, f).from_columns(cols);
}

// Reduction-based ideal membership oracle: f in (gens) iff its normal
// form against a basis computed from a *different* input order is zero.
bool in_module(const PolyRingPtr& r, const FreeModule& f, std::vector<FreeVector> gens,
               const FreeVector& v) {
  std::reverse(gens.begin(), gens.end());
  auto g = buchberger(r, f, gens);
  return normal_form(v, g).is_zero();
}

}  // namespace

TEST_CASE("normal form examples") {
  auto r = qq({"x", "y", "z"});
  FreeModule f({0});
  auto g1 = buchberger(r, f, ideal_vectors(r, f, "x^2"));
  CHECK(normal_form(vec(r, f, {"x^2*y"}), g1).is_zero());
  auto g2 = buchberger(r, f, ideal_vectors(r, f, "x"));
  CHECK(normal_form(vec(r, f, {"x*y + y^2"}), g2) == vec(r, f, {"y^2"}));

  // Weights make both binomials homogeneous; x^2 leads as it would in lex.
  auto w = qq({"x", "y", "z"}, {1, 2, 2});
  auto g3 = buchberger(w, f, ideal_vectors(w, f, "x^2 - z"));
  CHECK(normal_form(vec(w, f, {"x^2 - y"}), g3) == vec(w, f, {"z - y"}));
}

TEST_CASE("buchberger examples") {
  auto r = qq({"x", "y", "z"});
  FreeModule f({0});
  auto g = buchberger(r, f, ideal_vectors(r, f, "2x^2 + 4y^2"));
  REQUIRE(g.gens.size() == 1);
  CHECK(g.gens[0] == vec(r, f, {"x^2 + 2y^2"}));

  auto m = buchberger(r, f, ideal_vectors(r, f, "x^2, x*y, x*z"));
  CHECK(m.gens.size() == 3);
  for (auto& v : ideal_vectors(r, f, "x^2, x*y, x*z"))
    CHECK(std::find(m.gens.begin(), m.gens.end(), v) != m.gens.end());

  auto t = qq({"z", "y", "x"}, {3, 2, 1});
  auto tc = buchberger(t, f, ideal_vectors(t, f, "y - x^2, z - x^3"));
  REQUIRE(tc.gens.size() == 2);
  CHECK(std::find(tc.gens.begin(), tc.gens.end(), vec(t, f, {"y - x^2"})) != tc.gens.end());
  CHECK(std::find(tc.gens.begin(), tc.gens.end(), vec(t, f, {"z - x^3"})) != tc.gens.end());
  auto in = initial_ideals(tc);
  REQUIRE(in[0].size() == 2);

  CHECK_THROWS_AS(buchberger(r, f, ideal_vectors(r, f, "x^2 + y")), StructuralError);
}

TEST_CASE("syzygy examples") {
  auto r = qq({"x", "y", "z"});
  FreeModule f({0});
  auto s = syzygy_module(r, f, ideal_vectors(r, f, "y, z"));
  REQUIRE(s.syzygies.size() == 1);
  VectorSpace vs(*r, s.module);
  auto expect = vs.from_columns({P(r, "z"), P(r, "-y")});
  CHECK((s.syzygies[0] == expect || s.syzygies[0] == vs.scale(expect, -1)));

  auto p = syzygy_module(r, f, ideal_vectors(r, f, "x^2 + y z"));
  CHECK(p.syzygies.empty());

  auto q = syzygy_module(r, f, ideal_vectors(r, f, "x^2, x*y"));
  REQUIRE(q.syzygies.size() == 1);
  VectorSpace qs(*r, q.module);
  auto e2 = qs.from_columns({P(r, "y"), P(r, "-x")});
  CHECK((q.syzygies[0] == e2 || q.syzygies[0] == qs.scale(e2, -1)));
}

TEST_CASE("initial module examples") {
  FreeModule f({0});
  auto w = qq({"x", "y", "z"}, {1, 2, 2});
  auto in1 = initial_ideals(buchberger(w, f, ideal_vectors(w, f, "x^2 - z")));
  REQUIRE(in1[0].size() == 1);
  CHECK(in1[0][0] == w->weights().variable(0, 2));

  auto r = qq({"x", "y", "z"});
  auto in2 = initial_module(buchberger(r, f, ideal_vectors(r, f, "y, z")));
  CHECK(in2.gens.size() == 2);
}

TEST_CASE("random homogeneous ideals: basis and syzygy properties") {
  std::mt19937_64 rng(2024);
  for (auto r : {qq({"x", "y", "z"}), gf(32003, {"x", "y", "z"})}) {
    const Weights& w = r->weights();
    for (int trial = 0; trial < 25; ++trial) {
      FreeModule f({0});
      VectorSpace vs(*r, f);
      std::vector<FreeVector> gens;
      int ngen = 2 + static_cast<int>(rng() % 3);
      for (int g = 0; g < ngen; ++g) {
        int d = 2 + static_cast<int>(rng() % 2);
        std::vector<VTerm> terms;
        for (int t = 0; t < 3; ++t) {
          std::vector<int> e(3, 0);
          for (int k = 0; k < d; ++k) e[rng() % 3]++;
          terms.push_back({r->field().from_int(static_cast<long>(rng() % 7) - 3), w.make(e), 0});
        }
        auto v = vs.from_terms(terms);
        if (!v.is_zero()) gens.push_back(v);
      }
      if (gens.empty()) continue;
      auto g = buchberger(r, f, gens);
      // Each input reduces to zero, each basis element lies in the ideal.
      for (auto& v : gens) CHECK(normal_form(v, g).is_zero());
      for (auto& b : g.gens) CHECK(in_module(r, f, gens, b));
      // S-pairs of the reduced basis reduce to zero.
      for (std::size_t i = 0; i < g.gens.size(); ++i)
        for (std::size_t j = i + 1; j < g.gens.size(); ++j) {
          Monomial l = w.lcm(g.gens[i].lead().mono, g.gens[j].lead().mono);
          auto s = vs.sub(vs.mul_term(g.gens[i], 1, mono_div(l, g.gens[i].lead().mono)),
                          vs.mul_term(g.gens[j], 1, mono_div(l, g.gens[j].lead().mono)));
          CHECK(normal_form(s, g).is_zero());
        }
      // Syzygies annihilate the generators.
      auto syz = syzygy_module(r, f, gens);
      for (auto& s : syz.syzygies) {
        FreeVector acc;
        VectorSpace ss(*r, syz.module);
        auto cols = ss.to_columns(s);
        for (std::size_t k = 0; k < gens.size(); ++k) acc = vs.add(acc, vs.mul_poly(gens[k], cols[k]));
        CHECK(acc.is_zero());
      }
      // Minimal generators generate the same ideal.
      auto mg = minimal_generators(r, f, gens, {});
      CHECK(mg.size() <= gens.size());
      auto g2 = buchberger(r, f, mg);
      CHECK(g2.gens == g.gens);
    }
  }
}

TEST_CASE("module Gröbner bases over rank 2") {
  auto r = qq({"x", "y"});
  FreeModule f({0, 1});
  std::vector<FreeVector> gens{vec(r, f, {"x^2", "y"}), vec(r, f, {"x*y", "x"}), vec(r, f, {"0", "x*y"})};
  auto g = buchberger(r, f, gens);
  for (auto& v : gens) CHECK(normal_form(v, g).is_zero());
  auto syz = syzygy_module(r, f, gens);
  VectorSpace vs(*r, f), ss(*r, syz.module);
  for (auto& s : syz.syzygies) {
    auto cols = ss.to_columns(s);
    FreeVector acc;
    for (std::size_t k = 0; k < gens.size(); ++k) acc = vs.add(acc, vs.mul_poly(gens[k], cols[k]));
    CHECK(acc.is_zero());
  }
  // y*(x^2, y) - x*(xy, x) = (0, y^2 - x^2)
  CHECK(in_module(r, f, gens, vec(r, f, {"0", "y^2 - x^2"})));
}
