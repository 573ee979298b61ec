#include <random>

#include "doctest.h"
#include "eulerform/errors.hpp"
#include "eulerform/kernels.hpp"
#include "helpers.hpp"

using namespace eulerform;
using namespace testing_util;

namespace {

Monomial mono(const PolyRing& r, std::initializer_list<int> e) {
  std::vector<int> v(e);
  return r.weights().make(v);
}

Monomial random_mono(std::mt19937_64& rng, const Weights& w, int maxexp) {
  std::vector<int> e(w.nvars());
  for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(maxexp + 1));
  return w.make(e);
}

}  // namespace

TEST_CASE("monomial orders") {
  auto r = qq({"x", "y", "z"}, {}, OrderKind::kGrevlex);
  const auto& mo = r->order();
  CHECK(mo.less(mono(*r, {1, 0, 0}), mono(*r, {0, 2, 0})));
  CHECK(mo.compare(mono(*r, {2, 1, 0}), mono(*r, {1, 1, 1})) > 0);

  auto lex = qq({"x", "y"}, {}, OrderKind::kLex);
  CHECK(lex->order().compare(mono(*lex, {1, 0}), mono(*lex, {0, 5})) > 0);

  auto w = qq({"x", "y"}, {1, 2});
  CHECK(w->order().less(mono(*w, {1, 0}), mono(*w, {0, 1})));
  CHECK(w->order().compare(mono(*w, {2, 0}), mono(*w, {0, 1})) > 0);
}

TEST_CASE("monomial order axioms on random monomials") {
  std::mt19937_64 rng(7);
  for (auto kind : {OrderKind::kGrevlex, OrderKind::kLex, OrderKind::kWeightedGrevlex}) {
    auto r = qq({"a", "b", "c", "d"}, kind == OrderKind::kWeightedGrevlex ? std::vector<int>{1, 2, 1, 3}
                                                                         : std::vector<int>{},
                kind);
    const auto& w = r->weights();
    const auto& mo = r->order();
    for (int t = 0; t < 300; ++t) {
      Monomial a = random_mono(rng, w, 4), b = random_mono(rng, w, 4), c = random_mono(rng, w, 4);
      // total, antisymmetric
      CHECK((mo.compare(a, b) == 0) == (a == b));
      CHECK((mo.compare(a, b) < 0) == (mo.compare(b, a) > 0));
      // multiplicative
      CHECK(mo.compare(a, b) == mo.compare(mono_mul(a, c), mono_mul(b, c)));
      // 1 is least
      CHECK(mo.compare(w.one(), a) <= 0);
      // transitive
      if (mo.less(a, b) && mo.less(b, c)) CHECK(mo.less(a, c));
      // lcm/gcd
      Monomial l = w.lcm(a, b), g = w.gcd(a, b);
      CHECK(mono_divides(a, l));
      CHECK(mono_divides(g, b));
      CHECK(mono_mul(l, g) == mono_mul(a, b));
      CHECK(mono_mul(l, g).degree == a.degree + b.degree);
      CHECK(mono_div(mono_mul(a, b), b) == a);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  auto r = qq({"x", "y"});
  CHECK(r->add(P(r, "x"), P(r, "-x")).is_zero());
  CHECK(r->mul(P(r, "x+y"), P(r, "x-y")) == P(r, "x^2-y^2"));
  CHECK(P(r, "(x+y)(x-y)") == P(r, "x^2 - y^2"));
  CHECK(P(r, "2x y") == P(r, "2*x*y"));
  CHECK(P(r, "x/2 + 3/4 y") == r->add(r->scale(P(r, "x"), mpq_class(1, 2)), r->scale(P(r, "y"), mpq_class(3, 4))));
  CHECK(r->pow(P(r, "x+y"), 0) == P(r, "1"));
  CHECK(r->to_string(P(r, "x^2*y - 3/2*y + 1")) == "x^2*y - 3/2*y + 1");
  CHECK(r->is_homogeneous(P(r, "x^2 + x y")));
  CHECK_FALSE(r->is_homogeneous(P(r, "x^2 + y")));

  auto g = gf(5, {"x"});
  CHECK(g->mul(P(g, "3x"), P(g, "4x")) == P(g, "2x^2"));
  CHECK(P(g, "5x + 1") == P(g, "1"));
  CHECK(P(g, "x/2") == P(g, "3x"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (auto r : {qq({"x", "y", "z"}), gf(7, {"x", "y", "z"})}) {
    auto rnd = [&]() {
      std::vector<Term> ts;
      int n = static_cast<int>(rng() % 5);
      for (int i = 0; i < n; ++i)
        ts.push_back({r->field().from_int(static_cast<long>(rng() % 11) - 5), random_mono(rng, r->weights(), 3)});
      return r->from_terms(ts);
    };
    for (int t = 0; t < 60; ++t) {
      Polynomial a = rnd(), b = rnd(), c = rnd();
      CHECK(r->add(a, b) == r->add(b, a));
      CHECK(r->mul(a, b) == r->mul(b, a));
      CHECK(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
      CHECK(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
      CHECK(r->sub(a, a).is_zero());
      CHECK(parse_polynomial(*r, r->to_string(a)) == a);
    }
  }
}

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(Field::prime(6), StructuralError);
  Field f = Field::prime(7);
  CHECK(f.mul(f.inv(f.from_int(3)), f.from_int(3)) == 1);
  CHECK(f.from_rational(mpq_class(1, 2)) == 4);
  CHECK(Field::rationals().name() == "QQ");
  CHECK(f.name() == "GF(7)");
}

TEST_CASE("parser errors carry positions") {
  auto r = qq({"x", "y"});
  try {
    parse_polynomial(*r, "x +\n  w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_polynomial(*r, "x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(*r, "x / y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(*r, "x $ y"), ParseError);
  CHECK(parse_polynomials(*r, "x, y^2, 0").size() == 2);
}

TEST_CASE("kernel variants agree with the scalar reference") {
  std::mt19937_64 rng(3);
  const auto& ref = kernels::scalar_table();
  Weights w(std::vector<int>(kMaxVars, 1));
  for (const auto* kt : kernels::available()) {
    CAPTURE(kt->name);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = rng() % 40;
      std::vector<Exponents> cands(n);
      for (auto& c : cands) c = random_mono(rng, w, 3).exps;
      Exponents target = random_mono(rng, w, 5).exps;
      CHECK(kt->find_divisor(cands.data(), n, target) == ref.find_divisor(cands.data(), n, target));

      Exponents by = random_mono(rng, w, 3).exps;
      std::vector<Exponents> d1(n), d2(n);
      ref.shift(cands.data(), n, by, d1.data());
      kt->shift(cands.data(), n, by, d2.data());
      CHECK(d1 == d2);

      std::uint32_t p = (t % 2) ? 32749 : 7;
      std::vector<std::uint32_t> row(n), src(n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = static_cast<std::uint32_t>(rng() % p);
        src[i] = static_cast<std::uint32_t>(rng() % p);
      }
      auto r1 = row, r2 = row;
      auto factor = static_cast<std::uint32_t>(rng() % p);
      ref.axpy_mod(r1.data(), src.data(), factor, p, n);
      kt->axpy_mod(r2.data(), src.data(), factor, p, n);
      CHECK(r1 == r2);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(r1[i] == (row[i] + p - (static_cast<std::uint64_t>(factor) * src[i]) % p) % p);
    }
  }
}
