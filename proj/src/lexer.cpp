#include "lexer.hpp"

#include <cctype>

namespace eulerform::detail {

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::kName, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kInt, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '+' && i + 1 < src.size() && src[i + 1] == '+') {
      out.push_back({Tok::kSymbol, "++", tl, tc});
      advance(2);
      continue;
    }
    static constexpr std::string_view kSymbols = "()[]{},;=+-*/^:";
    if (kSymbols.find(c) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

const Token& TokenStream::expect_symbol(std::string_view s) {
  if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
  return next();
}

const Token& TokenStream::expect_name() {
  if (peek().kind != Tok::kName) fail("expected a name");
  return next();
}

long TokenStream::expect_int() {
  bool neg = false;
  if (at_symbol("-")) {
    next();
    neg = true;
  }
  if (peek().kind != Tok::kInt) fail("expected an integer");
  const Token& t = next();
  if (t.text.size() > 15) fail_at(t, "integer literal too large");
  long v = std::stol(t.text);
  return neg ? -v : v;
}

void TokenStream::fail(const std::string& msg) const { fail_at(peek(), msg); }

void TokenStream::fail_at(const Token& t, const std::string& msg) const {
  std::string where = t.kind == Tok::kEnd ? " at end of input" : " near '" + t.text + "'";
  throw ParseError(msg + where, t.line, t.column);
}

namespace {

ExprValue make_poly(Polynomial p) {
  ExprValue v;
  v.poly = std::move(p);
  return v;
}

ExprValue make_ideal(std::vector<Polynomial> gens) {
  ExprValue v;
  v.is_ideal = true;
  v.gens = std::move(gens);
  return v;
}

ExprValue multiply(const PolyRing& ring, const ExprValue& a, const ExprValue& b) {
  if (!a.is_ideal && !b.is_ideal) return make_poly(ring.mul(a.poly, b.poly));
  std::vector<Polynomial> out;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Polynomial h = ring.mul(f, g);
      if (!h.is_zero()) out.push_back(std::move(h));
    }
  return make_ideal(std::move(out));
}

ExprValue parse_unary(TokenStream& ts, const PolyRing& ring);

ExprValue parse_atom(TokenStream& ts, const PolyRing& ring) {
  const Token& t = ts.peek();
  if (t.kind == Tok::kInt) {
    ts.next();
    return make_poly(ring.constant(ring.field().from_rational(mpq_class(mpz_class(t.text)))));
  }
  if (t.kind == Tok::kName) {
    int idx = ring.variable_index(t.text);
    if (idx < 0) ts.fail_at(t, "unknown identifier '" + t.text + "'");
    ts.next();
    return make_poly(ring.variable(static_cast<std::size_t>(idx)));
  }
  if (ts.at_symbol("(")) {
    ts.next();
    std::vector<ExprValue> items{parse_expr(ts, ring)};
    while (ts.at_symbol(",")) {
      ts.next();
      items.push_back(parse_expr(ts, ring));
    }
    ts.expect_symbol(")");
    if (items.size() == 1) return items.front();
    std::vector<Polynomial> gens;
    for (const auto& it : items)
      for (auto& g : it.generators())
        if (!g.is_zero()) gens.push_back(g);
    return make_ideal(std::move(gens));
  }
  ts.fail("expected a polynomial");
}

ExprValue parse_power(TokenStream& ts, const PolyRing& ring) {
  ExprValue base = parse_atom(ts, ring);
  while (ts.at_symbol("^")) {
    ts.next();
    if (ts.peek().kind != Tok::kInt) ts.fail("expected a nonnegative integer exponent");
    long e = ts.expect_int();
    if (e > 1000) ts.fail("exponent too large");
    if (!base.is_ideal) {
      base = make_poly(ring.pow(base.poly, static_cast<unsigned>(e)));
    } else {
      ExprValue acc = make_ideal({ring.constant(ring.field().from_int(1))});
      for (long k = 0; k < e; ++k) acc = multiply(ring, acc, base);
      base = acc;
    }
  }
  return base;
}

bool starts_factor(const TokenStream& ts) {
  return ts.peek().kind == Tok::kName || ts.at_symbol("(");
}

ExprValue parse_term(TokenStream& ts, const PolyRing& ring) {
  ExprValue acc = parse_unary(ts, ring);
  while (true) {
    if (ts.at_symbol("*")) {
      ts.next();
      acc = multiply(ring, acc, parse_unary(ts, ring));
    } else if (ts.at_symbol("/")) {
      const Token& slash = ts.next();
      ExprValue d = parse_power(ts, ring);
      if (d.is_ideal || d.poly.is_zero() || !d.poly.lead().mono.is_one())
        ts.fail_at(slash, "division only by a nonzero constant");
      if (acc.is_ideal) ts.fail_at(slash, "cannot divide an ideal");
      acc = make_poly(ring.scale(acc.poly, ring.field().inv(d.poly.lead().coeff)));
    } else if (starts_factor(ts)) {
      acc = multiply(ring, acc, parse_power(ts, ring));
    } else {
      return acc;
    }
  }
}

ExprValue parse_unary(TokenStream& ts, const PolyRing& ring) {
  if (ts.at_symbol("-")) {
    const Token& minus = ts.next();
    ExprValue v = parse_unary(ts, ring);
    if (v.is_ideal) ts.fail_at(minus, "cannot negate an ideal");
    return make_poly(ring.neg(v.poly));
  }
  return parse_power(ts, ring);
}

}  // namespace

ExprValue parse_expr(TokenStream& ts, const PolyRing& ring) {
  ExprValue acc = parse_term(ts, ring);
  while (ts.at_symbol("+") || ts.at_symbol("-")) {
    const Token& op = ts.next();
    ExprValue rhs = parse_term(ts, ring);
    if (!acc.is_ideal && !rhs.is_ideal) {
      acc = make_poly(op.text == "+" ? ring.add(acc.poly, rhs.poly) : ring.sub(acc.poly, rhs.poly));
      continue;
    }
    if (op.text == "-") ts.fail_at(op, "cannot subtract ideals");
    auto gens = acc.generators();
    for (auto& g : rhs.generators())
      if (!g.is_zero()) gens.push_back(g);
    acc = make_ideal(std::move(gens));
  }
  return acc;
}

std::vector<Polynomial> parse_generator_list(TokenStream& ts, const PolyRing& ring) {
  std::vector<Polynomial> out;
  auto take = [&](const ExprValue& v) {
    for (auto& g : v.generators())
      if (!g.is_zero()) out.push_back(g);
  };
  take(parse_expr(ts, ring));
  while (ts.at_symbol(",")) {
    ts.next();
    take(parse_expr(ts, ring));
  }
  return out;
}

}  // namespace eulerform::detail

namespace eulerform {

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
  detail::TokenStream ts(detail::tokenize(text));
  detail::ExprValue v = detail::parse_expr(ts, ring);
  if (v.is_ideal) throw ParseError("expected a polynomial, found an ideal", 1, 1);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return v.poly;
}

std::vector<Polynomial> parse_polynomials(const PolyRing& ring, std::string_view text) {
  detail::TokenStream ts(detail::tokenize(text));
  auto out = detail::parse_generator_list(ts, ring);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return out;
}

}  // namespace eulerform
