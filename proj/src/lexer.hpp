#pragma once

// Tokenizer and typed expression parser shared by the polynomial reader
// and the session language.

#include <string>
#include <string_view>
#include <vector>

#include "eulerform/poly_parse.hpp"

namespace eulerform::detail {

enum class Tok { kName, kInt, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src);

/// Value of an ideal/polynomial expression: a single polynomial, or an
/// ideal given by generators (a parenthesized list of two or more items,
/// or anything combined with one).
struct ExprValue {
  bool is_ideal = false;
  Polynomial poly;
  std::vector<Polynomial> gens;

  std::vector<Polynomial> generators() const { return is_ideal ? gens : std::vector<Polynomial>{poly}; }
};

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_symbol(std::string_view s) const { return peek().kind == Tok::kSymbol && peek().text == s; }
  bool at_name(std::string_view s) const { return peek().kind == Tok::kName && peek().text == s; }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  const Token& expect_symbol(std::string_view s);
  const Token& expect_name();
  long expect_int();
  [[noreturn]] void fail(const std::string& msg) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Parses one expression (stops at ',', ')', ';' or end).
ExprValue parse_expr(TokenStream& ts, const PolyRing& ring);
/// Parses `item (',' item)*` and flattens into generators.
std::vector<Polynomial> parse_generator_list(TokenStream& ts, const PolyRing& ring);

}  // namespace eulerform::detail
