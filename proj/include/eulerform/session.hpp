#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eulerform/json_export.hpp"

namespace eulerform {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Polynomials are kept in the canonical printed form of their ring, so
/// scripts compare and print without a ring at hand.
struct RingDef {
  std::string name;
  std::uint32_t characteristic = 0;  ///< 0 for QQ
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::vector<std::string> ideal;
  bool operator==(const RingDef&) const = default;
};

struct QuotientTerm {
  std::string ring;
  std::vector<std::string> gens;
  bool operator==(const QuotientTerm&) const = default;
};
struct CokerTerm {
  std::string ring;
  std::vector<int> degrees;
  /// rows[r][c]: entry of generator r in relation c.
  std::vector<std::vector<std::string>> rows;
  bool operator==(const CokerTerm&) const = default;
};
struct FreeTerm {
  std::string ring;
  std::vector<int> degrees;
  bool operator==(const FreeTerm&) const = default;
};
struct ModuleRef {
  std::string name;
  bool operator==(const ModuleRef&) const = default;
};
using ModuleTerm = std::variant<QuotientTerm, CokerTerm, FreeTerm, ModuleRef>;

struct ModuleDef {
  std::string name;
  /// Direct summands joined by "++".
  std::vector<ModuleTerm> summands;
  bool operator==(const ModuleDef&) const = default;
};

struct ComputeArg {
  bool is_int = false;
  long value = 0;
  std::string name;
  bool operator==(const ComputeArg&) const = default;
};

struct ComputeRequest {
  std::string invariant;
  std::vector<ComputeArg> args;
  bool operator==(const ComputeRequest&) const = default;
};

struct VerifyRequest {
  std::string suite;
  std::vector<std::pair<std::string, long>> options;
  bool operator==(const VerifyRequest&) const = default;
};

struct Statement {
  std::variant<RingDef, ModuleDef, ComputeRequest, VerifyRequest> body;
  SourcePos pos;
  /// Positions are not part of the syntax tree's identity.
  bool operator==(const Statement& o) const { return body == o.body; }
};

struct SessionScript {
  std::vector<Statement> statements;
  bool operator==(const SessionScript&) const = default;
};

/// Parses a session; ParseError carries line and column for syntax
/// errors, unknown names and inhomogeneous generators.
SessionScript parse_session(std::string_view text);

std::string print_statement(const Statement& s);
std::string print_session(const SessionScript& script);

struct ExecConfig {
  std::string format = "table";
  std::uint64_t seed = 7;
  /// Truncation bound over quotient rings; 0 picks the defaults.
  int bound = 0;
};

struct ResultRecord {
  std::string request;
  /// ok | skipped (a hypothesis failed) | failed (a check failed) | error
  std::string status;
  std::string value;
  std::string message;
  Json data;
  double seconds = 0;
  std::optional<std::uint64_t> seed;
};

std::vector<ResultRecord> execute(const SessionScript& script, const ExecConfig& config);

/// 0 when everything computed and passed, 2 when the only problems are
/// hypothesis skips, 1 on errors or failed checks.
int exit_code(const std::vector<ResultRecord>& records);

Json records_json(const std::vector<ResultRecord>& records);
std::string render_table(const std::vector<ResultRecord>& records);

}  // namespace eulerform
