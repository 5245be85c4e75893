#pragma once

#include <string>
#include <vector>

#include "kgq/rule_ast.hpp"
#include "kgq/signature.hpp"

namespace kgq {

enum class RuleErrorCode {
  Syntax,
  UnknownSymbol,
  ArityMismatch,
  UnboundVariable,
  SortMismatch,
  Unsupported,
};

std::string to_string(RuleErrorCode c);

struct RuleDiagnostic {
  RuleErrorCode code = RuleErrorCode::Syntax;
  SourcePos pos;
  std::string rule;  // rule name when known
  std::string message;

  std::string str() const;
};

struct ParseResult {
  std::vector<RuleAst> rules;
  std::vector<RuleDiagnostic> errors;

  bool ok() const { return errors.empty(); }
};

// Parses one or more rules. Grammar: optional header "rule <name>:",
// whitespace-separated body atoms, "->", one head atom, optional trailing
// ".". Variables are uppercase-initial; IRIs are prefixed names (":P26",
// "wd:Q5"); comments run from '#' to end of line. Validation errors are
// collected, not first-failure: unnamed rules get rule1, rule2, ...
ParseResult parse_rules(const std::string& text,
                        const PrefixTable& prefixes = PrefixTable::builtin());

// Parses exactly one rule; throws std::runtime_error with the collected
// diagnostics if anything is wrong.
RuleAst parse_rule(const std::string& text,
                   const PrefixTable& prefixes = PrefixTable::builtin());

// Range restriction + signature/arity/sort checks. Empty result means the
// rule is well-formed against the signature.
std::vector<RuleDiagnostic> typecheck_rule(const RuleAst& rule,
                                           const Signature& sig = Signature::builtin());

}  // namespace kgq
