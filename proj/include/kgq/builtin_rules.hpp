#pragma once

#include <string>
#include <vector>

#include "kgq/rule_ast.hpp"

namespace kgq {

struct BuiltinRule {
  std::string name;
  std::string text;  // concrete rule syntax, parseable standalone
};

// The shipped rule corpus: taxonomy, property structure, sequences, spouse
// death, and the type constraints, 12 rules in all.
const std::vector<BuiltinRule>& builtin_rule_sources();

// All builtin rules, parsed and typechecked.
std::vector<RuleAst> load_builtin_rules();

// A subset by name; throws std::invalid_argument on an unknown name.
std::vector<RuleAst> load_builtin_rules(const std::vector<std::string>& names);

}  // namespace kgq
