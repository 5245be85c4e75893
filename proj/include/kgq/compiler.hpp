#pragma once

#include <string>

#include "kgq/rule_ast.hpp"

namespace kgq {

// Compiles one rule to a SPARQL CONSTRUCT query over the reified statement
// layout: subject--p:--statement node, node--ps:--value, and the five sort
// values as canonical JSON literals under pq:validityJ .. pq:provenanceJ.
// Sort operations become kgq: extension-function calls in BIND/FILTER.
// Output is deterministic: compiling the same rule twice is byte-identical.
// Throws std::runtime_error for rules the layout cannot express (sno/ssome
// atoms).
std::string compile_to_construct(const RuleAst& rule,
                                 const PrefixTable& prefixes = PrefixTable::builtin());

}  // namespace kgq
