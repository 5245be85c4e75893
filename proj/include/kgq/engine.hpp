#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "kgq/graph.hpp"
#include "kgq/rule_ast.hpp"

namespace kgq {

// Runtime value of a rule term. Bindings from statement matching only produce
// the first seven alternatives; the rest arise from function evaluation.
using EvalValue =
    std::variant<Iri, Value, ValidityContext, Causality, SequenceNode,
                 Annotations, Provenance, Instant, TimeInterval, SpaceRegion,
                 std::set<Value>>;

// A function or predicate evaluation that cannot produce a result (singleton
// access on a non-singleton set, malformed interval, undefined instant in a
// position requiring one). The engine skips the offending binding.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineConfig {
  std::size_t max_rounds = 100;
  std::size_t max_new_statements = 1'000'000;
  bool parallel = false;
  ContainmentTable containment;
  InverseCauseMap inverses = InverseCauseMap::defaults();
};

struct RunReport {
  std::size_t rounds = 0;
  std::size_t inferred = 0;
  std::map<std::string, std::size_t> per_rule;
  bool limit_hit = false;
  std::vector<std::string> diagnostics;

  std::string to_json() const;
};

class Engine {
public:
  explicit Engine(EngineConfig config = {}) : config_(std::move(config)) {}

  const EngineConfig& config() const { return config_; }

  // Evaluates a ground-or-bound term; throws EvalError when the term has no
  // value under the binding.
  EvalValue eval_term(const Term& t, const Binding& binding) const;

  // True iff the builtin atom holds; all its variables must be bound.
  bool eval_builtin(const Atom& atom, const Binding& binding) const;

  // One rule against a fixed graph: every statement derivable in one step.
  // Eval failures append to `diagnostics` and skip their binding.
  std::vector<Statement> apply_rule(const KnowledgeGraph& g, const RuleAst& rule,
                                    std::vector<std::string>& diagnostics) const;

  // Naive fixpoint: rounds of all rules with one batch insertion per round.
  // Stops on saturation or on a configured limit (limit_hit).
  RunReport run(KnowledgeGraph& g, const std::vector<RuleAst>& rules) const;

private:
  EngineConfig config_;
};

}  // namespace kgq
