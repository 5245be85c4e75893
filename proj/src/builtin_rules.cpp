#include "kgq/builtin_rules.hpp"

#include <stdexcept>

#include "kgq/rule_parser.hpp"

namespace kgq {

const std::vector<BuiltinRule>& builtin_rule_sources() {
  static const std::vector<BuiltinRule> rules = {
      {"instance_of",
       "rule instance_of:\n"
       "st(X, wd:P31, C, V1, C1, S1, A1, P1)\n"
       "st(C, wd:P279, D, V2, C2, S2, A2, P2)\n"
       "testIntersectValidity(V1, V2)\n"
       "->\n"
       "st(X, wd:P31, D, interValidity(V1, V2), unionCause(C1, C2), emptySequence, "
       "emptyAnnotations, unionProv(P1, P2)).\n"},
      {"subclass_of",
       "rule subclass_of:\n"
       "st(C, wd:P279, D, V1, C1, S1, A1, P1)\n"
       "st(D, wd:P279, E, V2, C2, S2, A2, P2)\n"
       "testIntersectValidity(V1, V2)\n"
       "->\n"
       "st(C, wd:P279, E, interValidity(V1, V2), unionCause(C1, C2), emptySequence, "
       "emptyAnnotations, unionProv(P1, P2)).\n"},
      {"subproperty_transitive",
       "rule subproperty_transitive:\n"
       "st(P, wd:P1647, Q, V1, C1, S1, A1, P1)\n"
       "st(Q, wd:P1647, R, V2, C2, S2, A2, P2)\n"
       "testIntersectValidity(V1, V2)\n"
       "->\n"
       "st(P, wd:P1647, R, interValidity(V1, V2), unionCause(C1, C2), emptySequence, "
       "emptyAnnotations, unionProv(P1, P2)).\n"},
      {"subproperty_inheritance",
       "rule subproperty_inheritance:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "st(P, wd:P1647, Q, V2, C2, S2, A2, P2)\n"
       "testIntersectValidity(V1, V2)\n"
       "->\n"
       "st(X, Q, Y, interValidity(V1, V2), unionCause(C1, C2), S1, A1, "
       "unionProv(P1, P2)).\n"},
      {"symmetry",
       "rule symmetry:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "st(P, wd:P2302, wd:Q21510862, V0, C0, S0, A0, P0)\n"
       "->\n"
       "st(Y, P, X, V1, inverseCause(C1), emptySequence, emptyAnnotations, P1).\n"},
      {"inverse_property",
       "# Keeps C1 as-is and clears sequence/annotations; the symmetry rule\n"
       "# instead inverts causality. The asymmetry is deliberate.\n"
       "rule inverse_property:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "st(P, wd:P1696, Q, V2, C2, S2, A2, P2)\n"
       "->\n"
       "st(Y, Q, X, V1, C1, emptySequence, emptyAnnotations, P1).\n"},
      {"different_from",
       "# different-from reverses cleanly; all five sorts carry over.\n"
       "rule different_from:\n"
       "st(X, wd:P1889, Y, V1, C1, S1, A1, P1)\n"
       "->\n"
       "st(Y, wd:P1889, X, V1, C1, S1, A1, P1).\n"},
      {"sequence_previous",
       "rule sequence_previous:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "hasPrevious(S1)\n"
       "->\n"
       "st(previous(S1), P, Y, setTime(V1, interval(undefined, "
       "startTime(extractTime(V1)))), emptyCause, seqWithNext(X), "
       "emptyAnnotations, P1).\n"},
      {"sequence_next",
       "rule sequence_next:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "hasNext(S1)\n"
       "->\n"
       "st(next(S1), P, Y, setTime(V1, interval(endTime(extractTime(V1)), "
       "undefined)), emptyCause, seqWithPrev(X), emptyAnnotations, P1).\n"},
      {"spouse_death",
       "# Unlike the structural rules this head keeps S1 and A1: the statement\n"
       "# itself is unchanged, only its end cause is refined.\n"
       "rule spouse_death:\n"
       "st(X1, wd:P26, Y1, V1, C1, S1, A1, P1)\n"
       "st(X1, wd:P570, D, V2, C2, S2, A2, P2)\n"
       "equal(D, endTime(extractTime(V1)))\n"
       "->\n"
       "st(X1, wd:P26, Y1, V1, addEndCause(wd:Q99521170, C1), S1, A1, "
       "unionProv(P1, P2)).\n"},
      {"subject_type_constraint",
       "rule subject_type_constraint:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "st(P, wd:P2302, wd:Q21503250, V0, C0, S0, A0, P0)\n"
       "contains(getRelation(A0), wd:Q21503252)\n"
       "->\n"
       "st(X, wd:P31, single(getClass(A0)), emptyValidity, emptyCause, "
       "emptySequence, emptyAnnotations, unionProv(P0, P1)).\n"},
      {"value_type_constraint",
       "rule value_type_constraint:\n"
       "st(X, P, Y, V1, C1, S1, A1, P1)\n"
       "st(P, wd:P2302, wd:Q21510865, V0, C0, S0, A0, P0)\n"
       "contains(getRelation(A0), wd:Q21503252)\n"
       "->\n"
       "st(Y, wd:P31, single(getClass(A0)), emptyValidity, emptyCause, "
       "emptySequence, emptyAnnotations, unionProv(P0, P1)).\n"},
  };
  return rules;
}

std::vector<RuleAst> load_builtin_rules() {
  std::vector<RuleAst> out;
  for (const auto& r : builtin_rule_sources()) out.push_back(parse_rule(r.text));
  return out;
}

std::vector<RuleAst> load_builtin_rules(const std::vector<std::string>& names) {
  std::vector<RuleAst> out;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& r : builtin_rule_sources()) {
      if (r.name == name) {
        out.push_back(parse_rule(r.text));
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown builtin rule " + name);
  }
  return out;
}

}  // namespace kgq
