#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kgq {

// Sorts of the rule language's term algebra. Subsorts: property <= entity <=
// value, nat <= datavalue <= value; Undef fits value, instant, and interval
// positions (the paper declares `undefined` at all three).
enum class TermSort {
  Value,
  Entity,
  Property,
  Datavalue,
  Nat,
  Validity,
  Causality,
  Sequence,
  Annotations,
  Provenance,
  Instant,
  Interval,
  Space,
  ValueSet,
  Undef,
};

std::string to_string(TermSort s);

// actual usable where expected is required.
bool sort_accepts(TermSort expected, TermSort actual);
// Most specific common sort, if the two are comparable.
std::optional<TermSort> sort_meet(TermSort a, TermSort b);

struct FunctionSig {
  std::vector<TermSort> args;
  TermSort result;
};

// The registered function and builtin-predicate symbols of the rule language
// (the sort-module operations). Functions may be overloaded by arity.
class Signature {
public:
  static const Signature& builtin();

  void add_function(const std::string& name, FunctionSig sig);
  // An empty arg list with `polymorphic` marks a predicate accepting any two
  // comparable terms (equal).
  void add_predicate(const std::string& name, std::vector<TermSort> args,
                     bool polymorphic = false);

  bool has_function(const std::string& name) const;
  bool is_predicate(const std::string& name) const;
  // All overloads for a function symbol.
  const std::vector<FunctionSig>* function_overloads(const std::string& name) const;

  struct PredicateSig {
    std::vector<TermSort> args;
    bool polymorphic = false;
  };
  const PredicateSig* predicate(const std::string& name) const;

  // Position sorts of a statement atom (8 for st, 7 for sno/ssome).
  static std::vector<TermSort> statement_positions(bool with_value);

private:
  std::map<std::string, std::vector<FunctionSig>> functions_;
  std::map<std::string, PredicateSig> predicates_;
};

}  // namespace kgq
