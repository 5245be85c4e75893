#include "kgq/signature.hpp"

namespace kgq {

std::string to_string(TermSort s) {
  switch (s) {
    case TermSort::Value: return "value";
    case TermSort::Entity: return "entity";
    case TermSort::Property: return "property";
    case TermSort::Datavalue: return "datavalue";
    case TermSort::Nat: return "nat";
    case TermSort::Validity: return "validity";
    case TermSort::Causality: return "causality";
    case TermSort::Sequence: return "sequence";
    case TermSort::Annotations: return "annotations";
    case TermSort::Provenance: return "provenance";
    case TermSort::Instant: return "instant";
    case TermSort::Interval: return "interval";
    case TermSort::Space: return "space";
    case TermSort::ValueSet: return "set[value]";
    case TermSort::Undef: return "undefined";
  }
  return {};
}

bool sort_accepts(TermSort expected, TermSort actual) {
  if (expected == actual) return true;
  switch (actual) {
    case TermSort::Property:
      return expected == TermSort::Entity || expected == TermSort::Value;
    case TermSort::Entity:
      return expected == TermSort::Value;
    case TermSort::Datavalue:
      return expected == TermSort::Value;
    case TermSort::Nat:
      return expected == TermSort::Datavalue || expected == TermSort::Value;
    case TermSort::Undef:
      return expected == TermSort::Value || expected == TermSort::Instant ||
             expected == TermSort::Interval;
    default:
      return false;
  }
}

std::optional<TermSort> sort_meet(TermSort a, TermSort b) {
  if (sort_accepts(b, a)) return a;
  if (sort_accepts(a, b)) return b;
  return std::nullopt;
}

void Signature::add_function(const std::string& name, FunctionSig sig) {
  functions_[name].push_back(std::move(sig));
}

void Signature::add_predicate(const std::string& name, std::vector<TermSort> args,
                              bool polymorphic) {
  predicates_[name] = PredicateSig{std::move(args), polymorphic};
}

bool Signature::has_function(const std::string& name) const {
  return functions_.count(name) != 0;
}

bool Signature::is_predicate(const std::string& name) const {
  return predicates_.count(name) != 0;
}

const std::vector<FunctionSig>* Signature::function_overloads(
    const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const Signature::PredicateSig* Signature::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

std::vector<TermSort> Signature::statement_positions(bool with_value) {
  std::vector<TermSort> pos{TermSort::Entity, TermSort::Property};
  if (with_value) pos.push_back(TermSort::Value);
  pos.insert(pos.end(), {TermSort::Validity, TermSort::Causality, TermSort::Sequence,
                         TermSort::Annotations, TermSort::Provenance});
  return pos;
}

const Signature& Signature::builtin() {
  static const Signature sig = [] {
    Signature s;
    using TS = TermSort;
    auto fn = [&s](const char* name, std::vector<TS> args, TS result) {
      s.add_function(name, FunctionSig{std::move(args), result});
    };
    // Sort constants.
    fn("emptyValidity", {}, TS::Validity);
    fn("emptyCause", {}, TS::Causality);
    fn("emptySequence", {}, TS::Sequence);
    fn("emptyAnnotations", {}, TS::Annotations);
    fn("emptyProvenance", {}, TS::Provenance);
    fn("undefined", {}, TS::Undef);
    // Validity context.
    fn("interValidity", {TS::Validity, TS::Validity}, TS::Validity);
    fn("unionValidity", {TS::Validity, TS::Validity}, TS::Validity);
    fn("setTime", {TS::Validity, TS::Interval}, TS::Validity);
    fn("setSpace", {TS::Validity, TS::Space}, TS::Validity);
    fn("extractTime", {TS::Validity}, TS::Interval);
    fn("extractSpace", {TS::Validity}, TS::Space);
    fn("timeValidity", {TS::Interval}, TS::Validity);
    fn("spaceValidity", {TS::Space}, TS::Validity);
    // Time.
    fn("instant", {TS::Datavalue}, TS::Instant);
    fn("interval", {TS::Instant, TS::Instant}, TS::Interval);
    fn("startTime", {TS::Interval}, TS::Instant);
    fn("endTime", {TS::Interval}, TS::Instant);
    fn("interInterval", {TS::Interval, TS::Interval}, TS::Interval);
    fn("unionInterval", {TS::Interval, TS::Interval}, TS::Interval);
    // Space.
    fn("region", {TS::Entity}, TS::Space);
    fn("interSpace", {TS::Space, TS::Space}, TS::Space);
    fn("unionSpace", {TS::Space, TS::Space}, TS::Space);
    // Causality.
    fn("addEndCause", {TS::Entity, TS::Causality}, TS::Causality);
    fn("addHasCause", {TS::Entity, TS::Causality}, TS::Causality);
    fn("unionCause", {TS::Causality, TS::Causality}, TS::Causality);
    fn("inverseCause", {TS::Causality}, TS::Causality);
    // Sequence.
    fn("seq", {TS::Entity, TS::Entity}, TS::Sequence);
    fn("seq", {TS::Entity, TS::Entity, TS::Nat}, TS::Sequence);
    fn("seqWithNext", {TS::Entity}, TS::Sequence);
    fn("seqWithPrev", {TS::Entity}, TS::Sequence);
    fn("seqWithOrdinal", {TS::Nat}, TS::Sequence);
    fn("previous", {TS::Sequence}, TS::Entity);
    fn("next", {TS::Sequence}, TS::Entity);
    fn("ordinal", {TS::Sequence}, TS::Nat);
    // Provenance.
    fn("addSources", {TS::Entity, TS::Provenance}, TS::Provenance);
    fn("unionProv", {TS::Provenance, TS::Provenance}, TS::Provenance);
    // Annotations.
    fn("addAnnotation", {TS::Annotations, TS::Property, TS::Value}, TS::Annotations);
    fn("getAnnotation", {TS::Annotations, TS::Property}, TS::ValueSet);
    fn("getRelation", {TS::Annotations}, TS::ValueSet);
    fn("getClass", {TS::Annotations}, TS::ValueSet);
    // The sole member of a singleton value set; evaluation fails otherwise.
    // Used by the singleton-form type-constraint rules.
    fn("single", {TS::ValueSet}, TS::Value);

    s.add_predicate("testIntersectValidity", {TS::Validity, TS::Validity});
    s.add_predicate("equal", {}, /*polymorphic=*/true);
    s.add_predicate("hasNext", {TS::Sequence});
    s.add_predicate("hasPrevious", {TS::Sequence});
    s.add_predicate("hasOrdinal", {TS::Sequence});
    s.add_predicate("inside", {TS::Instant, TS::Interval});
    s.add_predicate("disjoint", {TS::Interval, TS::Interval});
    s.add_predicate("contains", {TS::ValueSet, TS::Value});
    s.add_predicate("incl", {TS::Validity, TS::Validity});
    return s;
  }();
  return sig;
}

}  // namespace kgq
