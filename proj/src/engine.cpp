#include "kgq/engine.hpp"

#include <future>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace kgq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw EvalError(msg); }

Value as_value(const EvalValue& v) {
  if (const auto* i = std::get_if<Iri>(&v)) return Value::entity(*i);
  if (const auto* x = std::get_if<Value>(&v)) return *x;
  fail("expected a value");
}

Iri as_iri(const EvalValue& v) {
  if (const auto* i = std::get_if<Iri>(&v)) return *i;
  if (const auto* x = std::get_if<Value>(&v)) {
    if (x->is_entity()) return x->iri();
    fail("expected an entity, got " + x->canonical_token());
  }
  fail("expected an entity");
}

Instant as_instant(const EvalValue& v) {
  if (const auto* i = std::get_if<Instant>(&v)) return *i;
  if (const auto* x = std::get_if<Value>(&v)) {
    if (x->is_undefined()) return Instant::undefined();
    if (x->is_datavalue() && x->datatype().text == "xsd:dateTime") {
      if (auto p = Instant::parse(x->lexical())) return *p;
      fail("unparseable instant literal \"" + x->lexical() + "\"");
    }
    fail("expected an instant, got " + x->canonical_token());
  }
  fail("expected an instant");
}

TimeInterval as_interval(const EvalValue& v) {
  if (const auto* i = std::get_if<TimeInterval>(&v)) return *i;
  if (const auto* x = std::get_if<Value>(&v); x && x->is_undefined())
    return TimeInterval::universal();
  fail("expected an interval");
}

std::uint64_t as_nat(const EvalValue& v) {
  if (const auto* x = std::get_if<Value>(&v);
      x && x->is_datavalue() && x->datatype().text == "xsd:integer") {
    try {
      return std::stoull(x->lexical());
    } catch (const std::exception&) {
      fail("unparseable integer literal \"" + x->lexical() + "\"");
    }
  }
  fail("expected a natural number");
}

template <typename T>
const T& as_sort(const EvalValue& v, const char* what) {
  if (const auto* x = std::get_if<T>(&v)) return *x;
  fail(std::string("expected ") + what);
}

Value nat_value(std::uint64_t n) {
  return Value::datavalue(std::to_string(n), Iri{"xsd:integer"});
}

bool instants_equal(const Instant& a, const Instant& b) { return a == b; }

}  // namespace

EvalValue Engine::eval_term(const Term& t, const Binding& binding) const {
  switch (t.kind) {
    case Term::Kind::Variable: {
      auto it = binding.vars.find(t.name);
      if (it == binding.vars.end()) fail("unbound variable " + t.name);
      return std::visit([](const auto& v) { return EvalValue{v}; }, it->second);
    }
    case Term::Kind::IriConst:
      return t.iri;
    case Term::Kind::Literal:
      return t.literal;
    case Term::Kind::Apply:
      break;
  }

  std::vector<EvalValue> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(eval_term(a, binding));
  const std::string& f = t.name;
  const auto& ct = config_.containment;

  if (f == "emptyValidity") return ValidityContext{};
  if (f == "emptyCause") return Causality{};
  if (f == "emptySequence") return SequenceNode{};
  if (f == "emptyAnnotations") return Annotations{};
  if (f == "emptyProvenance") return Provenance{};
  if (f == "undefined") return Value::undefined();

  if (f == "interValidity")
    return ValidityContext::inter(as_sort<ValidityContext>(args[0], "a validity"),
                                  as_sort<ValidityContext>(args[1], "a validity"), ct);
  if (f == "unionValidity")
    return ValidityContext::union_(as_sort<ValidityContext>(args[0], "a validity"),
                                   as_sort<ValidityContext>(args[1], "a validity"), ct);
  if (f == "setTime")
    return as_sort<ValidityContext>(args[0], "a validity").with_time(as_interval(args[1]));
  if (f == "setSpace")
    return as_sort<ValidityContext>(args[0], "a validity")
        .with_space(as_sort<SpaceRegion>(args[1], "a space region"));
  if (f == "extractTime")
    return as_sort<ValidityContext>(args[0], "a validity").extract_time();
  if (f == "extractSpace")
    return as_sort<ValidityContext>(args[0], "a validity").extract_space();
  if (f == "timeValidity") return ValidityContext::time_validity(as_interval(args[0]));
  if (f == "spaceValidity")
    return ValidityContext::space_validity(as_sort<SpaceRegion>(args[0], "a space region"));

  if (f == "instant") return as_instant(args[0]);
  if (f == "interval") {
    try {
      return TimeInterval::make(as_instant(args[0]), as_instant(args[1]));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (f == "startTime") return as_interval(args[0]).start_time();
  if (f == "endTime") return as_interval(args[0]).end_time();
  if (f == "interInterval")
    return TimeInterval::inter(as_interval(args[0]), as_interval(args[1]));
  if (f == "unionInterval")
    return TimeInterval::union_hull(as_interval(args[0]), as_interval(args[1]));

  if (f == "region") return SpaceRegion::region(as_iri(args[0]));
  if (f == "interSpace")
    return SpaceRegion::inter(as_sort<SpaceRegion>(args[0], "a space region"),
                              as_sort<SpaceRegion>(args[1], "a space region"), ct);
  if (f == "unionSpace")
    return SpaceRegion::union_(as_sort<SpaceRegion>(args[0], "a space region"),
                               as_sort<SpaceRegion>(args[1], "a space region"), ct);

  if (f == "addEndCause")
    return as_sort<Causality>(args[1], "a causality").add_end_cause({as_iri(args[0])});
  if (f == "addHasCause")
    return as_sort<Causality>(args[1], "a causality").add_has_cause({as_iri(args[0])});
  if (f == "unionCause")
    return Causality::union_(as_sort<Causality>(args[0], "a causality"),
                             as_sort<Causality>(args[1], "a causality"));
  if (f == "inverseCause")
    return Causality::inverse(as_sort<Causality>(args[0], "a causality"),
                              config_.inverses);

  if (f == "seq") {
    if (args.size() == 2) return SequenceNode::seq(as_iri(args[0]), as_iri(args[1]));
    return SequenceNode::seq(as_iri(args[0]), as_iri(args[1]), as_nat(args[2]));
  }
  if (f == "seqWithNext") return SequenceNode::with_next(as_iri(args[0]));
  if (f == "seqWithPrev") return SequenceNode::with_previous(as_iri(args[0]));
  if (f == "seqWithOrdinal") return SequenceNode::with_ordinal(as_nat(args[0]));
  if (f == "previous") {
    const auto& s = as_sort<SequenceNode>(args[0], "a sequence node");
    if (!s.has_previous()) fail("previous of a node without a predecessor");
    return *s.previous();
  }
  if (f == "next") {
    const auto& s = as_sort<SequenceNode>(args[0], "a sequence node");
    if (!s.has_next()) fail("next of a node without a successor");
    return *s.next();
  }
  if (f == "ordinal") {
    const auto& s = as_sort<SequenceNode>(args[0], "a sequence node");
    if (!s.has_ordinal()) fail("ordinal of a node without an ordinal");
    return nat_value(s.ordinal());
  }

  if (f == "addSources")
    return as_sort<Provenance>(args[1], "a provenance").add_sources({as_iri(args[0])});
  if (f == "unionProv")
    return Provenance::union_(as_sort<Provenance>(args[0], "a provenance"),
                              as_sort<Provenance>(args[1], "a provenance"));

  if (f == "addAnnotation")
    return as_sort<Annotations>(args[0], "annotations")
        .add(as_iri(args[1]), as_value(args[2]));
  if (f == "getAnnotation")
    return as_sort<Annotations>(args[0], "annotations").get(as_iri(args[1]));
  if (f == "getRelation")
    return as_sort<Annotations>(args[0], "annotations").get_relation();
  if (f == "getClass") return as_sort<Annotations>(args[0], "annotations").get_class();
  if (f == "single") {
    const auto& s = as_sort<std::set<Value>>(args[0], "a value set");
    if (s.size() != 1)
      fail("single: set has " + std::to_string(s.size()) + " elements");
    return *s.begin();
  }

  fail("unknown function symbol " + f);
}

bool Engine::eval_builtin(const Atom& atom, const Binding& binding) const {
  std::vector<EvalValue> args;
  args.reserve(atom.terms.size());
  for (const auto& t : atom.terms) args.push_back(eval_term(t, binding));
  const std::string& p = atom.predicate;
  const auto& ct = config_.containment;

  if (p == "testIntersectValidity")
    return ValidityContext::test_intersect(as_sort<ValidityContext>(args[0], "a validity"),
                                           as_sort<ValidityContext>(args[1], "a validity"),
                                           ct);
  if (p == "equal") {
    if (std::holds_alternative<Instant>(args[0]) ||
        std::holds_alternative<Instant>(args[1]))
      return instants_equal(as_instant(args[0]), as_instant(args[1]));
    bool v0 = std::holds_alternative<Iri>(args[0]) || std::holds_alternative<Value>(args[0]);
    bool v1 = std::holds_alternative<Iri>(args[1]) || std::holds_alternative<Value>(args[1]);
    if (v0 && v1) return as_value(args[0]) == as_value(args[1]);
    if (args[0].index() != args[1].index()) return false;
    return args[0] == args[1];
  }
  if (p == "hasNext") return as_sort<SequenceNode>(args[0], "a sequence node").has_next();
  if (p == "hasPrevious")
    return as_sort<SequenceNode>(args[0], "a sequence node").has_previous();
  if (p == "hasOrdinal")
    return as_sort<SequenceNode>(args[0], "a sequence node").has_ordinal();
  if (p == "inside") {
    Instant x = as_instant(args[0]);
    if (!x.is_defined()) fail("inside of an undefined instant");
    return TimeInterval::inside(x, as_interval(args[1]));
  }
  if (p == "disjoint")
    return TimeInterval::disjoint(as_interval(args[0]), as_interval(args[1]));
  if (p == "contains")
    return as_sort<std::set<Value>>(args[0], "a value set").count(as_value(args[1])) != 0;
  if (p == "incl")
    return ValidityContext::incl(as_sort<ValidityContext>(args[0], "a validity"),
                                 as_sort<ValidityContext>(args[1], "a validity"), ct);

  fail("unknown builtin predicate " + p);
}

namespace {

// Turns one statement-atom position into a pattern slot under the binding.
PatternSlot term_slot(const Engine& eng, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return PatternSlot::var(t.name);
    case Term::Kind::IriConst:
      return PatternSlot::constant(t.iri);
    case Term::Kind::Literal:
      return PatternSlot::constant(t.literal);
    case Term::Kind::Apply:
      break;
  }
  EvalValue v = eng.eval_term(t, Binding{});
  if (const auto* x = std::get_if<Iri>(&v)) return PatternSlot::constant(*x);
  if (const auto* x = std::get_if<Value>(&v)) return PatternSlot::constant(*x);
  if (const auto* x = std::get_if<ValidityContext>(&v)) return PatternSlot::constant(*x);
  if (const auto* x = std::get_if<Causality>(&v)) return PatternSlot::constant(*x);
  if (const auto* x = std::get_if<SequenceNode>(&v)) return PatternSlot::constant(*x);
  if (const auto* x = std::get_if<Annotations>(&v)) return PatternSlot::constant(*x);
  if (const auto* x = std::get_if<Provenance>(&v)) return PatternSlot::constant(*x);
  fail("body atom constant of a sort that cannot be matched");
}

StatementPattern atom_pattern(const Engine& eng, const Atom& atom) {
  StatementPattern p;
  p.kind = atom.statement_kind;
  bool with_value = atom.statement_kind == StatementKind::st;
  std::size_t i = 0;
  p.subject = term_slot(eng, atom.terms[i++]);
  p.property = term_slot(eng, atom.terms[i++]);
  if (with_value) p.value = term_slot(eng, atom.terms[i++]);
  p.validity = term_slot(eng, atom.terms[i++]);
  p.causality = term_slot(eng, atom.terms[i++]);
  p.sequence = term_slot(eng, atom.terms[i++]);
  p.annotations = term_slot(eng, atom.terms[i++]);
  p.provenance = term_slot(eng, atom.terms[i]);
  return p;
}

bool vars_bound(const Atom& atom, const Binding& b) {
  std::vector<std::string> vars;
  for (const auto& t : atom.terms) t.collect_variables(vars);
  for (const auto& v : vars)
    if (!b.vars.count(v)) return false;
  return true;
}

struct RuleRun {
  const Engine& eng;
  const KnowledgeGraph& graph;
  const RuleAst& rule;
  std::vector<Statement>& out;
  std::vector<std::string>& diags;

  void note(const std::string& msg) {
    diags.push_back("rule " + rule.name + ": " + msg);
  }

  void emit(const Binding& b) {
    try {
      Statement s;
      s.kind = rule.head.statement_kind;
      bool with_value = s.kind == StatementKind::st;
      std::size_t i = 0;
      s.subject = as_iri(eng.eval_term(rule.head.terms[i++], b));
      s.property = as_iri(eng.eval_term(rule.head.terms[i++], b));
      if (with_value) s.value = as_value(eng.eval_term(rule.head.terms[i++], b));
      s.validity = as_sort<ValidityContext>(eng.eval_term(rule.head.terms[i++], b),
                                            "a validity");
      s.causality =
          as_sort<Causality>(eng.eval_term(rule.head.terms[i++], b), "a causality");
      s.sequence = as_sort<SequenceNode>(eng.eval_term(rule.head.terms[i++], b),
                                         "a sequence node");
      s.annotations =
          as_sort<Annotations>(eng.eval_term(rule.head.terms[i++], b), "annotations");
      s.provenance =
          as_sort<Provenance>(eng.eval_term(rule.head.terms[i], b), "a provenance");
      s.origin = Origin::inferred(rule.name);
      out.push_back(std::move(s));
    } catch (const EvalError& e) {
      note(e.what());
    }
  }

  // Joins the body left to right; builtins run as soon as their variables
  // are bound.
  void solve(std::vector<const Atom*> statements, std::vector<const Atom*> builtins,
             const Binding& b) {
    for (auto it = builtins.begin(); it != builtins.end();) {
      if (!vars_bound(**it, b)) {
        ++it;
        continue;
      }
      try {
        if (!eng.eval_builtin(**it, b)) return;
      } catch (const EvalError& e) {
        note(e.what());
        return;
      } catch (const std::domain_error& e) {
        note(e.what());
        return;
      }
      it = builtins.erase(it);
    }
    if (statements.empty()) {
      if (!builtins.empty()) {
        note("builtin atom with variables bound by no statement atom");
        return;
      }
      emit(b);
      return;
    }
    const Atom* next = statements.front();
    statements.erase(statements.begin());
    StatementPattern pattern;
    try {
      pattern = atom_pattern(eng, *next);
    } catch (const EvalError& e) {
      note(e.what());
      return;
    }
    graph.query(pattern, b, [&](const Statement&, const Binding& extended) {
      solve(statements, builtins, extended);
    });
  }
};

}  // namespace

std::vector<Statement> Engine::apply_rule(const KnowledgeGraph& g, const RuleAst& rule,
                                          std::vector<std::string>& diagnostics) const {
  std::vector<Statement> out;
  std::vector<const Atom*> statements, builtins;
  for (const auto& a : rule.body)
    (a.kind == Atom::Kind::Statement ? statements : builtins).push_back(&a);
  RuleRun run{*this, g, rule, out, diagnostics};
  run.solve(std::move(statements), std::move(builtins), Binding{});
  return out;
}

RunReport Engine::run(KnowledgeGraph& g, const std::vector<RuleAst>& rules) const {
  RunReport report;
  for (const auto& r : rules) report.per_rule[r.name] = 0;
  bool saturated = false;
  for (std::size_t round = 0; round < config_.max_rounds; ++round) {
    std::vector<std::vector<Statement>> candidates(rules.size());
    std::vector<std::vector<std::string>> diags(rules.size());
    if (config_.parallel) {
      std::vector<std::future<void>> futures;
      futures.reserve(rules.size());
      for (std::size_t i = 0; i < rules.size(); ++i)
        futures.push_back(std::async(std::launch::async, [&, i] {
          candidates[i] = apply_rule(g, rules[i], diags[i]);
        }));
      for (auto& f : futures) f.get();
    } else {
      for (std::size_t i = 0; i < rules.size(); ++i)
        candidates[i] = apply_rule(g, rules[i], diags[i]);
    }
    std::vector<Statement> batch;
    std::unordered_set<std::string> batch_keys;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (const auto& d : diags[i])
        if (report.diagnostics.size() < 200) report.diagnostics.push_back(d);
      for (auto& s : candidates[i]) {
        std::string key = s.canonical_key();
        if (g.contains(s) || batch_keys.count(key)) continue;
        batch_keys.insert(std::move(key));
        ++report.per_rule[rules[i].name];
        batch.push_back(std::move(s));
      }
    }
    ++report.rounds;
    if (batch.empty()) {
      saturated = true;
      break;
    }
    for (const auto& s : batch) g.insert(s);
    report.inferred += batch.size();
    if (report.inferred > config_.max_new_statements) {
      report.limit_hit = true;
      break;
    }
  }
  if (!saturated && !report.limit_hit) report.limit_hit = true;
  return report;
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["rounds"] = rounds;
  j["inferred"] = inferred;
  j["perRule"] = nlohmann::json::object();
  for (const auto& [k, v] : per_rule) j["perRule"][k] = v;
  j["limitHit"] = limit_hit;
  j["diagnostics"] = diagnostics;
  return j.dump();
}

}  // namespace kgq
