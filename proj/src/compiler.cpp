#include "kgq/compiler.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kgq/engine.hpp"
#include "kgq/sort_builder.hpp"

namespace kgq {

namespace {

[[noreturn]] void unsupported(const std::string& what) {
  throw std::runtime_error("compileToConstruct: " + what + " is not implemented");
}

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return "\"" + out + "\"";
}

// Local part of a wd: property IRI, for building p:/ps:/pq: names.
std::string property_local(const Iri& iri) {
  auto colon = iri.text.find(':');
  if (colon == std::string::npos || iri.text.compare(0, colon, "wd") != 0)
    unsupported("a property constant outside the wd: namespace (" + iri.text + ")");
  return iri.text.substr(colon + 1);
}

// Renders a term as a SPARQL expression (inside BIND/FILTER).
std::string expr(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return "?" + t.name;
    case Term::Kind::IriConst:
      return t.iri.text;
    case Term::Kind::Literal: {
      if (!t.literal.is_datavalue()) unsupported("a non-datavalue literal");
      std::string lit = escape_literal(t.literal.lexical());
      if (t.literal.datatype().text != "xsd:string")
        lit += "^^" + t.literal.datatype().text;
      return lit;
    }
    case Term::Kind::Apply: {
      std::string s = "kgq:" + t.name + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ", ";
        s += expr(t.args[i]);
      }
      return s + ")";
    }
  }
  return {};
}

struct Compiler {
  const RuleAst& rule;
  const PrefixTable& prefixes;
  Engine engine;  // evaluates ground sort terms into JSON literals

  std::vector<std::string> where;
  std::vector<std::string> construct;
  std::set<std::string> bound_property_vars;

  static constexpr const char* kSortPredicates[5] = {
      "pq:validityJ", "pq:causalityJ", "pq:sequenceJ", "pq:annotationsJ",
      "pq:provenanceJ"};
  static constexpr const char* kSortNames[5] = {"validity", "causality", "sequence",
                                                "annotations", "provenance"};

  std::string ground_sort_literal(const Term& t) {
    EvalValue v = engine.eval_term(t, Binding{});
    if (const auto* x = std::get_if<ValidityContext>(&v))
      return escape_literal(encode_validity(*x));
    if (const auto* x = std::get_if<Causality>(&v))
      return escape_literal(encode_causality(*x));
    if (const auto* x = std::get_if<SequenceNode>(&v))
      return escape_literal(encode_sequence(*x));
    if (const auto* x = std::get_if<Annotations>(&v))
      return escape_literal(encode_annotations(*x));
    if (const auto* x = std::get_if<Provenance>(&v))
      return escape_literal(encode_provenance(*x));
    unsupported("a ground sort constant of unexpected kind");
  }

  // Triple-position rendering of a subject/value term; compound terms get a
  // fresh variable constrained by a FILTER.
  std::string triple_term(const Term& t, const std::string& fresh) {
    switch (t.kind) {
      case Term::Kind::Variable:
        return "?" + t.name;
      case Term::Kind::IriConst:
        return t.iri.text;
      case Term::Kind::Literal:
        return expr(t);
      case Term::Kind::Apply:
        where.push_back("  FILTER(?" + fresh + " = " + expr(t) + ")");
        return "?" + fresh;
    }
    return {};
  }

  void compile_body_atom(const Atom& atom, std::size_t index) {
    if (atom.statement_kind != StatementKind::st) unsupported("a sno/ssome body atom");
    std::string node = "?stmt" + std::to_string(index);
    const Term& subj = atom.terms[0];
    const Term& prop = atom.terms[1];
    const Term& val = atom.terms[2];

    std::string subj_s = triple_term(subj, "subj" + std::to_string(index));
    std::string val_s = triple_term(val, "val" + std::to_string(index));

    if (prop.kind == Term::Kind::IriConst) {
      std::string local = property_local(prop.iri);
      where.push_back("  " + subj_s + " p:" + local + " " + node + " .");
      where.push_back("  " + node + " ps:" + local + " " + val_s + " .");
    } else if (prop.kind == Term::Kind::Variable) {
      std::string pvar = "?prop" + std::to_string(index);
      std::string psvar = "?propStmt" + std::to_string(index);
      where.push_back("  " + subj_s + " " + pvar + " " + node + " .");
      where.push_back("  " + node + " " + psvar + " " + val_s + " .");
      if (bound_property_vars.insert(prop.name).second)
        where.push_back("  BIND(kgq:propertyOf(" + pvar + ") AS ?" + prop.name + ")");
      else
        where.push_back("  FILTER(kgq:propertyOf(" + pvar + ") = ?" + prop.name + ")");
      where.push_back("  FILTER(" + psvar + " = kgq:psIri(?" + prop.name + "))");
    } else {
      unsupported("a compound term in property position");
    }

    for (int s = 0; s < 5; ++s) {
      const Term& t = atom.terms[3 + s];
      std::string object;
      if (t.kind == Term::Kind::Variable)
        object = "?" + t.name;
      else
        object = ground_sort_literal(t);
      where.push_back("  " + node + " " + std::string(kSortPredicates[s]) + " " +
                      object + " .");
    }
  }

  void compile_head() {
    const Atom& head = rule.head;
    if (head.statement_kind != StatementKind::st) unsupported("a sno/ssome head atom");
    const Term& subj = head.terms[0];
    const Term& prop = head.terms[1];
    const Term& val = head.terms[2];

    std::string subj_s;
    if (subj.kind == Term::Kind::Variable || subj.kind == Term::Kind::IriConst) {
      subj_s = expr(subj);
    } else {
      where.push_back("  BIND(" + expr(subj) + " AS ?headSubject)");
      subj_s = "?headSubject";
    }

    std::string val_s;
    if (val.kind == Term::Kind::Variable || val.kind == Term::Kind::IriConst ||
        val.kind == Term::Kind::Literal) {
      val_s = expr(val);
    } else {
      where.push_back("  BIND(" + expr(val) + " AS ?headValue)");
      val_s = "?headValue";
    }

    std::string p_pred, ps_pred, prop_entity;
    if (prop.kind == Term::Kind::IriConst) {
      std::string local = property_local(prop.iri);
      p_pred = "p:" + local;
      ps_pred = "ps:" + local;
      prop_entity = prop.iri.text;
    } else if (prop.kind == Term::Kind::Variable) {
      where.push_back("  BIND(kgq:pIri(?" + prop.name + ") AS ?headP)");
      where.push_back("  BIND(kgq:psIri(?" + prop.name + ") AS ?headPs)");
      p_pred = "?headP";
      ps_pred = "?headPs";
      prop_entity = "?" + prop.name;
    } else {
      unsupported("a compound term in head property position");
    }

    std::vector<std::string> sort_objects(5);
    for (int s = 0; s < 5; ++s) {
      const Term& t = head.terms[3 + s];
      if (t.kind == Term::Kind::Variable) {
        sort_objects[s] = "?" + t.name;
      } else if (t.is_ground()) {
        sort_objects[s] = ground_sort_literal(t);
      } else {
        std::string var = "?head" + std::string(1, std::toupper(kSortNames[s][0])) +
                          std::string(kSortNames[s] + 1);
        where.push_back("  BIND(" + expr(t) + " AS " + var + ")");
        sort_objects[s] = var;
      }
    }

    where.push_back("  BIND(kgq:newStatementIri(" + subj_s + ", " + prop_entity +
                    ", " + val_s + ") AS ?stmtNew)");

    construct.push_back("  " + subj_s + " " + p_pred + " ?stmtNew .");
    construct.push_back("  ?stmtNew " + ps_pred + " " + val_s + " .");
    for (int s = 0; s < 5; ++s)
      construct.push_back("  ?stmtNew " + std::string(kSortPredicates[s]) + " " +
                          sort_objects[s] + " .");
  }

  std::string compile() {
    std::size_t index = 0;
    std::vector<const Atom*> builtins;
    for (const auto& atom : rule.body) {
      if (atom.kind == Atom::Kind::Statement)
        compile_body_atom(atom, ++index);
      else
        builtins.push_back(&atom);
    }
    for (const Atom* b : builtins) {
      std::string f = "kgq:" + b->predicate + "(";
      for (std::size_t i = 0; i < b->terms.size(); ++i) {
        if (i) f += ", ";
        f += expr(b->terms[i]);
      }
      where.push_back("  FILTER(" + f + "))");
    }
    compile_head();

    std::ostringstream out;
    out << "# rule: " << rule.name << "\n";
    for (const auto& [prefix, base] : prefixes.entries()) {
      if (prefix.empty()) continue;
      out << "PREFIX " << prefix << ": <" << base << ">\n";
    }
    out << "\nCONSTRUCT {\n";
    for (const auto& line : construct) out << line << "\n";
    out << "}\nWHERE {\n";
    for (const auto& line : where) out << line << "\n";
    out << "}\n";
    return out.str();
  }
};

}  // namespace

std::string compile_to_construct(const RuleAst& rule, const PrefixTable& prefixes) {
  Compiler c{rule, prefixes, Engine{}};
  return c.compile();
}

}  // namespace kgq
