#include "kgq/rule_ast.hpp"

namespace kgq {

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  for (const auto& a : args)
    if (!a.is_ground()) return false;
  return true;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind == Kind::Variable) {
    out.push_back(name);
    return;
  }
  for (const auto& a : args) a.collect_variables(out);
}

bool term_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Variable:
      return a.name == b.name;
    case Term::Kind::IriConst:
      return a.iri == b.iri;
    case Term::Kind::Literal:
      return a.literal == b.literal;
    case Term::Kind::Apply: {
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!term_equal(a.args[i], b.args[i])) return false;
      return true;
    }
  }
  return false;
}

bool atom_equal(const Atom& a, const Atom& b) {
  if (a.kind != b.kind || a.terms.size() != b.terms.size()) return false;
  if (a.kind == Atom::Kind::Statement && a.statement_kind != b.statement_kind)
    return false;
  if (a.kind == Atom::Kind::Builtin && a.predicate != b.predicate) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!term_equal(a.terms[i], b.terms[i])) return false;
  return true;
}

bool rule_equal(const RuleAst& a, const RuleAst& b) {
  if (a.name != b.name || a.body.size() != b.body.size()) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (!atom_equal(a.body[i], b.body[i])) return false;
  return atom_equal(a.head, b.head);
}

std::string print_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return t.name;
    case Term::Kind::IriConst:
      return t.iri.text;
    case Term::Kind::Literal: {
      if (t.literal.is_datavalue()) {
        const Iri& dt = t.literal.datatype();
        if (dt.text == "xsd:integer") return t.literal.lexical();
        std::string s = "\"" + t.literal.lexical() + "\"";
        if (!dt.empty() && dt.text != "xsd:string") s += "^^" + dt.text;
        return s;
      }
      return t.literal.canonical_token();
    }
    case Term::Kind::Apply: {
      if (t.args.empty()) return t.name;
      std::string s = t.name + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ", ";
        s += print_term(t.args[i]);
      }
      return s + ")";
    }
  }
  return {};
}

std::string print_atom(const Atom& a) {
  std::string s = a.kind == Atom::Kind::Statement ? to_string(a.statement_kind)
                                                  : a.predicate;
  s += "(";
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (i) s += ", ";
    s += print_term(a.terms[i]);
  }
  return s + ")";
}

std::string print_rule(const RuleAst& r) {
  std::string s = "rule " + r.name + ":\n";
  for (const auto& a : r.body) s += print_atom(a) + "\n";
  s += "->\n";
  s += print_atom(r.head) + "\n";
  return s;
}

}  // namespace kgq
