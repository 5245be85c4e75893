#pragma once

#include <string>
#include <vector>

#include "kgq/statement.hpp"

namespace kgq {

struct SourcePos {
  int line = 0;
  int col = 0;
};

// A term of the rule language: variable, IRI constant, literal, or a
// function application. Constants like emptyValidity are 0-ary applications.
struct Term {
  enum class Kind { Variable, IriConst, Literal, Apply };

  Kind kind = Kind::Variable;
  std::string name;        // variable name or function symbol
  Iri iri;                 // IriConst
  Value literal;           // Literal (datavalue)
  std::vector<Term> args;  // Apply
  SourcePos pos;

  static Term variable(std::string n, SourcePos p = {}) {
    Term t;
    t.kind = Kind::Variable;
    t.name = std::move(n);
    t.pos = p;
    return t;
  }
  static Term iri_const(Iri i, SourcePos p = {}) {
    Term t;
    t.kind = Kind::IriConst;
    t.iri = std::move(i);
    t.pos = p;
    return t;
  }
  static Term literal_const(Value v, SourcePos p = {}) {
    Term t;
    t.kind = Kind::Literal;
    t.literal = std::move(v);
    t.pos = p;
    return t;
  }
  static Term apply(std::string fn, std::vector<Term> args, SourcePos p = {}) {
    Term t;
    t.kind = Kind::Apply;
    t.name = std::move(fn);
    t.args = std::move(args);
    t.pos = p;
    return t;
  }

  bool is_ground() const;
  void collect_variables(std::vector<std::string>& out) const;
};

// Structural equality ignoring source positions.
bool term_equal(const Term& a, const Term& b);

struct Atom {
  enum class Kind { Statement, Builtin };

  Kind kind = Kind::Statement;
  StatementKind statement_kind = StatementKind::st;  // for Kind::Statement
  std::string predicate;                             // for Kind::Builtin
  std::vector<Term> terms;  // 8 (st), 7 (sno/ssome), or builtin args
  SourcePos pos;
};

bool atom_equal(const Atom& a, const Atom& b);

struct RuleAst {
  std::string name;
  std::vector<Atom> body;  // non-empty; at least one statement atom
  Atom head;               // always a statement atom
};

bool rule_equal(const RuleAst& a, const RuleAst& b);

// Concrete-syntax pretty printer; parse(print(r)) yields an equal AST.
std::string print_term(const Term& t);
std::string print_atom(const Atom& a);
std::string print_rule(const RuleAst& r);

}  // namespace kgq
