#include "kgq/rule_parser.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kgq {

std::string to_string(RuleErrorCode c) {
  switch (c) {
    case RuleErrorCode::Syntax: return "syntax";
    case RuleErrorCode::UnknownSymbol: return "unknown-symbol";
    case RuleErrorCode::ArityMismatch: return "arity-mismatch";
    case RuleErrorCode::UnboundVariable: return "unbound-variable";
    case RuleErrorCode::SortMismatch: return "sort-mismatch";
    case RuleErrorCode::Unsupported: return "unsupported";
  }
  return {};
}

std::string RuleDiagnostic::str() const {
  std::ostringstream os;
  os << pos.line << ":" << pos.col << ": [" << to_string(code) << "]";
  if (!rule.empty()) os << " (" << rule << ")";
  os << " " << message;
  return os.str();
}

namespace {

struct Token {
  enum class Kind { Ident, Iri, String, Number, LParen, RParen, Comma, Arrow, Dot, Colon, End };
  Kind kind = Kind::End;
  std::string text;       // ident name / iri as written / lexical
  std::string datatype;   // for String with ^^
  SourcePos pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.pos = {line_, col_};
    if (eof()) return t;
    char c = peek();
    if (c == '(') return advance(), make(t, Token::Kind::LParen, "(");
    if (c == ')') return advance(), make(t, Token::Kind::RParen, ")");
    if (c == ',') return advance(), make(t, Token::Kind::Comma, ",");
    if (c == '.') return advance(), make(t, Token::Kind::Dot, ".");
    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      return make(t, Token::Kind::Arrow, "->");
    }
    if (c == '"') return lex_string(t);
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(t);
    if (c == ':') {
      if (is_local_char(peek(1))) return lex_iri(t, "");
      advance();
      return make(t, Token::Kind::Colon, ":");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident = lex_ident_chars();
      if (peek() == ':' && is_local_char(peek(1))) return lex_iri(t, ident);
      return make(t, Token::Kind::Ident, ident);
    }
    throw_syntax(t.pos, std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void throw_syntax(SourcePos pos, const std::string& msg) {
    RuleDiagnostic d{RuleErrorCode::Syntax, pos, {}, msg};
    throw d;
  }

private:
  bool eof() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  static bool is_local_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
  }
  std::string lex_ident_chars() {
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      s += peek();
      advance();
    }
    return s;
  }
  Token& make(Token& t, Token::Kind k, std::string text) {
    t.kind = k;
    t.text = std::move(text);
    return t;
  }
  Token& lex_iri(Token& t, const std::string& prefix) {
    advance();  // ':'
    std::string local;
    while (!eof() && is_local_char(peek())) {
      local += peek();
      advance();
    }
    // A trailing '.' is the statement terminator, not part of the local name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --i_;
      --col_;
    }
    return make(t, Token::Kind::Iri, prefix + ":" + local);
  }
  Token& lex_string(Token& t) {
    advance();  // opening quote
    std::string s;
    while (!eof() && peek() != '"') {
      if (peek() == '\\') advance();
      s += peek();
      advance();
    }
    if (eof()) throw_syntax(t.pos, "unterminated string literal");
    advance();  // closing quote
    t.kind = Token::Kind::String;
    t.text = s;
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      std::string prefix = lex_ident_chars();
      if (peek() != ':') throw_syntax(t.pos, "expected datatype IRI after ^^");
      Token dt;
      lex_iri(dt, prefix);
      t.datatype = dt.text;
    }
    return t;
  }
  Token& lex_number(Token& t) {
    std::string s;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return make(t, Token::Kind::Number, s);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_variable_name(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

class Parser {
public:
  Parser(const std::string& text, const PrefixTable& prefixes)
      : lexer_(text), prefixes_(prefixes) {
    shift();
  }

  ParseResult parse_all() {
    ParseResult result;
    int auto_name = 0;
    while (cur_.kind != Token::Kind::End) {
      try {
        RuleAst rule = parse_one(++auto_name);
        for (auto d : typecheck_rule(rule)) {
          d.rule = rule.name;
          result.errors.push_back(d);
        }
        result.rules.push_back(std::move(rule));
      } catch (RuleDiagnostic& d) {
        result.errors.push_back(d);
        recover();
      }
    }
    return result;
  }

private:
  void shift() { cur_ = lexer_.next(); }

  bool at_ident(const char* s) const {
    return cur_.kind == Token::Kind::Ident && cur_.text == s;
  }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k)
      lexer_.throw_syntax(cur_.pos, std::string("expected ") + what + ", got '" +
                                        cur_.text + "'");
    shift();
  }

  // Skips to the start of the next plausible rule after an error.
  void recover() {
    while (cur_.kind != Token::Kind::End) {
      if (cur_.kind == Token::Kind::Dot) {
        shift();
        return;
      }
      if (at_ident("rule")) return;
      shift();
    }
  }

  RuleAst parse_one(int auto_name) {
    RuleAst rule;
    if (at_ident("rule")) {
      shift();
      if (cur_.kind != Token::Kind::Ident)
        lexer_.throw_syntax(cur_.pos, "expected rule name after 'rule'");
      rule.name = cur_.text;
      shift();
      expect(Token::Kind::Colon, "':' after rule name");
    } else {
      rule.name = "rule" + std::to_string(auto_name);
    }
    while (cur_.kind != Token::Kind::Arrow) {
      if (cur_.kind == Token::Kind::End)
        lexer_.throw_syntax(cur_.pos, "unexpected end of input before '->'");
      rule.body.push_back(parse_atom());
    }
    shift();  // '->'
    rule.head = parse_atom();
    if (rule.head.kind != Atom::Kind::Statement)
      lexer_.throw_syntax(rule.head.pos, "rule head must be a statement atom");
    if (cur_.kind == Token::Kind::Dot) shift();
    if (rule.body.empty())
      lexer_.throw_syntax(rule.head.pos, "rule body must be non-empty");
    return rule;
  }

  Atom parse_atom() {
    if (cur_.kind != Token::Kind::Ident)
      lexer_.throw_syntax(cur_.pos, "expected atom, got '" + cur_.text + "'");
    Atom atom;
    atom.pos = cur_.pos;
    std::string name = cur_.text;
    shift();
    if (auto kind = statement_kind_from_string(name)) {
      atom.kind = Atom::Kind::Statement;
      atom.statement_kind = *kind;
    } else {
      atom.kind = Atom::Kind::Builtin;
      atom.predicate = name;
    }
    expect(Token::Kind::LParen, "'('");
    if (cur_.kind != Token::Kind::RParen) {
      atom.terms.push_back(parse_term());
      while (cur_.kind == Token::Kind::Comma) {
        shift();
        atom.terms.push_back(parse_term());
      }
    }
    expect(Token::Kind::RParen, "')'");
    return atom;
  }

  Term parse_term() {
    SourcePos pos = cur_.pos;
    switch (cur_.kind) {
      case Token::Kind::Iri: {
        Iri iri = normalize_iri(cur_.text, prefixes_);
        shift();
        return Term::iri_const(std::move(iri), pos);
      }
      case Token::Kind::String: {
        Iri dt{cur_.datatype.empty() ? "xsd:string" : cur_.datatype};
        Value v = Value::datavalue(cur_.text, normalize_iri(dt.text, prefixes_));
        shift();
        return Term::literal_const(std::move(v), pos);
      }
      case Token::Kind::Number: {
        Value v = Value::datavalue(cur_.text, Iri{"xsd:integer"});
        shift();
        return Term::literal_const(std::move(v), pos);
      }
      case Token::Kind::Ident: {
        std::string name = cur_.text;
        shift();
        if (is_variable_name(name)) return Term::variable(name, pos);
        std::vector<Term> args;
        if (cur_.kind == Token::Kind::LParen) {
          shift();
          if (cur_.kind != Token::Kind::RParen) {
            args.push_back(parse_term());
            while (cur_.kind == Token::Kind::Comma) {
              shift();
              args.push_back(parse_term());
            }
          }
          expect(Token::Kind::RParen, "')'");
        }
        return Term::apply(name, std::move(args), pos);
      }
      default:
        lexer_.throw_syntax(pos, "expected term, got '" + cur_.text + "'");
    }
  }

  Lexer lexer_;
  const PrefixTable& prefixes_;
  Token cur_;
};

}  // namespace

ParseResult parse_rules(const std::string& text, const PrefixTable& prefixes) {
  return Parser(text, prefixes).parse_all();
}

RuleAst parse_rule(const std::string& text, const PrefixTable& prefixes) {
  ParseResult r = parse_rules(text, prefixes);
  if (!r.ok() || r.rules.size() != 1) {
    std::string msg = "rule parse failed:";
    for (const auto& e : r.errors) msg += "\n  " + e.str();
    if (r.rules.size() != 1)
      msg += "\n  expected exactly one rule, got " + std::to_string(r.rules.size());
    throw std::runtime_error(msg);
  }
  return std::move(r.rules[0]);
}

namespace {

class Typechecker {
public:
  Typechecker(const RuleAst& rule, const Signature& sig) : rule_(rule), sig_(sig) {}

  std::vector<RuleDiagnostic> run() {
    collect_env();
    refine_env();
    for (const auto& atom : rule_.body) {
      if (atom.kind == Atom::Kind::Statement)
        check_statement_atom(atom, /*is_head=*/false);
      else
        check_builtin(atom);
    }
    check_statement_atom(rule_.head, /*is_head=*/true);
    return std::move(diags_);
  }

private:
  void error(RuleErrorCode code, SourcePos pos, std::string msg) {
    diags_.push_back({code, pos, {}, std::move(msg)});
  }

  // Variable sorts are introduced by the positions the variables occupy in
  // body statement atoms.
  void collect_env() {
    for (const auto& atom : rule_.body) {
      if (atom.kind != Atom::Kind::Statement) continue;
      auto positions =
          Signature::statement_positions(atom.statement_kind == StatementKind::st);
      for (std::size_t i = 0; i < atom.terms.size() && i < positions.size(); ++i) {
        const Term& t = atom.terms[i];
        if (t.kind != Term::Kind::Variable) continue;
        auto it = env_.find(t.name);
        if (it == env_.end()) {
          env_[t.name] = positions[i];
        } else {
          meet_var(t, positions[i]);
        }
      }
    }
  }

  void meet_var(const Term& var, TermSort expected) {
    auto it = env_.find(var.name);
    if (it == env_.end()) return;  // UnboundVariable surfaces in the check pass
    if (auto m = sort_meet(it->second, expected)) {
      it->second = *m;
    } else {
      error(RuleErrorCode::SortMismatch, var.pos,
            "variable " + var.name + " used both as " + to_string(it->second) +
                " and " + to_string(expected));
    }
  }

  // Narrows variable sorts by every other occurrence: head statement
  // positions, builtin arguments, function arguments. A value-position
  // variable reused in subject position is thereby an entity.
  void refine_env() {
    for (const auto& atom : rule_.body) {
      if (atom.kind == Atom::Kind::Statement)
        refine_statement(atom, /*positions_too=*/false);
      else
        refine_builtin(atom);
    }
    refine_statement(rule_.head, /*positions_too=*/true);
  }

  void refine_statement(const Atom& atom, bool positions_too) {
    auto positions =
        Signature::statement_positions(atom.statement_kind == StatementKind::st);
    for (std::size_t i = 0; i < atom.terms.size() && i < positions.size(); ++i) {
      const Term& t = atom.terms[i];
      if (t.kind == Term::Kind::Variable) {
        if (positions_too) meet_var(t, positions[i]);
      } else {
        refine_term(t);
      }
    }
  }

  void refine_builtin(const Atom& atom) {
    const auto* pred = sig_.predicate(atom.predicate);
    if (!pred || pred->polymorphic) {
      for (const auto& t : atom.terms) refine_term(t);
      return;
    }
    for (std::size_t i = 0; i < atom.terms.size() && i < pred->args.size(); ++i) {
      if (atom.terms[i].kind == Term::Kind::Variable)
        meet_var(atom.terms[i], pred->args[i]);
      else
        refine_term(atom.terms[i]);
    }
  }

  void refine_term(const Term& t) {
    if (t.kind != Term::Kind::Apply) return;
    const auto* overloads = sig_.function_overloads(t.name);
    const FunctionSig* match = nullptr;
    if (overloads)
      for (const auto& o : *overloads)
        if (o.args.size() == t.args.size()) match = &o;
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (match && t.args[i].kind == Term::Kind::Variable)
        meet_var(t.args[i], match->args[i]);
      else
        refine_term(t.args[i]);
    }
  }

  std::optional<TermSort> infer(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Variable: {
        auto it = env_.find(t.name);
        if (it == env_.end()) {
          error(RuleErrorCode::UnboundVariable, t.pos,
                "variable " + t.name + " does not occur in a body statement atom");
          return std::nullopt;
        }
        return it->second;
      }
      case Term::Kind::IriConst:
        return TermSort::Property;  // bottom of the property<=entity<=value chain
      case Term::Kind::Literal:
        if (t.literal.is_datavalue() && t.literal.datatype().text == "xsd:integer")
          return TermSort::Nat;
        return TermSort::Datavalue;
      case Term::Kind::Apply: {
        const auto* overloads = sig_.function_overloads(t.name);
        if (!overloads) {
          error(RuleErrorCode::UnknownSymbol, t.pos,
                "unknown function symbol " + t.name +
                    (sig_.is_predicate(t.name) ? " (it is a predicate)" : ""));
          return std::nullopt;
        }
        const FunctionSig* match = nullptr;
        for (const auto& o : *overloads)
          if (o.args.size() == t.args.size()) match = &o;
        if (!match) {
          error(RuleErrorCode::ArityMismatch, t.pos,
                t.name + " applied to " + std::to_string(t.args.size()) +
                    " arguments");
          return std::nullopt;
        }
        for (std::size_t i = 0; i < t.args.size(); ++i) {
          auto actual = infer(t.args[i]);
          if (actual && !sort_accepts(match->args[i], *actual))
            error(RuleErrorCode::SortMismatch, t.args[i].pos,
                  t.name + " argument " + std::to_string(i + 1) + " expects " +
                      to_string(match->args[i]) + ", got " + to_string(*actual));
        }
        return match->result;
      }
    }
    return std::nullopt;
  }

  void check_statement_atom(const Atom& atom, bool is_head) {
    auto positions =
        Signature::statement_positions(atom.statement_kind == StatementKind::st);
    if (atom.terms.size() != positions.size()) {
      error(RuleErrorCode::ArityMismatch, atom.pos,
            to_string(atom.statement_kind) + " atom has " +
                std::to_string(atom.terms.size()) + " terms, expected " +
                std::to_string(positions.size()));
      return;
    }
    for (std::size_t i = 0; i < atom.terms.size(); ++i) {
      const Term& t = atom.terms[i];
      if (!is_head && t.kind == Term::Kind::Apply && !t.is_ground()) {
        error(RuleErrorCode::Unsupported, t.pos,
              "non-ground compound term in a body atom position");
        continue;
      }
      if (!is_head && t.kind == Term::Kind::Variable) continue;  // defines env
      auto actual = infer(t);
      if (actual && !sort_accepts(positions[i], *actual))
        error(RuleErrorCode::SortMismatch, t.pos,
              "statement position " + std::to_string(i + 1) + " expects " +
                  to_string(positions[i]) + ", got " + to_string(*actual));
    }
  }

  void check_builtin(const Atom& atom) {
    const auto* pred = sig_.predicate(atom.predicate);
    if (!pred) {
      error(RuleErrorCode::UnknownSymbol, atom.pos,
            "unknown builtin predicate " + atom.predicate);
      return;
    }
    if (pred->polymorphic) {
      if (atom.terms.size() != 2) {
        error(RuleErrorCode::ArityMismatch, atom.pos,
              atom.predicate + " expects 2 arguments");
        return;
      }
      for (const auto& t : atom.terms) infer(t);
      return;
    }
    if (atom.terms.size() != pred->args.size()) {
      error(RuleErrorCode::ArityMismatch, atom.pos,
            atom.predicate + " expects " + std::to_string(pred->args.size()) +
                " arguments, got " + std::to_string(atom.terms.size()));
      return;
    }
    for (std::size_t i = 0; i < atom.terms.size(); ++i) {
      auto actual = infer(atom.terms[i]);
      if (actual && !sort_accepts(pred->args[i], *actual))
        error(RuleErrorCode::SortMismatch, atom.terms[i].pos,
              atom.predicate + " argument " + std::to_string(i + 1) + " expects " +
                  to_string(pred->args[i]) + ", got " + to_string(*actual));
    }
  }

  const RuleAst& rule_;
  const Signature& sig_;
  std::map<std::string, TermSort> env_;
  std::vector<RuleDiagnostic> diags_;
};

}  // namespace

std::vector<RuleDiagnostic> typecheck_rule(const RuleAst& rule, const Signature& sig) {
  return Typechecker(rule, sig).run();
}

}  // namespace kgq
