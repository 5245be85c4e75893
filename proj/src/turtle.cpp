#include "kgq/turtle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kgq {

namespace {

struct TtlToken {
  enum class Kind { Iri, Blank, Literal, Dot, Semicolon, A, Prefix, End };
  Kind kind = Kind::End;
  std::string text;      // prefixed/full IRI, blank label, or lexical form
  std::string datatype;  // for Literal
  int line = 0;
};

class TtlLexer {
public:
  explicit TtlLexer(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    text_ = buf.str();
  }

  TtlToken next() {
    skip_ws();
    TtlToken t;
    t.line = line_;
    if (eof()) return t;
    char c = peek();
    if (c == '.') {
      advance();
      t.kind = TtlToken::Kind::Dot;
      return t;
    }
    if (c == ';') {
      advance();
      t.kind = TtlToken::Kind::Semicolon;
      return t;
    }
    if (c == '<') {
      advance();
      std::string iri;
      while (!eof() && peek() != '>') {
        iri += peek();
        advance();
      }
      if (eof()) fail(t.line, "unterminated IRI");
      advance();
      t.kind = TtlToken::Kind::Iri;
      t.text = "<" + iri + ">";
      return t;
    }
    if (c == '"') return lex_literal(t);
    if (c == '_' && peek(1) == ':') {
      advance();
      advance();
      t.kind = TtlToken::Kind::Blank;
      t.text = lex_name();
      return t;
    }
    if (c == '@') {
      advance();
      std::string word = lex_name();
      if (word != "prefix") fail(t.line, "unsupported directive @" + word);
      t.kind = TtlToken::Kind::Prefix;
      return t;
    }
    std::string name = lex_pname();
    if (name == "a") {
      t.kind = TtlToken::Kind::A;
      return t;
    }
    t.kind = TtlToken::Kind::Iri;
    t.text = name;
    return t;
  }

  [[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("turtle line " + std::to_string(line) + ": " + msg);
  }

private:
  bool eof() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  void advance() {
    if (text_[i_] == '\n') ++line_;
    ++i_;
  }
  void skip_ws() {
    while (!eof()) {
      if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else {
        break;
      }
    }
  }
  std::string lex_name() {
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '-')) {
      s += peek();
      advance();
    }
    return s;
  }
  std::string lex_pname() {
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '-' || peek() == ':')) {
      s += peek();
      advance();
    }
    // A trailing '.' glued to the name is the triple terminator.
    if (s.empty()) fail(line_, std::string("unexpected character '") + peek() + "'");
    return s;
  }
  TtlToken& lex_literal(TtlToken& t) {
    advance();  // opening quote
    std::string s;
    while (!eof() && peek() != '"') {
      if (peek() == '\\') advance();
      s += peek();
      advance();
    }
    if (eof()) fail(t.line, "unterminated literal");
    advance();
    t.kind = TtlToken::Kind::Literal;
    t.text = s;
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      if (peek() == '<') {
        TtlToken dt = next();
        t.datatype = dt.text;
      } else {
        t.datatype = lex_pname();
      }
    }
    return t;
  }

  std::string text_;
  std::size_t i_ = 0;
  int line_ = 1;
};

// One reified statement under assembly, keyed by its wds node (or blank).
struct NodeRec {
  Iri subject;
  Iri property;
  std::optional<Value> value;
  bool novalue = false;
  bool somevalue = false;
  QualifierBag quals;
  std::set<Iri> sources;
  // Pre-encoded sort values (pq:validityJ .. pq:provenanceJ); these win over
  // anything built from raw qualifiers so the emitter's output re-ingests.
  std::optional<ValidityContext> validity_json;
  std::optional<Causality> causality_json;
  std::optional<SequenceNode> sequence_json;
  std::optional<Annotations> annotations_json;
  std::optional<Provenance> provenance_json;
};

bool has_prefix(const std::string& s, const char* p) {
  return s.rfind(p, 0) == 0;
}

// FNV-1a, for stable statement node names in the emitter.
std::string stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string local_part(const Iri& iri) {
  auto colon = iri.text.find(':');
  return colon == std::string::npos ? iri.text : iri.text.substr(colon + 1);
}

}  // namespace

IngestReport ingest_turtle(std::istream& in, KnowledgeGraph& g,
                           const CategoryMap& categories) {
  IngestReport report;
  TtlLexer lexer(in);
  const PrefixTable graph_prefixes = g.prefixes();
  PrefixTable prefixes = graph_prefixes;  // grows with @prefix directives

  std::map<std::string, NodeRec> nodes;  // node key -> record
  std::vector<std::string> node_order;
  std::vector<Statement> bare_sno;  // entity-level novalue declarations

  auto node_for = [&](const std::string& key) -> NodeRec& {
    auto it = nodes.find(key);
    if (it == nodes.end()) {
      it = nodes.emplace(key, NodeRec{}).first;
      node_order.push_back(key);
    }
    return it->second;
  };

  auto to_value = [&](const TtlToken& t) -> Value {
    if (t.kind == TtlToken::Kind::Literal) {
      Iri dt = t.datatype.empty() ? Iri{"xsd:string"}
                                  : normalize_iri(t.datatype, prefixes, graph_prefixes);
      return Value::datavalue(t.text, std::move(dt));
    }
    return Value::entity(normalize_iri(t.text, prefixes, graph_prefixes));
  };

  for (;;) {
    TtlToken subj = lexer.next();
    if (subj.kind == TtlToken::Kind::End) break;
    if (subj.kind == TtlToken::Kind::Prefix) {
      TtlToken name = lexer.next();  // "wd:" style pname with empty local
      TtlToken base = lexer.next();
      TtlToken dot = lexer.next();
      if (name.kind != TtlToken::Kind::Iri || base.kind != TtlToken::Kind::Iri ||
          dot.kind != TtlToken::Kind::Dot || base.text.front() != '<')
        lexer.fail(subj.line, "malformed @prefix directive");
      std::string p = name.text.substr(0, name.text.find(':'));
      prefixes.declare(p, base.text.substr(1, base.text.size() - 2));
      continue;
    }

    std::string subj_key;  // node key when the subject is a statement node
    Iri subj_iri;
    bool subj_ok = true;
    if (subj.kind == TtlToken::Kind::Blank) {
      subj_key = "_:" + subj.text;
    } else if (subj.kind == TtlToken::Kind::Iri) {
      subj_iri = normalize_iri(subj.text, prefixes, graph_prefixes);
      if (has_prefix(subj_iri.text, "wds:")) subj_key = subj_iri.text;
    } else {
      subj_ok = false;
    }

    auto process = [&](const TtlToken& pred, const TtlToken& obj) {
      ++report.triples_read;
      auto skip = [&](const std::string& why) {
        ++report.triples_skipped;
        report.diagnostics.push_back(
            {"turtle line " + std::to_string(pred.line), "skipped triple: " + why});
      };
      if (!subj_ok) {
        skip("subject is not an IRI or blank node");
        return;
      }

      std::string pred_text;
      bool pred_is_type = pred.kind == TtlToken::Kind::A;
      if (!pred_is_type) {
        if (pred.kind != TtlToken::Kind::Iri) {
          skip("predicate is not an IRI");
          return;
        }
        pred_text = normalize_iri(pred.text, prefixes, graph_prefixes).text;
        if (pred_text == "rdf:type") pred_is_type = true;
      }

      if (pred_is_type) {
        if (obj.kind == TtlToken::Kind::Iri) {
          Iri o = normalize_iri(obj.text, prefixes, graph_prefixes);
          if (has_prefix(o.text, "wdno:")) {
            Iri prop{"wd:" + local_part(o)};
            if (!subj_key.empty()) {
              NodeRec& rec = node_for(subj_key);
              rec.novalue = true;
              if (rec.property.empty()) rec.property = prop;
            } else {
              Statement s;
              s.kind = StatementKind::sno;
              s.subject = subj_iri;
              s.property = prop;
              bare_sno.push_back(std::move(s));
            }
            return;
          }
        }
        skip("rdf:type outside the wdno: layout");
        return;
      }

      if (has_prefix(pred_text, "p:")) {
        std::string node_key;
        if (obj.kind == TtlToken::Kind::Blank)
          node_key = "_:" + obj.text;
        else if (obj.kind == TtlToken::Kind::Iri)
          node_key = normalize_iri(obj.text, prefixes, graph_prefixes).text;
        if (node_key.empty() || subj_iri.empty()) {
          skip("p: triple outside the entity--node layout");
          return;
        }
        NodeRec& rec = node_for(node_key);
        rec.subject = subj_iri;
        rec.property = Iri{"wd:" + pred_text.substr(2)};
        return;
      }

      if (subj_key.empty()) {
        skip("predicate " + pred_text + " on a non-statement subject");
        return;
      }
      NodeRec& rec = node_for(subj_key);

      if (has_prefix(pred_text, "ps:")) {
        if (obj.kind == TtlToken::Kind::Blank)
          rec.somevalue = true;
        else
          rec.value = to_value(obj);
        return;
      }
      if (has_prefix(pred_text, "pq:")) {
        std::string local = pred_text.substr(3);
        if (local == "validityJ" || local == "causalityJ" || local == "sequenceJ" ||
            local == "annotationsJ" || local == "provenanceJ") {
          if (obj.kind != TtlToken::Kind::Literal) {
            skip(pred_text + " with a non-literal object");
            return;
          }
          try {
            if (local == "validityJ")
              rec.validity_json = decode_validity(obj.text);
            else if (local == "causalityJ")
              rec.causality_json = decode_causality(obj.text);
            else if (local == "sequenceJ")
              rec.sequence_json = decode_sequence(obj.text);
            else if (local == "annotationsJ")
              rec.annotations_json = decode_annotations(obj.text);
            else
              rec.provenance_json = decode_provenance(obj.text);
          } catch (const std::runtime_error& e) {
            skip(e.what());
          }
          return;
        }
        rec.quals.add(Iri{pred_text}, to_value(obj));
        return;
      }
      if (pred_text == "prov:wasDerivedFrom") {
        if (obj.kind == TtlToken::Kind::Iri)
          rec.sources.insert(normalize_iri(obj.text, prefixes, graph_prefixes));
        else
          skip("non-IRI provenance reference");
        return;
      }
      skip("unsupported predicate " + pred_text);
    };

    for (;;) {
      TtlToken pred = lexer.next();
      TtlToken obj = lexer.next();
      process(pred, obj);
      TtlToken sep = lexer.next();
      if (sep.kind == TtlToken::Kind::Dot) break;
      if (sep.kind != TtlToken::Kind::Semicolon)
        lexer.fail(sep.line, "expected '.' or ';' after triple");
    }
  }

  for (const auto& key : node_order) {
    NodeRec& rec = nodes[key];
    if (rec.subject.empty() || rec.property.empty()) {
      report.diagnostics.push_back(
          {key, "statement node without a governing p: triple, dropped"});
      continue;
    }
    Statement s;
    if (rec.novalue) {
      s.kind = StatementKind::sno;
    } else if (rec.somevalue && !rec.value) {
      s.kind = StatementKind::ssome;
    } else if (rec.value) {
      s.kind = StatementKind::st;
      s.value = rec.value;
    } else {
      report.diagnostics.push_back({key, "statement node without a ps: value, dropped"});
      continue;
    }
    s.subject = rec.subject;
    s.property = rec.property;
    SortValues sorts = build_sorts(rec.quals, categories, report.diagnostics, key);
    s.validity = rec.validity_json.value_or(sorts.validity);
    s.causality = rec.causality_json.value_or(sorts.causality);
    s.sequence = rec.sequence_json.value_or(sorts.sequence);
    s.annotations = rec.annotations_json.value_or(sorts.annotations);
    s.provenance =
        rec.provenance_json.value_or(sorts.provenance).add_sources(rec.sources);
    if (g.insert(s)) ++report.statements;
  }
  for (const auto& s : bare_sno)
    if (g.insert(s)) ++report.statements;
  return report;
}

IngestReport ingest_turtle_file(const std::string& path, KnowledgeGraph& g,
                                const CategoryMap& categories) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ingest_turtle(in, g, categories);
}

void emit_sort_triples(const KnowledgeGraph& g, std::ostream& out) {
  for (const auto& [prefix, base] : g.prefixes().entries()) {
    if (prefix.empty()) continue;
    out << "@prefix " << prefix << ": <" << base << "> .\n";
  }
  out << "\n";

  std::vector<const Statement*> ordered;
  ordered.reserve(g.size());
  for (const auto& s : g.statements()) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(), [](const Statement* a, const Statement* b) {
    if (a->subject != b->subject) return a->subject < b->subject;
    return a->canonical_key() < b->canonical_key();
  });

  for (const Statement* s : ordered) {
    std::string key = s->canonical_key();
    std::string node =
        "wds:" + local_part(s->subject) + "-" + stable_hash(key);
    std::string plocal = local_part(s->property);
    out << s->subject.text << " p:" << plocal << " " << node << " .\n";
    switch (s->kind) {
      case StatementKind::st: {
        const Value& v = *s->value;
        out << node << " ps:" << plocal << " ";
        if (v.is_entity()) {
          out << v.iri().text;
        } else if (v.is_datavalue()) {
          out << "\"" << v.lexical() << "\"";
          if (v.datatype().text != "xsd:string") out << "^^" << v.datatype().text;
        } else {
          out << "\"" << v.canonical_token() << "\"";
        }
        out << " .\n";
        break;
      }
      case StatementKind::sno:
        out << node << " rdf:type wdno:" << plocal << " .\n";
        break;
      case StatementKind::ssome:
        out << node << " ps:" << plocal << " _:some" << stable_hash(key) << " .\n";
        break;
    }
    auto literal = [](const std::string& json) {
      std::string esc;
      for (char c : json) {
        if (c == '\\' || c == '"') esc += '\\';
        esc += c;
      }
      return "\"" + esc + "\"";
    };
    out << node << " pq:validityJ " << literal(encode_validity(s->validity)) << " .\n";
    out << node << " pq:causalityJ " << literal(encode_causality(s->causality))
        << " .\n";
    out << node << " pq:sequenceJ " << literal(encode_sequence(s->sequence)) << " .\n";
    out << node << " pq:annotationsJ " << literal(encode_annotations(s->annotations))
        << " .\n";
    out << node << " pq:provenanceJ " << literal(encode_provenance(s->provenance))
        << " .\n";
  }
}

std::string emit_sort_triples(const KnowledgeGraph& g) {
  std::ostringstream out;
  emit_sort_triples(g, out);
  return out.str();
}

}  // namespace kgq
