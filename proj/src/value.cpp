#include "kgq/value.hpp"

#include <stdexcept>

namespace kgq {

std::string Value::canonical_token() const {
  switch (kind_) {
    case Kind::Entity:
    case Kind::Property:
      return iri_.text;
    case Kind::NoValue:
      return "!noValue";
    case Kind::SomeValue:
      return "!someValue";
    case Kind::Undefined:
      return "!undefined";
    case Kind::Datavalue:
      return "!dv:" + datatype_.text + ":" + lexical_;
  }
  return {};
}

Value Value::from_canonical_token(const std::string& tok) {
  if (tok == "!noValue") return no_value();
  if (tok == "!someValue") return some_value();
  if (tok == "!undefined") return undefined();
  if (tok.rfind("!dv:", 0) == 0) {
    auto rest = tok.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("malformed datavalue token: " + tok);
    return datavalue(rest.substr(colon + 1), Iri{rest.substr(0, colon)});
  }
  if (!tok.empty() && tok[0] == '!')
    throw std::runtime_error("unknown reserved value token: " + tok);
  return entity(Iri{tok});
}

}  // namespace kgq
