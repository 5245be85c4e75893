#pragma once

#include <map>
#include <optional>
#include <string>

namespace kgq {

// Prefix table mapping prefix -> IRI base. The empty prefix is bound to the
// Wikidata entity base, so ":P26" and "wd:P26" normalize to the same IRI.
class PrefixTable {
public:
  static PrefixTable builtin();

  void declare(const std::string& prefix, const std::string& base);
  bool has(const std::string& prefix) const;

  // prefixed name -> full IRI; returns nullopt if the prefix is undeclared.
  std::optional<std::string> expand(const std::string& prefixed) const;

  // full IRI -> shortest prefixed form, or the input unchanged if no base
  // matches. Prefers longer bases so wds: wins over wd:.
  std::string compact(const std::string& full) const;

  const std::map<std::string, std::string>& entries() const { return prefixes_; }

private:
  std::map<std::string, std::string> prefixes_;
};

// An IRI kept in canonical compact form ("wd:Q76"). All comparisons in the
// library are plain string equality on this form.
struct Iri {
  std::string text;

  Iri() = default;
  explicit Iri(std::string t) : text(std::move(t)) {}

  bool empty() const { return text.empty(); }
  auto operator<=>(const Iri&) const = default;
};

// Normalizes an IRI as written in an input file to canonical compact form:
// full IRIs (possibly in <...>) are compacted against the table, prefixed
// names are expanded then re-compacted so aliases collapse. Throws
// std::runtime_error on an undeclared prefix.
Iri normalize_iri(const std::string& written, const PrefixTable& prefixes);

// Same, but expands with one table and compacts with another. Used by the
// ingester so document-local @prefix declarations resolve names without
// leaking prefixes the graph's table cannot re-expand.
Iri normalize_iri(const std::string& written, const PrefixTable& expand_with,
                  const PrefixTable& compact_with);

}  // namespace kgq
