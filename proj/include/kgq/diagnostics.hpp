#pragma once

#include <string>
#include <vector>

namespace kgq {

struct Diagnostic {
  std::string where;    // file:line, rule name, statement key, ...
  std::string message;

  std::string str() const { return where.empty() ? message : where + ": " + message; }
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace kgq
