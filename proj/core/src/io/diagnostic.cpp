#include "kgraph/io/diagnostic.hpp"

#include <algorithm>
#include <cctype>

namespace kgraph::io {

std::string Diagnostic::to_string(const std::string& file) const {
  std::string out;
  if (!file.empty()) out += file + ":";
  out += std::to_string(line) + ":" + std::to_string(column) + ": ";
  out += severity == Severity::Error ? "error" : "warning";
  out += "[" + code + "]: " + message;
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace kgraph::io
