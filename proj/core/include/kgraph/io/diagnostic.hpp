#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kgraph::io {

enum class Severity { Error, Warning };

/// A parse or resolution problem at a 1-based line and column.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string code;
  std::string message;

  /// "file:line:col: error[code]: message"; `file` may be empty.
  std::string to_string(const std::string& file = "") const;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return value.has_value(); }
};

/// One whitespace-separated token with its 1-based column.
struct Token {
  std::string text;
  std::size_t column = 0;
};

/// Splits a line on whitespace and strips a trailing `#` comment.
std::vector<Token> tokenize(const std::string& line);

}  // namespace kgraph::io
