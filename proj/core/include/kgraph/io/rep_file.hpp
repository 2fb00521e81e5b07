#pragma once

#include <optional>
#include <string>

#include "kgraph/io/diagnostic.hpp"
#include "kgraph/rep_spec.hpp"

namespace kgraph::io {

/// Representation files, one declaration per line:
///
///   graph PATH                      (relative to the rep file)
///   window N1,...,Nk                (default 3,...,3)
///   orbit [prefix WORD] cycle WORD mult M
///   lazy thue-morse over E1 E2 cycle-color C mult M
///   mutate swap EDGE                (test hook: corrupts t_EDGE)
///
/// WORD is a space-separated edge list with the range on the left.
struct RepHeader {
  std::string graph;
  std::size_t line = 0;
  std::size_t column = 0;
};

ParseResult<RepHeader> read_rep_header(const std::string& text);

/// Resolves the declarations against `graph`; `window`, when given,
/// overrides the file's window line.
ParseResult<AtomicRepSpec> parse_rep(const std::string& text, const KGraph& graph,
                                     const std::optional<Degree>& window = std::nullopt);

/// Reads the rep file, loads and validates the graph it names, then parses.
ParseResult<AtomicRepSpec> load_rep(const std::string& path,
                                    const std::optional<Degree>& window = std::nullopt);

}  // namespace kgraph::io
