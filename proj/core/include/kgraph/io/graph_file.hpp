#pragma once

#include <string>

#include "kgraph/io/diagnostic.hpp"
#include "kgraph/kgraph.hpp"

namespace kgraph::io {

/// Graph files, one declaration per line, `#` starts a comment:
///
///   rank K
///   vertex NAME...
///   edge NAME color C from SOURCE to RANGE
///   square A B = C D
///
/// Colors are 1..K. An edge goes from its source to its range, so a path
/// `A B` (range on the left) needs source(A) = range(B).
ParseResult<Skeleton> parse_graph(const std::string& text);

/// Canonical text for a skeleton; parse_graph(emit_graph(s)) == s.
std::string emit_graph(const Skeleton& skeleton);

/// Reads and parses a graph file; I/O failures become an `Io` diagnostic.
ParseResult<Skeleton> read_graph_file(const std::string& path);

/// "SquareMalformed", "SquareNotBijective", "CubeInconsistent" or "NotSourceFree".
std::string violation_code(const Violation& v);

}  // namespace kgraph::io
