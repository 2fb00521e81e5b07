#include "kgraph/io/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace kgraph::io {

namespace {

std::optional<std::size_t> parse_count(const std::string& s) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

class GraphParser {
 public:
  ParseResult<Skeleton> run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      ++line_;
      auto tokens = tokenize(line);
      if (tokens.empty()) continue;
      statement(tokens);
    }
    ParseResult<Skeleton> out;
    if (!skeleton_) error(line_ == 0 ? 1 : line_, 1, "MissingRank", "missing rank declaration");
    out.diagnostics = std::move(diagnostics_);
    if (!has_errors(out.diagnostics)) out.value = std::move(*skeleton_);
    return out;
  }

 private:
  void error(std::size_t line, std::size_t column, std::string code, std::string message) {
    diagnostics_.push_back({Severity::Error, line, column, std::move(code), std::move(message)});
  }
  void error(const Token& at, std::string code, std::string message) {
    error(line_, at.column, std::move(code), std::move(message));
  }

  bool expect(const std::vector<Token>& tokens, std::size_t count, const char* usage) {
    if (tokens.size() == count) return true;
    const Token& at = tokens.size() > count ? tokens[count] : tokens.back();
    error(at, "Syntax", std::string("expected `") + usage + "`");
    return false;
  }

  bool keyword(const std::vector<Token>& tokens, std::size_t i, const char* word) {
    if (tokens[i].text == word) return true;
    error(tokens[i], "Syntax", std::string("expected `") + word + "`, found `" + tokens[i].text + "`");
    return false;
  }

  std::optional<VertexId> vertex(const Token& t) {
    if (auto v = skeleton_->find_vertex(t.text)) return v;
    error(t, "UnknownVertex", "unknown vertex `" + t.text + "`");
    return std::nullopt;
  }

  std::optional<EdgeId> edge(const Token& t) {
    if (auto e = skeleton_->find_edge(t.text)) return e;
    error(t, "UnknownEdge", "unknown edge `" + t.text + "`");
    return std::nullopt;
  }

  void statement(const std::vector<Token>& tokens) {
    const std::string& head = tokens[0].text;
    if (head == "rank") return rank(tokens);
    if (!skeleton_) {
      error(tokens[0], "MissingRank", "missing rank declaration before `" + head + "`");
      return;
    }
    if (head == "vertex") return vertices(tokens);
    if (head == "edge") return edge_decl(tokens);
    if (head == "square") return square(tokens);
    error(tokens[0], "Syntax", "unknown declaration `" + head + "`");
  }

  void rank(const std::vector<Token>& tokens) {
    if (!expect(tokens, 2, "rank K")) return;
    if (skeleton_) {
      error(tokens[0], "DuplicateRank", "rank declared twice");
      return;
    }
    auto k = parse_count(tokens[1].text);
    if (!k || *k == 0) {
      error(tokens[1], "Syntax", "rank must be a positive integer");
      return;
    }
    skeleton_.emplace(*k);
  }

  void vertices(const std::vector<Token>& tokens) {
    if (tokens.size() < 2) {
      error(tokens[0], "Syntax", "expected `vertex NAME...`");
      return;
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (skeleton_->find_vertex(tokens[i].text)) {
        error(tokens[i], "DuplicateVertex", "vertex `" + tokens[i].text + "` already declared");
        continue;
      }
      skeleton_->add_vertex(tokens[i].text);
    }
  }

  void edge_decl(const std::vector<Token>& tokens) {
    if (!expect(tokens, 8, "edge NAME color C from SOURCE to RANGE")) return;
    if (!keyword(tokens, 2, "color") || !keyword(tokens, 4, "from") || !keyword(tokens, 6, "to")) {
      return;
    }
    const Token& name = tokens[1];
    if (skeleton_->find_edge(name.text)) {
      error(name, "DuplicateEdge", "edge `" + name.text + "` already declared");
      return;
    }
    auto color = parse_count(tokens[3].text);
    if (!color || *color == 0 || *color > skeleton_->rank()) {
      error(tokens[3], "BadColor",
            "color must be between 1 and " + std::to_string(skeleton_->rank()));
      return;
    }
    auto source = vertex(tokens[5]);
    auto range = vertex(tokens[7]);
    if (!source || !range) return;
    skeleton_->add_edge(name.text, *color - 1, *source, *range);
  }

  void square(const std::vector<Token>& tokens) {
    if (!expect(tokens, 6, "square A B = C D") || !keyword(tokens, 3, "=")) return;
    auto a = edge(tokens[1]);
    auto b = edge(tokens[2]);
    auto c = edge(tokens[4]);
    auto d = edge(tokens[5]);
    if (!a || !b || !c || !d) return;
    auto composable = [&](EdgeId x, EdgeId y, const Token& at) {
      if (skeleton_->edge(x).source == skeleton_->edge(y).range) return true;
      error(at, "NotComposable", "`" + skeleton_->edge(x).name + " " + skeleton_->edge(y).name +
                                     "` is not a path: source of the first is not the range "
                                     "of the second");
      return false;
    };
    bool ok = composable(*a, *b, tokens[1]);
    ok = composable(*c, *d, tokens[4]) && ok;
    if (ok) skeleton_->add_square({*a, *b, *c, *d});
  }

  std::size_t line_ = 0;
  std::optional<Skeleton> skeleton_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult<Skeleton> parse_graph(const std::string& text) { return GraphParser().run(text); }

std::string emit_graph(const Skeleton& s) {
  std::ostringstream out;
  out << "rank " << s.rank() << "\n";
  if (!s.vertices().empty()) {
    out << "vertex";
    for (const std::string& v : s.vertices()) out << " " << v;
    out << "\n";
  }
  for (const Edge& e : s.edges()) {
    out << "edge " << e.name << " color " << e.color + 1 << " from " << s.vertex_name(e.source)
        << " to " << s.vertex_name(e.range) << "\n";
  }
  for (const Square& q : s.squares()) {
    out << "square " << s.edge(q.left_first).name << " " << s.edge(q.left_second).name << " = "
        << s.edge(q.right_first).name << " " << s.edge(q.right_second).name << "\n";
  }
  return out.str();
}

ParseResult<Skeleton> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult<Skeleton> out;
    out.diagnostics.push_back({Severity::Error, 1, 1, "Io", "cannot read `" + path + "`"});
    return out;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

std::string violation_code(const Violation& v) {
  struct Name {
    const char* operator()(const violation::SquareMalformed&) const { return "SquareMalformed"; }
    const char* operator()(const violation::SquareNotBijective&) const {
      return "SquareNotBijective";
    }
    const char* operator()(const violation::CubeInconsistent&) const { return "CubeInconsistent"; }
    const char* operator()(const violation::NotSourceFree&) const { return "NotSourceFree"; }
  };
  return std::visit(Name{}, v);
}

}  // namespace kgraph::io
