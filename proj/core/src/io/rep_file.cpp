#include "kgraph/io/rep_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kgraph/error.hpp"
#include "kgraph/io/graph_file.hpp"

namespace kgraph::io {

namespace {

std::optional<std::uint32_t> parse_count(const std::string& s) {
  std::uint32_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

class RepParser {
 public:
  RepParser(const KGraph& graph, const std::optional<Degree>& window)
      : graph_(graph), space_(graph), window_override_(window) {}

  ParseResult<AtomicRepSpec> run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      ++line_;
      auto tokens = tokenize(line);
      if (!tokens.empty()) statement(tokens);
    }
    spec_.window = window_override_ ? *window_override_
                   : window_     ? *window_
                                 : Degree::filled(graph_.rank(), 3);
    if (declared_ == 0) error(std::max<std::size_t>(line_, 1), 1, "NoOrbits", "no orbit declared");
    if (!has_errors(diagnostics_)) lazy_bases();
    if (!has_errors(diagnostics_)) {
      for (auto& o : orbits_) spec_.orbits.push_back(std::move(*o));
      collisions();
    }
    ParseResult<AtomicRepSpec> out;
    out.diagnostics = std::move(diagnostics_);
    if (!has_errors(out.diagnostics)) out.value = std::move(spec_);
    return out;
  }

 private:
  struct PendingLazy {
    std::size_t orbit;
    EdgeId e1, e2;
    std::size_t color;
    std::uint32_t multiplicity;
    std::size_t line, column;
  };

  void error(std::size_t line, std::size_t column, std::string code, std::string message,
             Severity severity = Severity::Error) {
    diagnostics_.push_back({severity, line, column, std::move(code), std::move(message)});
  }
  void error(const Token& at, std::string code, std::string message) {
    error(line_, at.column, std::move(code), std::move(message));
  }

  std::optional<EdgeId> edge(const Token& t) {
    if (auto e = graph_.skeleton().find_edge(t.text)) return e;
    error(t, "UnknownEdge", "unknown edge `" + t.text + "`");
    return std::nullopt;
  }

  void statement(const std::vector<Token>& tokens) {
    const std::string& head = tokens[0].text;
    if (head == "graph") {
      if (tokens.size() != 2) error(tokens[0], "Syntax", "expected `graph PATH`");
      return;
    }
    if (head == "window") return window(tokens);
    if (head == "orbit" || head == "lazy") ++declared_;
    if (head == "orbit") return orbit(tokens);
    if (head == "lazy") return lazy(tokens);
    if (head == "mutate") return mutate(tokens);
    error(tokens[0], "Syntax", "unknown declaration `" + head + "`");
  }

  void window(const std::vector<Token>& tokens) {
    if (tokens.size() != 2) {
      error(tokens[0], "Syntax", "expected `window N1,...,Nk`");
      return;
    }
    try {
      Degree w = parse_degree(tokens[1].text);
      if (w.rank() != graph_.rank()) {
        error(tokens[1], "RankMismatch",
              "window has " + std::to_string(w.rank()) + " coordinates, graph rank is " +
                  std::to_string(graph_.rank()));
        return;
      }
      window_ = w;
    } catch (const Error& e) {
      error(tokens[1], "Syntax", e.what());
    }
  }

  std::optional<std::uint32_t> multiplicity(const std::vector<Token>& tokens, std::size_t at) {
    if (at + 2 != tokens.size() || tokens[at].text != "mult") {
      const Token& t = at < tokens.size() ? tokens[at] : tokens.back();
      error(t, "Syntax", "expected `mult M` at the end of the declaration");
      return std::nullopt;
    }
    auto m = parse_count(tokens[at + 1].text);
    if (!m) {
      error(tokens[at + 1], "Syntax", "multiplicity must be a non-negative integer");
      return std::nullopt;
    }
    if (*m == 0) {
      error(tokens[at + 1], "ZeroMultiplicity", "multiplicity must be at least 1");
      return std::nullopt;
    }
    return m;
  }

  // Edge names from `begin` up to the first keyword in `stops`.
  std::optional<Morphism> word(const std::vector<Token>& tokens, std::size_t& i,
                               std::initializer_list<const char*> stops) {
    auto is_stop = [&](const std::string& s) {
      for (const char* stop : stops) {
        if (s == stop) return true;
      }
      return false;
    };
    std::size_t start = i;
    std::vector<EdgeId> edges;
    bool ok = true;
    for (; i < tokens.size() && !is_stop(tokens[i].text); ++i) {
      if (auto e = edge(tokens[i])) edges.push_back(*e);
      else ok = false;
    }
    const Token& at = start < tokens.size() ? tokens[start] : tokens.back();
    if (edges.empty()) {
      if (ok) error(at, "Syntax", "expected at least one edge");
      return std::nullopt;
    }
    if (!ok) return std::nullopt;
    try {
      return graph_.normal_form(edges);
    } catch (const Error& e) {
      error(at, "NotComposable", e.what());
      return std::nullopt;
    }
  }

  void orbit(const std::vector<Token>& tokens) {
    std::size_t i = 1;
    std::optional<Morphism> prefix;
    if (i < tokens.size() && tokens[i].text == "prefix") {
      ++i;
      prefix = word(tokens, i, {"cycle", "mult"});
      if (!prefix) return;
    }
    if (i >= tokens.size() || tokens[i].text != "cycle") {
      error(i < tokens.size() ? tokens[i] : tokens.back(), "Syntax",
            "expected `orbit [prefix WORD] cycle WORD mult M`");
      return;
    }
    const Token& cycle_at = tokens[++i < tokens.size() ? i : i - 1];
    auto cycle = word(tokens, i, {"mult"});
    if (!cycle) return;
    auto mult = multiplicity(tokens, i);
    if (!mult) return;
    const Degree& d = cycle->degree();
    for (std::size_t c = 0; c < d.rank(); ++c) {
      if (d[c] == 0) {
        error(cycle_at, "CycleDegreeZero",
              "cycle has no edge of color " + std::to_string(c + 1));
        return;
      }
    }
    if (cycle->range() != cycle->source()) {
      error(cycle_at, "CycleNotClosed", "cycle does not start and end at the same vertex");
      return;
    }
    Morphism head = prefix ? *prefix : graph_.vertex(cycle->range());
    if (head.source() != cycle->range()) {
      error(tokens[2], "NotComposable", "prefix does not end where the cycle starts");
      return;
    }
    orbits_.push_back(OrbitSpec{space_.periodic(head, *cycle), *mult});
    lines_.push_back(line_);
  }

  void lazy(const std::vector<Token>& tokens) {
    if (tokens.size() != 9 || tokens[1].text != "thue-morse" || tokens[2].text != "over" ||
        tokens[5].text != "cycle-color") {
      error(tokens.size() > 1 ? tokens[1] : tokens[0], "Syntax",
            "expected `lazy thue-morse over E1 E2 cycle-color C mult M`");
      return;
    }
    auto e1 = edge(tokens[3]);
    auto e2 = edge(tokens[4]);
    auto color = parse_count(tokens[6].text);
    if (!color || *color == 0 || *color > graph_.rank()) {
      error(tokens[6], "BadColor", "color must be between 1 and " + std::to_string(graph_.rank()));
      return;
    }
    auto mult = multiplicity(tokens, 7);
    if (!e1 || !e2 || !mult) return;
    pending_.push_back({orbits_.size(), *e1, *e2, *color - 1, *mult, line_, tokens[1].column});
    orbits_.emplace_back();
    lines_.push_back(line_);
  }

  void mutate(const std::vector<Token>& tokens) {
    if (tokens.size() != 3 || tokens[1].text != "swap") {
      error(tokens[0], "Syntax", "expected `mutate swap EDGE`");
      return;
    }
    if (auto e = edge(tokens[2])) spec_.swap_mutations.push_back(*e);
  }

  void lazy_bases() {
    Degree depth = spec_.window + Degree::filled(graph_.rank(), 1);
    for (const PendingLazy& p : pending_) {
      try {
        orbits_[p.orbit] =
            OrbitSpec{space_.lazy(space_.thue_morse(p.e1, p.e2, p.color, depth)), p.multiplicity};
      } catch (const Error& e) {
        error(p.line, p.column, "InvalidGenerator", e.what());
      }
    }
  }

  void collisions() {
    for (const SpecIssue& issue : check_spec(spec_)) {
      std::size_t line = lines_.at(issue.second);
      if (issue.kind == SpecIssue::Kind::OrbitCollision) {
        error(line, 1, "OrbitCollision",
              "orbit on line " + std::to_string(line) + " is the orbit declared on line " +
                  std::to_string(lines_.at(issue.first)));
      } else if (issue.kind == SpecIssue::Kind::Undecided) {
        error(line, 1, "Undecided",
              "could not decide whether the orbits on lines " +
                  std::to_string(lines_.at(issue.first)) + " and " + std::to_string(line) +
                  " coincide; treating them as distinct",
              Severity::Warning);
      }
    }
  }

  const KGraph& graph_;
  PathSpace space_;
  std::optional<Degree> window_override_;
  std::optional<Degree> window_;
  std::size_t line_ = 0;
  AtomicRepSpec spec_{graph_, {}, Degree(), {}};
  std::vector<std::optional<OrbitSpec>> orbits_;
  std::size_t declared_ = 0;
  std::vector<std::size_t> lines_;
  std::vector<PendingLazy> pending_;
  std::vector<Diagnostic> diagnostics_;
};

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

ParseResult<RepHeader> read_rep_header(const std::string& text) {
  ParseResult<RepHeader> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text != "graph") continue;
    if (out.value) {
      out.diagnostics.push_back({Severity::Error, n, 1, "DuplicateGraph", "graph declared twice"});
      continue;
    }
    if (tokens.size() != 2) {
      out.diagnostics.push_back({Severity::Error, n, tokens[0].column, "Syntax", "expected `graph PATH`"});
      continue;
    }
    out.value = RepHeader{tokens[1].text, n, tokens[1].column};
  }
  if (!out.value && !has_errors(out.diagnostics)) {
    out.diagnostics.push_back({Severity::Error, 1, 1, "MissingGraph", "missing graph declaration"});
  }
  if (has_errors(out.diagnostics)) out.value.reset();
  return out;
}

ParseResult<AtomicRepSpec> parse_rep(const std::string& text, const KGraph& graph,
                                     const std::optional<Degree>& window) {
  return RepParser(graph, window).run(text);
}

ParseResult<AtomicRepSpec> load_rep(const std::string& path, const std::optional<Degree>& window) {
  ParseResult<AtomicRepSpec> out;
  auto text = slurp(path);
  if (!text) {
    out.diagnostics.push_back({Severity::Error, 1, 1, "Io", "cannot read `" + path + "`"});
    return out;
  }
  auto header = read_rep_header(*text);
  if (!header.ok()) {
    out.diagnostics = std::move(header.diagnostics);
    return out;
  }
  std::filesystem::path graph_path = header.value->graph;
  if (graph_path.is_relative()) graph_path = std::filesystem::path(path).parent_path() / graph_path;
  auto skeleton = read_graph_file(graph_path.string());
  for (Diagnostic d : skeleton.diagnostics) {
    d.message = graph_path.string() + ":" + std::to_string(d.line) + ":" +
                std::to_string(d.column) + ": " + d.message;
    d.line = header.value->line;
    d.column = header.value->column;
    out.diagnostics.push_back(std::move(d));
  }
  if (!skeleton.ok()) return out;
  auto validated = KGraph::validate(*skeleton.value);
  if (auto* violations = std::get_if<std::vector<Violation>>(&validated)) {
    for (const Violation& v : *violations) {
      out.diagnostics.push_back({Severity::Error, header.value->line, header.value->column,
                                 violation_code(v),
                                 graph_path.string() + ": " + describe(*skeleton.value, v)});
    }
    return out;
  }
  auto parsed = parse_rep(*text, std::get<KGraph>(validated), window);
  out.value = std::move(parsed.value);
  out.diagnostics.insert(out.diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  return out;
}

}  // namespace kgraph::io
