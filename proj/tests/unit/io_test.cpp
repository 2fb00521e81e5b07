#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "kgraph/decisions.hpp"
#include "kgraph/io/graph_file.hpp"
#include "kgraph/io/rep_file.hpp"
#include "kgraph/io/report.hpp"

namespace kgraph::io {
namespace {

using kgraph::testing::fixture;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  for (const Diagnostic& d : ds) {
    if (d.code == code) return true;
  }
  return false;
}

const std::vector<std::string> kGraphs{"bflip.kg", "delta.kg",       "mono2.kg", "flip2.kg",
                                       "rot5.kg",  "broken_cube.kg", "union.kg"};

TEST(GraphFile, BflipFixture) {
  auto r = read_graph_file(fixture("bflip.kg"));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->vertices().size(), 2u);
  EXPECT_EQ(r.value->edges().size(), 4u);
  EXPECT_EQ(r.value->squares().size(), 2u);
  EXPECT_EQ(*r.value, kgraph::testing::bflip_skeleton());
}

TEST(GraphFile, FixturesMatchBuilders) {
  EXPECT_EQ(*read_graph_file(fixture("delta.kg")).value, kgraph::testing::delta_skeleton());
  EXPECT_EQ(*read_graph_file(fixture("mono2.kg")).value, kgraph::testing::mono2_skeleton());
  EXPECT_EQ(*read_graph_file(fixture("flip2.kg")).value, kgraph::testing::flip2_skeleton());
  EXPECT_EQ(*read_graph_file(fixture("rot5.kg")).value, kgraph::testing::rot5_skeleton());
  EXPECT_EQ(*read_graph_file(fixture("broken_cube.kg")).value,
            kgraph::testing::broken_cube_skeleton());
  EXPECT_EQ(*read_graph_file(fixture("union.kg")).value, kgraph::testing::union_skeleton());
}

TEST(GraphFile, RoundTrip) {
  for (const std::string& name : kGraphs) {
    auto first = read_graph_file(fixture(name));
    ASSERT_TRUE(first.ok()) << name;
    std::string text = emit_graph(*first.value);
    auto second = parse_graph(text);
    ASSERT_TRUE(second.ok()) << name;
    EXPECT_EQ(*second.value, *first.value) << name;
    EXPECT_EQ(emit_graph(*second.value), text) << name;
  }
}

TEST(GraphFile, Diagnostics) {
  auto empty = parse_graph("");
  ASSERT_FALSE(empty.ok());
  EXPECT_EQ(empty.diagnostics[0].message, "missing rank declaration");

  auto unknown = parse_graph("rank 2\nvertex o\nedge b color 1 from o to o\nedge r color 2 from o to o\n"
                             "square b r = r q\n");
  ASSERT_FALSE(unknown.ok());
  ASSERT_TRUE(has_code(unknown.diagnostics, "UnknownEdge"));
  for (const Diagnostic& d : unknown.diagnostics) {
    if (d.code != "UnknownEdge") continue;
    EXPECT_NE(d.message.find("q"), std::string::npos);
    EXPECT_EQ(d.line, 5u);
    EXPECT_EQ(d.column, 16u);
  }

  auto cases = std::vector<std::pair<std::string, std::string>>{
      {"rank 2\nrank 2\n", "DuplicateRank"},
      {"rank 2\nvertex o o\n", "DuplicateVertex"},
      {"rank 2\nvertex o\nedge b color 1 from o to o\nedge b color 1 from o to o\n", "DuplicateEdge"},
      {"rank 2\nvertex o\nedge b color 3 from o to o\n", "BadColor"},
      {"rank 2\nvertex o\nedge b color 1 from o to p\n", "UnknownVertex"},
      {"rank 2\nvertex o\nedge b colour 1 from o to o\n", "Syntax"},
      {"rank 2\nvertex u v\nedge b color 1 from u to u\nedge r color 2 from v to v\n"
       "square b r = r b\n",
       "NotComposable"},
      {"vertex o\n", "MissingRank"},
  };
  for (const auto& [text, code] : cases) {
    auto r = parse_graph(text);
    EXPECT_FALSE(r.ok()) << code;
    EXPECT_TRUE(has_code(r.diagnostics, code)) << code;
  }
}

TEST(GraphFile, CommentsAndBlankLines) {
  auto r = parse_graph("# header\n\nrank 1   # one color\nvertex o\nedge a color 1 from o to o\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->edges().size(), 1u);
}

TEST(GraphFile, DiagnosticFormatting) {
  Diagnostic d{Severity::Error, 3, 7, "UnknownEdge", "unknown edge q"};
  EXPECT_EQ(d.to_string("g.kg"), "g.kg:3:7: error[UnknownEdge]: unknown edge q");
}

// Random edits of fixture text never crash the parsers, and every rejection
// carries a position.
TEST(Parsers, FuzzedInputIsDiagnosed) {
  std::mt19937 rng(0x6b677261);
  std::vector<std::string> sources;
  for (const std::string& name : kGraphs) sources.push_back(slurp(fixture(name)));
  const std::string alphabet = " \n#=,abcdefghorsuvxyz0123456789-";
  const std::vector<std::string> words{"rank", "vertex", "edge", "square", "color", "from", "to", "=",
                                       "orbit", "cycle", "prefix", "mult", "lazy", "window", "0", "99"};
  KGraph mono = kgraph::testing::mono2();
  std::string rep_source = slurp(fixture("mono2_b1.rep")) + slurp(fixture("mono2_tm3.rep"));
  for (int trial = 0; trial < 400; ++trial) {
    bool graph = trial % 2 == 0;
    std::string text = graph ? sources[rng() % sources.size()] : rep_source;
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      std::size_t at = rng() % text.size();
      switch (rng() % 4) {
        case 0:
          text.erase(at, 1 + rng() % 6);
          break;
        case 1:
          text.insert(at, 1, alphabet[rng() % alphabet.size()]);
          break;
        case 2:
          text.insert(at, " " + words[rng() % words.size()] + " ");
          break;
        default:
          text.resize(at);
      }
    }
    std::vector<Diagnostic> ds;
    bool ok = false;
    if (graph) {
      auto r = parse_graph(text);
      ok = r.ok();
      ds = r.diagnostics;
    } else {
      auto r = parse_rep(text, mono);
      ok = r.ok();
      ds = r.diagnostics;
    }
    if (!ok) {
      ASSERT_TRUE(has_errors(ds)) << text;
    }
    for (const Diagnostic& d : ds) {
      EXPECT_GE(d.line, 1u) << d.code << "\n" << text;
      EXPECT_GE(d.column, 1u) << d.code << "\n" << text;
    }
  }
}

TEST(RepFile, BflipOrbit) {
  auto r = load_rep(fixture("bflip_x1.rep"));
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.value->orbits.size(), 1u);
  EXPECT_EQ(r.value->window, (Degree{3, 3}));
  const KGraph& g = r.value->graph;
  const PeriodicPath* base = r.value->orbits[0].base.periodic();
  ASSERT_NE(base, nullptr);
  EXPECT_EQ(g.format(base->cycle), "[e,e|h,g]");
  EXPECT_EQ(r.value->orbits[0].multiplicity, 1u);
}

TEST(RepFile, WindowOverrideAndLazy) {
  auto r = load_rep(fixture("mono2_tm3.rep"), Degree{2, 2});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->window, (Degree{2, 2}));
  ASSERT_EQ(r.value->orbits.size(), 1u);
  EXPECT_TRUE(r.value->orbits[0].base.is_lazy());
  EXPECT_EQ(r.value->orbits[0].multiplicity, 3u);

  auto m = load_rep(fixture("mono2_mutated.rep"));
  ASSERT_TRUE(m.ok());
  EXPECT_EQ(m.value->swap_mutations.size(), 1u);
}

TEST(RepFile, Diagnostics) {
  auto blue = load_rep(fixture("mono2_blue.rep"));
  ASSERT_FALSE(blue.ok());
  ASSERT_TRUE(has_code(blue.diagnostics, "CycleDegreeZero"));
  for (const Diagnostic& d : blue.diagnostics) {
    if (d.code == "CycleDegreeZero") {
      EXPECT_EQ(d.message, "cycle has no edge of color 2");
    }
  }
  auto collide = load_rep(fixture("bflip_xy.rep"));
  ASSERT_FALSE(collide.ok());
  EXPECT_TRUE(has_code(collide.diagnostics, "OrbitCollision"));

  KGraph mono = kgraph::testing::mono2();
  auto cases = std::vector<std::pair<std::string, std::string>>{
      {"orbit cycle b1 q mult 1\n", "UnknownEdge"},
      {"orbit cycle b1 r mult 0\n", "ZeroMultiplicity"},
      {"window 2,2,2\norbit cycle b1 r mult 1\n", "RankMismatch"},
      {"window 2,2\n", "NoOrbits"},
      {"orbit cycle b1 r\n", "Syntax"},
      {"lazy thue-morse over b1 r cycle-color 2 mult 1\n", "InvalidGenerator"},
      {"lazy thue-morse over b1 b2 cycle-color 3 mult 1\n", "BadColor"},
  };
  for (const auto& [text, code] : cases) {
    auto r = parse_rep(text, mono);
    EXPECT_FALSE(r.ok()) << code;
    EXPECT_TRUE(has_code(r.diagnostics, code)) << code;
  }

  KGraph bflip = kgraph::testing::bflip();
  auto open = parse_rep("orbit cycle e h mult 1\n", bflip);
  EXPECT_FALSE(open.ok());
  EXPECT_TRUE(has_code(open.diagnostics, "CycleNotClosed"));
}

TEST(RepFile, HeaderNamesGraph) {
  auto h = read_rep_header("# comment\ngraph some/where.kg\n");
  ASSERT_TRUE(h.ok());
  EXPECT_EQ(h.value->graph, "some/where.kg");
  EXPECT_EQ(h.value->line, 2u);
  EXPECT_FALSE(read_rep_header("window 1,1\n").ok());
}

TEST(Report, StableAndStructured) {
  Representation rep(*load_rep(fixture("mono2_mutated.rep")).value);
  CheckReport r = verify_ck(rep, rep.window(), Degree{2, 2});
  std::vector<Record> records = check_records("ck", r);
  records.push_back(summary_record(r.ok(), r.failures().size()));
  std::string json = emit_report("rep-verify", records, ReportFormat::Json);
  EXPECT_EQ(json, emit_report("rep-verify", records, ReportFormat::Json));

  std::istringstream lines(json);
  std::string line;
  std::getline(lines, line);
  auto header = Record::parse(line);
  EXPECT_EQ(header["format"], "kgraph-report");
  EXPECT_EQ(header["version"], 1);
  bool ck3_failure = false;
  while (std::getline(lines, line)) {
    auto rec = Record::parse(line);
    EXPECT_EQ(rec.begin().key(), "type");
    if (rec["type"] == "failure" && rec["relation"] == "CK3") {
      ck3_failure = true;
      EXPECT_FALSE(rec["instance"].get<std::string>().empty());
    }
  }
  EXPECT_TRUE(ck3_failure);

  std::string text = emit_report("rep-verify", records, ReportFormat::Text);
  EXPECT_EQ(text.rfind("kgraph-report v1 rep-verify\n", 0), 0u);
  EXPECT_NE(text.find("summary ok=false"), std::string::npos);
}

TEST(Report, EquivalenceRecord) {
  auto a = load_rep(fixture("bflip_x1.rep"));
  auto b = load_rep(fixture("bflip_y1.rep"));
  Record r = equivalence_record(unitarily_equivalent(*a.value, *b.value));
  EXPECT_EQ(r["equivalent"], true);
  EXPECT_EQ(r["matched_orbits"], 1);
  EXPECT_FALSE(r.contains("reason"));
}

TEST(Report, AllPassHasNoFailures) {
  Representation rep(*load_rep(fixture("bflip_x1.rep")).value);
  CheckReport r = verify_ck(rep, rep.window(), Degree{2, 2});
  for (const Record& rec : check_records("ck", r)) EXPECT_EQ(rec["type"], "check");
}

}  // namespace
}  // namespace kgraph::io
