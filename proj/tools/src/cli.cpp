#include "kgraph/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "kgraph/decisions.hpp"
#include "kgraph/decompose.hpp"
#include "kgraph/error.hpp"
#include "kgraph/intertwiner.hpp"
#include "kgraph/io/graph_file.hpp"
#include "kgraph/io/rep_file.hpp"
#include "kgraph/io/report.hpp"
#include "kgraph/verify.hpp"

namespace kgraph::cli {

namespace {

using io::Record;

struct Options {
  std::string file;
  std::string second;
  std::string window;
  std::size_t sample = 200;
  std::string bound;
  bool json = false;
  // paths
  std::string degree;
  std::string vertex;
  std::string cycle_bound;
  std::string prefix_bound;
  // lmin / orbit
  std::string left;
  std::string right;
  std::string cycle;
  std::string prefix;
};

// Thrown for bad input; the diagnostics are already recorded.
struct InputError {};

class Session {
 public:
  Session(std::string command, const Options& opts, std::ostream& out, std::ostream& err)
      : command_(std::move(command)), opts_(opts), out_(out), err_(err) {}

  /// A negative code means "decide from the recorded failures".
  int finish(int code) {
    if (code < 0) code = failures_ == 0 ? kOk : kCheckFailed;
    records_.push_back(io::summary_record(code == kOk, failures_));
    out_ << io::emit_report(command_, records_,
                            opts_.json ? io::ReportFormat::Json : io::ReportFormat::Text);
    return code;
  }

  void add(Record r) { records_.push_back(std::move(r)); }

  void add_checks(const std::string& suite, const CheckReport& report) {
    for (Record& r : io::check_records(suite, report)) records_.push_back(std::move(r));
    failures_ += report.failures().size();
  }

  void fail() { ++failures_; }

  void diagnostics(const std::vector<io::Diagnostic>& list, const std::string& file) {
    for (const io::Diagnostic& d : list) {
      err_ << d.to_string(file) << "\n";
      records_.push_back(io::diagnostic_record(d, file));
    }
  }

  [[noreturn]] void input_error(const std::string& code, const std::string& message) {
    diagnostics({{io::Severity::Error, 0, 0, code, message}}, opts_.file);
    throw InputError{};
  }

  KGraph graph() {
    auto parsed = io::read_graph_file(opts_.file);
    diagnostics(parsed.diagnostics, opts_.file);
    if (!parsed.ok()) throw InputError{};
    auto result = KGraph::validate(*parsed.value);
    if (auto* violations = std::get_if<std::vector<Violation>>(&result)) {
      add(io::validation_record(*parsed.value, *violations));
      input_error("InvalidGraph", "graph fails validation");
    }
    return std::get<KGraph>(result);
  }

  AtomicRepSpec rep_spec(const std::string& path) {
    std::optional<Degree> window;
    if (!opts_.window.empty()) window = degree(opts_.window, "--window");
    auto parsed = io::load_rep(path, window);
    diagnostics(parsed.diagnostics, path);
    if (!parsed.ok()) throw InputError{};
    return std::move(*parsed.value);
  }

  Degree degree(const std::string& text, const std::string& flag) {
    try {
      return parse_degree(text);
    } catch (const Error& e) {
      input_error("BadFlag", flag + ": " + e.what());
    }
  }

  Degree degree_for(const KGraph& g, const std::string& text, const std::string& flag,
                    std::uint32_t fallback) {
    if (text.empty()) return Degree::filled(g.rank(), fallback);
    Degree d = degree(text, flag);
    if (d.rank() != g.rank()) {
      input_error("BadFlag", flag + " has " + std::to_string(d.rank()) +
                                 " coordinates, graph rank is " + std::to_string(g.rank()));
    }
    return d;
  }

  Morphism word(const KGraph& g, const std::string& text, const std::string& flag) {
    std::vector<EdgeId> edges;
    for (const io::Token& t : io::tokenize(text)) {
      auto e = g.skeleton().find_edge(t.text);
      if (!e) input_error("UnknownEdge", flag + ": unknown edge `" + t.text + "`");
      edges.push_back(*e);
    }
    if (edges.empty()) input_error("BadFlag", flag + ": expected at least one edge");
    try {
      return g.normal_form(edges);
    } catch (const Error& e) {
      input_error("NotComposable", flag + ": " + e.what());
    }
  }

  Degree check_bound(const Representation& rep) {
    const KGraph& g = rep.graph();
    if (!opts_.bound.empty()) return degree_for(g, opts_.bound, "--bound", 0);
    return meet(rep.spec().window, Degree::filled(g.rank(), 2));
  }

  const Options& opts() const { return opts_; }

 private:
  std::string command_;
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  std::vector<Record> records_;
  std::size_t failures_ = 0;
};

std::string pair_set(const KGraph& g, const std::vector<MinimalExtension>& exts) {
  std::string out = "{";
  for (std::size_t k = 0; k < exts.size(); ++k) {
    if (k) out += ", ";
    out += "(" + g.format_word(exts[k].alpha) + "," + g.format_word(exts[k].beta) + ")";
  }
  return out + "}";
}

Record periodicity_record(std::size_t orbit, const Periodicity& p) {
  Record r;
  r["type"] = "periodicity";
  r["orbit"] = orbit + 1;
  r["periodic"] = p.periodic;
  if (p.periodic) {
    r["exact"] = p.exact;
    r["m"] = p.m.to_string();
    r["n"] = p.n.to_string();
  }
  if (p.depth) r["depth"] = p.depth->to_string();
  return r;
}

int validate(Session& s) {
  auto parsed = io::read_graph_file(s.opts().file);
  s.diagnostics(parsed.diagnostics, s.opts().file);
  if (!parsed.ok()) return kInputError;
  auto result = KGraph::validate(*parsed.value);
  if (auto* violations = std::get_if<std::vector<Violation>>(&result)) {
    s.add(io::validation_record(*parsed.value, *violations));
    for (std::size_t k = 0; k < violations->size(); ++k) s.fail();
    return kCheckFailed;
  }
  const KGraph& g = std::get<KGraph>(result);
  s.add(io::validation_record(*parsed.value, {}));
  GraphProperties p = g.properties();
  Record r;
  r["type"] = "properties";
  r["source_free"] = p.source_free;
  r["strongly_connected"] = p.strongly_connected;
  r["finite"] = p.finite;
  s.add(std::move(r));
  return kOk;
}

int paths(Session& s) {
  KGraph g = s.graph();
  const Options& o = s.opts();
  if (!o.cycle_bound.empty()) {
    PathSpace space(g);
    Degree cycle = s.degree_for(g, o.cycle_bound, "--cycle-bound", 0);
    Degree prefix = s.degree_for(g, o.prefix_bound, "--prefix-bound", 0);
    auto found = space.ep_paths(prefix, cycle);
    for (const InfinitePath& x : found) {
      Record r;
      r["type"] = "path";
      r["path"] = space.format(x);
      r["range"] = g.vertex_name(x.range());
      s.add(std::move(r));
    }
    Record count;
    count["type"] = "count";
    count["paths"] = found.size();
    s.add(std::move(count));
    return kOk;
  }
  Degree n = s.degree_for(g, o.degree, "--degree", 1);
  std::vector<VertexId> vertices;
  if (!o.vertex.empty()) {
    auto v = g.skeleton().find_vertex(o.vertex);
    if (!v) s.input_error("UnknownVertex", "--vertex: unknown vertex `" + o.vertex + "`");
    vertices.push_back(*v);
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(v);
  }
  std::size_t total = 0;
  for (VertexId v : vertices) {
    for (const Morphism& m : g.enumerate(v, n)) {
      Record r;
      r["type"] = "morphism";
      r["morphism"] = g.format(m);
      r["range"] = g.vertex_name(m.range());
      r["source"] = g.vertex_name(m.source());
      s.add(std::move(r));
      ++total;
    }
  }
  Record count;
  count["type"] = "count";
  count["degree"] = n.to_string();
  count["morphisms"] = total;
  s.add(std::move(count));
  return kOk;
}

int lmin(Session& s) {
  KGraph g = s.graph();
  Morphism left = s.word(g, s.opts().left, "--left");
  Morphism right = s.word(g, s.opts().right, "--right");
  std::vector<MinimalExtension> exts;
  try {
    exts = g.lambda_min(left, right);
  } catch (const Error& e) {
    s.input_error(std::string(to_string(e.code())), e.what());
  }
  Record r;
  r["type"] = "lmin";
  r["left"] = g.format(left);
  r["right"] = g.format(right);
  r["extensions"] = pair_set(g, exts);
  r["count"] = exts.size();
  s.add(std::move(r));
  return kOk;
}

int orbit(Session& s) {
  KGraph g = s.graph();
  PathSpace space(g);
  const Options& o = s.opts();
  Morphism cycle = s.word(g, o.cycle, "--cycle");
  Morphism head = o.prefix.empty() ? g.vertex(cycle.range()) : s.word(g, o.prefix, "--prefix");
  InfinitePath omega = [&] {
    try {
      return space.periodic(head, cycle);
    } catch (const Error& e) {
      s.input_error(std::string(to_string(e.code())), e.what());
    }
  }();
  Degree bound = s.degree_for(g, o.window, "--window", 3);
  s.add(periodicity_record(0, space.is_aperiodic(omega, bound)));
  std::size_t count = 0;
  for (const OrbitMember& m : space.orbit_members(omega, bound)) {
    Record r;
    r["type"] = "member";
    r["path"] = space.format(m.path);
    r["a"] = g.format(m.a);
    r["j"] = m.j.to_string();
    s.add(std::move(r));
    ++count;
  }
  Record r;
  r["type"] = "count";
  r["base"] = space.format(omega);
  r["bound"] = bound.to_string();
  r["members"] = count;
  s.add(std::move(r));
  return kOk;
}

Representation build(Session& s, AtomicRepSpec spec) {
  try {
    return Representation(std::move(spec));
  } catch (const Error& e) {
    s.input_error(std::string(to_string(e.code())), e.what());
  }
}

Record decisions_record(const Representation& rep) {
  Record r;
  r["type"] = "decisions";
  r["orbits"] = rep.spec().orbits.size();
  r["window"] = rep.spec().window.to_string();
  r["window_dimension"] = rep.window().size();
  r["irreducible"] = is_irreducible(rep.spec());
  r["monic"] = is_monic(rep.spec());
  return r;
}

int rep_verify(Session& s) {
  Representation rep = build(s, s.rep_spec(s.opts().file));
  Degree bound = s.check_bound(rep);
  auto sample = sample_points(rep, s.opts().sample);
  Record info = decisions_record(rep);
  info["bound"] = bound.to_string();
  info["sample"] = sample.size();
  s.add(std::move(info));
  s.add_checks("cuntz-krieger", verify_ck(rep, sample, bound));
  s.add_checks("measure", verify_pvm_identities(rep, sample, bound));
  s.add_checks("purely-atomic", verify_purely_atomic(rep));
  s.add_checks("permutative", verify_permutative(rep, sample, bound));
  s.add_checks("semibranching", as_semibranching(rep, sample, bound));
  return -1;
}

int rep_compare(Session& s) {
  AtomicRepSpec a = s.rep_spec(s.opts().file);
  AtomicRepSpec b = s.rep_spec(s.opts().second);
  if (!(a.graph.skeleton() == b.graph.skeleton())) {
    s.input_error("GraphMismatch", "the two representations are over different graphs");
  }
  EquivalenceVerdict verdict = unitarily_equivalent(a, b);
  s.add(io::equivalence_record(verdict));
  Record d;
  d["type"] = "disjointness";
  d["disjoint"] = are_disjoint(a, b);
  s.add(std::move(d));
  if (!verdict.equivalent) return kCheckFailed;


  Representation ra = build(s, std::move(a));
  Representation rb = build(s, std::move(b));
  Intertwiner u = Intertwiner::build(ra, rb);
  Degree bound = s.check_bound(ra);
  s.add_checks("intertwiner", verify_intertwiner(u, sample_points(ra, s.opts().sample),
                                                 sample_points(rb, s.opts().sample), bound));
  return -1;
}

int rep_decompose(Session& s) {
  Representation rep = build(s, s.rep_spec(s.opts().file));
  Degree bound = s.check_bound(rep);
  SliceDecomposition dec = decompose_slices(rep, bound, s.opts().sample);
  s.add(decisions_record(rep));
  for (std::size_t o = 0; o < dec.base_periodicity.size(); ++o) {
    s.add(periodicity_record(o, dec.base_periodicity[o]));
  }
  for (const Slice& slice : dec.slices) {
    Record r;
    r["type"] = "slice";
    r["orbit"] = slice.orbit + 1;
    r["fiber"] = slice.fiber;
    r["points"] = slice.points.size();
    r["invariant"] = slice.invariant;
    r["encoding_injective"] = slice.encoding_injective;
    s.add(std::move(r));
  }
  s.add_checks("slices", dec.report);
  s.add_checks("semibranching", as_semibranching(rep, sample_points(rep, s.opts().sample), bound));
  return -1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-rank graph path spaces and atomic representations", "kgraph"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON Lines instead of text");
    sub->add_option("--window", o.window, "Window degree N1,...,Nk (default 3,...,3)");
  };
  auto rep_flags = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--sample", o.sample, "Basis points checked (default 200)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--bound", o.bound, "Largest degree of checked morphisms");
  };

  std::vector<std::pair<CLI::App*, int (*)(Session&)>> commands;
  auto* v = app.add_subcommand("validate", "Check squares, cube condition and source-freeness");
  v->add_option("graph", o.file, "Graph file")->required();
  common(v);
  commands.emplace_back(v, validate);

  auto* p = app.add_subcommand("paths", "List morphisms of one degree, or eventually periodic paths");
  p->add_option("graph", o.file, "Graph file")->required();
  p->add_option("--degree", o.degree, "Degree of listed morphisms (default 1,...,1)");
  p->add_option("--vertex", o.vertex, "Only morphisms with this range");
  p->add_option("--cycle-bound", o.cycle_bound, "List infinite paths with cycles up to this degree");
  p->add_option("--prefix-bound", o.prefix_bound, "Prefix bound for --cycle-bound (default 0)");
  common(p);
  commands.emplace_back(p, paths);

  auto* l = app.add_subcommand("lmin", "Minimal common extensions of two paths");
  l->add_option("graph", o.file, "Graph file")->required();
  l->add_option("--left", o.left, "Edge word, range on the left")->required();
  l->add_option("--right", o.right, "Edge word, range on the left")->required();
  common(l);
  commands.emplace_back(l, lmin);

  auto* b = app.add_subcommand("orbit", "Enumerate the orbit of an eventually periodic path");
  b->add_option("graph", o.file, "Graph file")->required();
  b->add_option("--cycle", o.cycle, "Cycle edge word")->required();
  b->add_option("--prefix", o.prefix, "Prefix edge word");
  common(b);
  commands.emplace_back(b, orbit);

  auto* rv = app.add_subcommand("rep-verify", "Check a representation against its defining relations");
  rv->add_option("rep", o.file, "Representation file")->required();
  rep_flags(rv);
  commands.emplace_back(rv, rep_verify);

  auto* rc = app.add_subcommand("rep-compare", "Decide unitary equivalence of two representations");
  rc->add_option("first", o.file, "Representation file")->required();
  rc->add_option("second", o.second, "Representation file")->required();
  rep_flags(rc);
  commands.emplace_back(rc, rep_compare);

  auto* rd = app.add_subcommand("rep-decompose", "Split a representation into fiber slices");
  rd->add_option("rep", o.file, "Representation file")->required();
  rep_flags(rd);
  commands.emplace_back(rd, rep_decompose);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Session s(sub->get_name(), o, out, err);
    try {
      return s.finish(handler(s));
    } catch (const InputError&) {
      return s.finish(kInputError);
    } catch (const Error& e) {
      Record r;
      r["type"] = "error";
      r["code"] = std::string(to_string(e.code()));
      r["message"] = e.what();
      s.add(std::move(r));
      s.fail();
      err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
      return kCheckFailed;
    }
  }
  return kInputError;
}

}  // namespace kgraph::cli
