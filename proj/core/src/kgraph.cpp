#include "kgraph/kgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "kgraph/error.hpp"

namespace kgraph {

struct KGraph::Data {
  Skeleton skeleton;
  std::vector<std::vector<std::vector<EdgeId>>> into;  // [vertex][color]
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> rules;
};

namespace {

std::uint64_t pair_key(EdgeId a, EdgeId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

using Rules = std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>>;

std::vector<std::vector<std::vector<EdgeId>>> incidence(const Skeleton& sk) {
  std::vector<std::vector<std::vector<EdgeId>>> into(
      sk.vertices().size(), std::vector<std::vector<EdgeId>>(sk.rank()));
  for (EdgeId e = 0; e < sk.edges().size(); ++e) {
    const Edge& edge = sk.edge(e);
    into[edge.range][edge.color].push_back(e);
  }
  return into;
}

std::string square_problem(const Skeleton& sk, const Square& sq) {
  const Edge& a = sk.edge(sq.left_first);
  const Edge& b = sk.edge(sq.left_second);
  const Edge& c = sk.edge(sq.right_first);
  const Edge& d = sk.edge(sq.right_second);
  if (a.color == b.color) return "left side uses one color twice";
  if (c.color != b.color || d.color != a.color) return "right side colors do not mirror the left";
  if (a.source != b.range) return "left side is not composable";
  if (c.source != d.range) return "right side is not composable";
  if (a.range != c.range) return "sides have different ranges";
  if (b.source != d.source) return "sides have different sources";
  return {};
}

// Every normal form reachable from `word` by sorting rewrites, over all orders.
std::set<std::vector<EdgeId>> all_sorted_forms(const Skeleton& sk, const Rules& rules,
                                               const std::vector<EdgeId>& word) {
  std::set<std::vector<EdgeId>> seen{word};
  std::vector<std::vector<EdgeId>> stack{word};
  std::set<std::vector<EdgeId>> terminal;
  while (!stack.empty()) {
    auto w = std::move(stack.back());
    stack.pop_back();
    bool any = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (sk.edge(w[i]).color <= sk.edge(w[i + 1]).color) continue;
      any = true;
      auto it = rules.find(pair_key(w[i], w[i + 1]));
      if (it == rules.end()) continue;
      auto next = w;
      next[i] = it->second.first;
      next[i + 1] = it->second.second;
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
    if (!any) terminal.insert(std::move(w));
  }
  return terminal;
}

}  // namespace

std::string describe(const Skeleton& sk, const Violation& v) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, violation::SquareMalformed>) {
          out << "square " << x.square_index + 1 << " is malformed: " << x.reason;
        } else if constexpr (std::is_same_v<T, violation::SquareNotBijective>) {
          out << "squares between colors " << x.i + 1 << " and " << x.j + 1 << " from "
              << sk.vertex_name(x.w) << " to " << sk.vertex_name(x.v) << " are not a bijection";
        } else if constexpr (std::is_same_v<T, violation::CubeInconsistent>) {
          auto word = [&](const std::vector<EdgeId>& w) {
            std::string s;
            for (EdgeId e : w) s += (s.empty() ? "" : " ") + sk.edge(e).name;
            return s;
          };
          out << "path " << word(x.path) << " sorts to both " << word(x.first_result) << " and "
              << word(x.second_result);
        } else {
          out << "vertex " << sk.vertex_name(x.v) << " receives no edge of color " << x.color + 1;
        }
      },
      v);
  return out.str();
}

KGraph::ValidationResult KGraph::validate(Skeleton sk) {
  std::vector<Violation> violations;
  auto into = incidence(sk);
  const std::size_t k = sk.rank();
  const std::size_t nv = sk.vertices().size();

  // (v, w, i, j) -> pairing between ij-paths and ji-paths, i < j.
  using PathKey = std::pair<EdgeId, EdgeId>;
  std::map<PathKey, std::vector<PathKey>> low_to_high, high_to_low;
  bool squares_ok = true;
  for (std::size_t n = 0; n < sk.squares().size(); ++n) {
    const Square& sq = sk.squares()[n];
    if (auto problem = square_problem(sk, sq); !problem.empty()) {
      violations.push_back(violation::SquareMalformed{n, problem});
      squares_ok = false;
      continue;
    }
    PathKey left{sq.left_first, sq.left_second};
    PathKey right{sq.right_first, sq.right_second};
    if (sk.edge(sq.left_first).color > sk.edge(sq.left_second).color) std::swap(left, right);
    low_to_high[left].push_back(right);
    high_to_low[right].push_back(left);
  }

  std::set<std::tuple<VertexId, VertexId, std::size_t, std::size_t>> broken;
  for (VertexId v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        for (EdgeId a : into[v][i]) {
          for (EdgeId b : into[sk.edge(a).source][j]) {
            const auto& table = i < j ? low_to_high : high_to_low;
            auto it = table.find({a, b});
            if (it == table.end() || it->second.size() != 1) {
              broken.emplace(v, sk.edge(b).source, std::min(i, j), std::max(i, j));
            }
          }
        }
      }
    }
  }
  for (const auto& [v, w, i, j] : broken) {
    violations.push_back(violation::SquareNotBijective{v, w, i, j});
  }

  Rules rules;
  for (const auto& [low, highs] : low_to_high) {
    if (highs.size() != 1) continue;
    rules[pair_key(low.first, low.second)] = highs.front();
  }
  for (const auto& [high, lows] : high_to_low) {
    if (lows.size() != 1) continue;
    rules[pair_key(high.first, high.second)] = lows.front();
  }

  if (squares_ok && broken.empty() && k >= 3) {
    for (EdgeId a = 0; a < sk.edges().size(); ++a) {
      const Edge& ea = sk.edge(a);
      for (std::size_t cb = 0; cb < k; ++cb) {
        if (cb == ea.color) continue;
        for (EdgeId b : into[ea.source][cb]) {
          for (std::size_t cc = 0; cc < k; ++cc) {
            if (cc == ea.color || cc == cb) continue;
            for (EdgeId c : into[sk.edge(b).source][cc]) {
              std::vector<EdgeId> path{a, b, c};
              auto forms = all_sorted_forms(sk, rules, path);
              if (forms.size() > 1) {
                violations.push_back(
                    violation::CubeInconsistent{path, *forms.begin(), *std::next(forms.begin())});
              }
            }
          }
        }
      }
    }
  }

  for (VertexId v = 0; v < nv; ++v) {
    for (std::size_t c = 0; c < k; ++c) {
      if (into[v][c].empty()) violations.push_back(violation::NotSourceFree{v, c});
    }
  }

  if (!violations.empty()) return violations;
  auto data = std::make_shared<Data>();
  data->skeleton = std::move(sk);
  data->into = std::move(into);
  data->rules = std::move(rules);
  return KGraph(std::move(data));
}

KGraph KGraph::from_skeleton(Skeleton skeleton) {
  Skeleton copy = skeleton;
  auto result = validate(std::move(skeleton));
  if (auto* violations = std::get_if<std::vector<Violation>>(&result)) {
    throw Error(ErrorCode::InvalidSpec, describe(copy, violations->front()));
  }
  return std::get<KGraph>(std::move(result));
}

const Skeleton& KGraph::skeleton() const noexcept { return data_->skeleton; }
std::size_t KGraph::rank() const noexcept { return data_->skeleton.rank(); }
std::size_t KGraph::vertex_count() const noexcept { return data_->skeleton.vertices().size(); }
const Edge& KGraph::edge(EdgeId e) const { return data_->skeleton.edge(e); }

const std::vector<EdgeId>& KGraph::edges_into(VertexId v, std::size_t color) const {
  return data_->into.at(v).at(color);
}

Morphism KGraph::vertex(VertexId v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::InvalidPath, "unknown vertex");
  return Morphism(v, v, {}, Degree::zero(rank()));
}

Morphism KGraph::edge_morphism(EdgeId e) const {
  const Edge& edge = this->edge(e);
  return Morphism(edge.range, edge.source, {e}, Degree::unit(rank(), edge.color));
}

std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId a, EdgeId b) const {
  auto it = data_->rules.find(pair_key(a, b));
  if (it == data_->rules.end()) {
    throw Error(ErrorCode::NotComposable,
                "no square for " + edge(a).name + " " + edge(b).name);
  }
  return it->second;
}

Degree KGraph::degree_of(const std::vector<EdgeId>& word) const {
  Degree d = Degree::zero(rank());
  for (EdgeId e : word) d[edge(e).color] += 1;
  return d;
}

void KGraph::check_composable(const std::vector<EdgeId>& word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= skeleton().edges().size()) {
      throw Error(ErrorCode::InvalidPath, "unknown edge at position " + std::to_string(i));
    }
    if (i > 0 && edge(word[i - 1]).source != edge(word[i]).range) {
      throw Error(ErrorCode::NotComposable, "at position " + std::to_string(i));
    }
  }
}

Morphism KGraph::normal_form(const std::vector<EdgeId>& word) const {
  if (word.empty()) throw Error(ErrorCode::InvalidPath, "empty word needs a vertex");
  return normal_form(word, edge(word.front()).range);
}

Morphism KGraph::normal_form(const std::vector<EdgeId>& word, VertexId empty_vertex) const {
  check_composable(word);
  if (word.empty()) return vertex(empty_vertex);
  std::vector<EdgeId> sorted;
  sorted.reserve(word.size());
  // Insertion sort by adjacent square swaps; confluence makes the order irrelevant.
  for (EdgeId e : word) {
    sorted.push_back(e);
    for (std::size_t t = sorted.size() - 1; t > 0; --t) {
      if (edge(sorted[t - 1]).color <= edge(sorted[t]).color) break;
      std::tie(sorted[t - 1], sorted[t]) = swap(sorted[t - 1], sorted[t]);
    }
  }
  VertexId r = edge(sorted.front()).range;
  VertexId s = edge(sorted.back()).source;
  Degree d = degree_of(sorted);
  return Morphism(r, s, std::move(sorted), std::move(d));
}

Morphism KGraph::compose(const Morphism& mu, const Morphism& nu) const {
  if (mu.source() != nu.range()) {
    throw Error(ErrorCode::SourceRangeMismatch,
                "s = " + vertex_name(mu.source()) + ", r = " + vertex_name(nu.range()));
  }
  if (mu.is_vertex()) return nu;
  if (nu.is_vertex()) return mu;
  std::vector<EdgeId> word = mu.edges();
  word.insert(word.end(), nu.edges().begin(), nu.edges().end());
  return normal_form(word);
}

std::vector<EdgeId> KGraph::reorder(std::vector<EdgeId> word,
                                    const std::vector<std::size_t>& pattern) const {
  if (pattern.size() != word.size()) throw Error(ErrorCode::RankMismatch, "pattern length");
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (edge(word[p]).color == pattern[p]) continue;
    std::size_t q = p + 1;
    while (q < word.size() && edge(word[q]).color != pattern[p]) ++q;
    if (q == word.size()) throw Error(ErrorCode::DegreeTooLarge, "pattern does not match word");
    for (std::size_t t = q; t > p; --t) {
      std::tie(word[t - 1], word[t]) = swap(word[t - 1], word[t]);
    }
  }
  return word;
}

std::pair<Morphism, Morphism> KGraph::factorize(const Morphism& lambda, const Degree& m) const {
  if (m.rank() != rank()) throw Error(ErrorCode::RankMismatch, "degree " + m.to_string());
  if (!leq(m, lambda.degree())) {
    throw Error(ErrorCode::DegreeTooLarge,
                m.to_string() + " exceeds " + lambda.degree().to_string());
  }
  if (m.is_zero()) return {vertex(lambda.range()), lambda};
  if (m == lambda.degree()) return {lambda, vertex(lambda.source())};

  std::vector<std::size_t> pattern;
  pattern.reserve(lambda.edges().size());
  Degree rest = lambda.degree() - m;
  for (std::size_t c = 0; c < rank(); ++c) pattern.insert(pattern.end(), m[c], c);
  for (std::size_t c = 0; c < rank(); ++c) pattern.insert(pattern.end(), rest[c], c);
  auto word = reorder(lambda.edges(), pattern);

  const std::size_t split = m.total();
  std::vector<EdgeId> head(word.begin(), word.begin() + split);
  std::vector<EdgeId> tail(word.begin() + split, word.end());
  VertexId mid = edge(head.back()).source;
  return {Morphism(lambda.range(), mid, std::move(head), m),
          Morphism(mid, lambda.source(), std::move(tail), std::move(rest))};
}

Morphism KGraph::segment(const Morphism& lambda, const Degree& p, const Degree& q) const {
  if (!leq(p, q) || !leq(q, lambda.degree())) {
    throw Error(ErrorCode::BadInterval, "(" + p.to_string() + ", " + q.to_string() +
                                            ") in degree " + lambda.degree().to_string());
  }
  return factorize(factorize(lambda, q).first, p).second;
}

std::vector<Morphism> KGraph::enumerate(VertexId v, const Degree& n) const {
  if (n.rank() != rank()) throw Error(ErrorCode::RankMismatch, "degree " + n.to_string());
  if (v >= vertex_count()) throw Error(ErrorCode::InvalidPath, "unknown vertex");
  std::vector<std::size_t> colors;
  for (std::size_t c = 0; c < rank(); ++c) colors.insert(colors.end(), n[c], c);

  std::vector<Morphism> out;
  std::vector<EdgeId> word;
  word.reserve(colors.size());
  auto dfs = [&](auto&& self, VertexId at) -> void {
    if (word.size() == colors.size()) {
      out.push_back(word.empty() ? vertex(v) : Morphism(v, at, word, n));
      return;
    }
    for (EdgeId e : data_->into[at][colors[word.size()]]) {
      word.push_back(e);
      self(self, edge(e).source);
      word.pop_back();
    }
  };
  dfs(dfs, v);
  return out;
}

std::vector<Morphism> KGraph::enumerate_up_to(VertexId v, const Degree& bound) const {
  std::vector<Morphism> out;
  for (const Degree& n : degrees_up_to(bound)) {
    auto level = enumerate(v, n);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

std::vector<Morphism> KGraph::morphisms_up_to(const Degree& bound) const {
  std::vector<Morphism> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    auto part = enumerate_up_to(v, bound);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<MinimalExtension> KGraph::lambda_min(const Morphism& lambda,
                                                 const Morphism& eta) const {
  if (lambda.range() != eta.range()) {
    throw Error(ErrorCode::RangeMismatch,
                vertex_name(lambda.range()) + " vs " + vertex_name(eta.range()));
  }
  const Degree top = join(lambda.degree(), eta.degree());
  std::vector<MinimalExtension> out;
  for (Morphism& alpha : enumerate(lambda.source(), top - lambda.degree())) {
    Morphism whole = compose(lambda, alpha);
    auto [head, beta] = factorize(whole, eta.degree());
    if (head == eta) out.push_back(MinimalExtension{std::move(alpha), std::move(beta)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphProperties KGraph::properties() const {
  GraphProperties p;
  p.source_free = true;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (std::size_t c = 0; c < rank(); ++c) {
      if (data_->into[v][c].empty()) p.source_free = false;
    }
  }
  // vΛw ≠ ∅ for all v, w: every vertex reaches every other along edges.
  p.strongly_connected = true;
  for (VertexId start = 0; start < vertex_count() && p.strongly_connected; ++start) {
    std::vector<bool> seen(vertex_count(), false);
    std::vector<VertexId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      VertexId at = stack.back();
      stack.pop_back();
      for (std::size_t c = 0; c < rank(); ++c) {
        for (EdgeId e : data_->into[at][c]) {
          VertexId next = edge(e).source;
          if (!seen[next]) {
            seen[next] = true;
            stack.push_back(next);
          }
        }
      }
    }
    p.strongly_connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
  return p;
}

std::string KGraph::format(const Morphism& m) const {
  if (m.is_vertex()) return vertex_name(m.range());
  std::string out = "[";
  std::size_t at = 0;
  for (std::size_t c = 0; c < rank(); ++c) {
    if (c > 0) out += '|';
    for (std::uint32_t n = 0; n < m.degree()[c]; ++n, ++at) {
      if (n > 0) out += ',';
      out += edge(m.edges()[at]).name;
    }
  }
  return out + "]";
}

std::string KGraph::format_word(const Morphism& m) const {
  if (m.is_vertex()) return vertex_name(m.range());
  std::string out;
  for (EdgeId e : m.edges()) {
    if (!out.empty()) out += ' ';
    out += edge(e).name;
  }
  return out;
}

}  // namespace kgraph
