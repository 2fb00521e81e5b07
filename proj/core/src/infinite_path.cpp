#include "kgraph/infinite_path.hpp"

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

constexpr std::size_t kStreamLimit = 1u << 20;

Morphism materialize(const KGraph& graph, const EdgeStream& stream, const Degree& depth) {
  if (depth.rank() != graph.rank()) throw Error(ErrorCode::RankMismatch, "lazy depth");
  std::vector<EdgeId> word;
  Degree seen = Degree::zero(graph.rank());
  while (!leq(depth, seen)) {
    if (word.size() == kStreamLimit) {
      throw Error(ErrorCode::InvalidPath, "edge stream misses a color");
    }
    EdgeId e = stream(word.size());
    word.push_back(e);
    seen[graph.edge(e).color] += 1;
  }
  if (word.empty()) return graph.vertex(graph.edge(stream(0)).range);
  return graph.factorize(graph.normal_form(word), depth).first;
}

}  // namespace

std::shared_ptr<const LazySource> LazySource::create(const KGraph& graph, std::string label,
                                                     EdgeStream stream, Degree depth) {
  Morphism window = materialize(graph, stream, depth);
  return std::shared_ptr<const LazySource>(
      new LazySource(std::move(label), std::move(stream), std::move(depth), std::move(window)));
}

std::shared_ptr<const LazySource> LazySource::with_depth(const KGraph& graph,
                                                         Degree depth) const {
  return create(graph, label_, stream_, std::move(depth));
}

VertexId InfinitePath::range() const {
  if (auto* p = periodic()) return p->prefix.range();
  return lazy()->prefix.range();
}

std::optional<Degree> InfinitePath::depth() const {
  const LazyPath* p = lazy();
  if (!p) return std::nullopt;
  return p->prefix.degree() + (p->source->depth() - p->offset);
}

}  // namespace kgraph
