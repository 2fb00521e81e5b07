#include "kgraph/skeleton.hpp"

#include <algorithm>

#include "kgraph/error.hpp"

namespace kgraph {

std::optional<VertexId> Skeleton::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> Skeleton::find_edge(std::string_view name) const {
  auto it = std::find_if(edges_.begin(), edges_.end(),
                         [&](const Edge& e) { return e.name == name; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

VertexId Skeleton::add_vertex(std::string name) {
  vertices_.push_back(std::move(name));
  return static_cast<VertexId>(vertices_.size() - 1);
}

EdgeId Skeleton::add_edge(std::string name, std::size_t color, VertexId source, VertexId range) {
  if (color >= rank_) {
    throw Error(ErrorCode::InvalidSpec, "edge '" + name + "' has color outside 1.." +
                                            std::to_string(rank_));
  }
  if (source >= vertices_.size() || range >= vertices_.size()) {
    throw Error(ErrorCode::InvalidSpec, "edge '" + name + "' has an unknown endpoint");
  }
  edges_.push_back(Edge{std::move(name), color, source, range});
  return static_cast<EdgeId>(edges_.size() - 1);
}

void Skeleton::add_square(Square square) {
  for (EdgeId e : {square.left_first, square.left_second, square.right_first, square.right_second}) {
    if (e >= edges_.size()) throw Error(ErrorCode::InvalidSpec, "square refers to an unknown edge");
  }
  squares_.push_back(square);
}

SkeletonBuilder& SkeletonBuilder::vertex(std::string name) {
  skeleton_.add_vertex(std::move(name));
  return *this;
}

SkeletonBuilder& SkeletonBuilder::edge(std::string name, std::size_t color, std::string_view from,
                                       std::string_view to) {
  auto s = skeleton_.find_vertex(from);
  auto r = skeleton_.find_vertex(to);
  if (!s || !r) throw Error(ErrorCode::InvalidSpec, "unknown vertex in edge '" + name + "'");
  if (color == 0) throw Error(ErrorCode::InvalidSpec, "colors are numbered from 1");
  skeleton_.add_edge(std::move(name), color - 1, *s, *r);
  return *this;
}

SkeletonBuilder& SkeletonBuilder::square(std::string_view a, std::string_view b,
                                         std::string_view c, std::string_view d) {
  skeleton_.add_square(Square{edge_id(a), edge_id(b), edge_id(c), edge_id(d)});
  return *this;
}

EdgeId SkeletonBuilder::edge_id(std::string_view name) const {
  auto e = skeleton_.find_edge(name);
  if (!e) throw Error(ErrorCode::InvalidSpec, "unknown edge '" + std::string(name) + "'");
  return *e;
}

}  // namespace kgraph
