#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A colored edge. Colors are zero-based internally; files and reports use 1..k.
struct Edge {
  std::string name;
  std::size_t color = 0;
  VertexId source = 0;
  VertexId range = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One factorization rule: the path `left_first left_second` (range on the
/// left) is identified with `right_first right_second`.
struct Square {
  EdgeId left_first = 0;
  EdgeId left_second = 0;
  EdgeId right_first = 0;
  EdgeId right_second = 0;

  friend bool operator==(const Square&, const Square&) = default;
};

/// The colored-graph data of a k-graph together with its square pairings.
/// Nothing beyond endpoint existence is checked here; see KGraph::validate.
class Skeleton {
 public:
  explicit Skeleton(std::size_t rank = 1) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Square>& squares() const noexcept { return squares_; }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  VertexId add_vertex(std::string name);
  /// `color` is zero-based. Throws InvalidSpec on unknown endpoints or bad color.
  EdgeId add_edge(std::string name, std::size_t color, VertexId source, VertexId range);
  void add_square(Square square);

  friend bool operator==(const Skeleton&, const Skeleton&) = default;

 private:
  std::size_t rank_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
};

/// Name-based construction helper, mostly for fixtures.
class SkeletonBuilder {
 public:
  explicit SkeletonBuilder(std::size_t rank) : skeleton_(rank) {}

  SkeletonBuilder& vertex(std::string name);
  /// `color` is one-based, as in graph files.
  SkeletonBuilder& edge(std::string name, std::size_t color, std::string_view from,
                        std::string_view to);
  SkeletonBuilder& square(std::string_view a, std::string_view b, std::string_view c,
                          std::string_view d);

  Skeleton build() const { return skeleton_; }

 private:
  EdgeId edge_id(std::string_view name) const;
  Skeleton skeleton_;
};

}  // namespace kgraph
