#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

class KGraph;

/// A finite path in color-normal form: all color-1 edges first, then color 2,
/// and so on, read with the range on the left. Only KGraph produces these.
class Morphism {
 public:
  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  const Degree& degree() const noexcept { return degree_; }
  bool is_vertex() const noexcept { return edges_.empty(); }

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;

 private:
  friend class KGraph;
  Morphism(VertexId range, VertexId source, std::vector<EdgeId> edges, Degree degree)
      : edges_(std::move(edges)), degree_(std::move(degree)), range_(range), source_(source) {}

  // edges_ first so that <=> groups by word.
  std::vector<EdgeId> edges_;
  Degree degree_;
  VertexId range_;
  VertexId source_;
};

/// Pair (α, β) with λα = ηβ and d(λα) = d(λ) ∨ d(η).
struct MinimalExtension {
  Morphism alpha;
  Morphism beta;

  friend bool operator==(const MinimalExtension&, const MinimalExtension&) = default;
  friend auto operator<=>(const MinimalExtension&, const MinimalExtension&) = default;
};

struct GraphProperties {
  bool source_free = false;
  bool strongly_connected = false;
  bool finite = true;
};

namespace violation {
/// A square entry that is not a composable two-colored pair sharing endpoints.
struct SquareMalformed {
  std::size_t square_index;
  std::string reason;
};
/// Colors are zero-based; v is the common range, w the common source.
struct SquareNotBijective {
  VertexId v;
  VertexId w;
  std::size_t i;
  std::size_t j;
};
struct CubeInconsistent {
  std::vector<EdgeId> path;
  std::vector<EdgeId> first_result;
  std::vector<EdgeId> second_result;
};
struct NotSourceFree {
  VertexId v;
  std::size_t color;
};
}  // namespace violation

using Violation = std::variant<violation::SquareMalformed, violation::SquareNotBijective,
                               violation::CubeInconsistent, violation::NotSourceFree>;

std::string describe(const Skeleton& skeleton, const Violation& v);

/// A validated k-graph. Copies share the underlying data.
class KGraph {
 public:
  using ValidationResult = std::variant<KGraph, std::vector<Violation>>;

  /// Checks square bijectivity, cube consistency and source-freeness and
  /// reports every violation found.
  static ValidationResult validate(Skeleton skeleton);
  /// validate() that throws InvalidSpec with the first violation.
  static KGraph from_skeleton(Skeleton skeleton);

  const Skeleton& skeleton() const noexcept;
  std::size_t rank() const noexcept;
  std::size_t vertex_count() const noexcept;
  const Edge& edge(EdgeId e) const;
  /// Edges of the given color whose range is v, in declaration order.
  const std::vector<EdgeId>& edges_into(VertexId v, std::size_t color) const;

  Morphism vertex(VertexId v) const;
  Morphism edge_morphism(EdgeId e) const;
  /// Normal form of a composable edge list; throws NotComposable.
  Morphism normal_form(const std::vector<EdgeId>& word) const;
  /// As normal_form but for an empty word the vertex must be given.
  Morphism normal_form(const std::vector<EdgeId>& word, VertexId empty_vertex) const;
  Morphism compose(const Morphism& mu, const Morphism& nu) const;
  /// λ = μν with d(μ) = m.
  std::pair<Morphism, Morphism> factorize(const Morphism& lambda, const Degree& m) const;
  /// λ(p, q).
  Morphism segment(const Morphism& lambda, const Degree& p, const Degree& q) const;

  /// vΛ^n in lexicographic edge order.
  std::vector<Morphism> enumerate(VertexId v, const Degree& n) const;
  /// Every λ with r(λ) = v and d(λ) ≤ bound, grouped by degree in graded order.
  std::vector<Morphism> enumerate_up_to(VertexId v, const Degree& bound) const;
  /// enumerate_up_to over all vertices.
  std::vector<Morphism> morphisms_up_to(const Degree& bound) const;

  std::vector<MinimalExtension> lambda_min(const Morphism& lambda, const Morphism& eta) const;

  GraphProperties properties() const;

  /// The square partner of the two-edge path `a b` when the colors differ.
  std::pair<EdgeId, EdgeId> swap(EdgeId a, EdgeId b) const;

  /// Rewrites a composable word so its colors follow `pattern` (same multiset).
  std::vector<EdgeId> reorder(std::vector<EdgeId> word,
                              const std::vector<std::size_t>& pattern) const;

  std::string vertex_name(VertexId v) const { return skeleton().vertex_name(v); }
  /// "[e,e|h,g]" with one block per color, or the vertex name for identities.
  std::string format(const Morphism& m) const;
  /// Edge names separated by spaces, or the vertex name.
  std::string format_word(const Morphism& m) const;

  friend bool operator==(const KGraph& a, const KGraph& b) { return a.data_ == b.data_; }

 private:
  struct Data;
  explicit KGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  Degree degree_of(const std::vector<EdgeId>& word) const;
  void check_composable(const std::vector<EdgeId>& word) const;

  std::shared_ptr<const Data> data_;
};

}  // namespace kgraph
