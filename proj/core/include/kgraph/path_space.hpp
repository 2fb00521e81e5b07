#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kgraph/infinite_path.hpp"

namespace kgraph {

enum class Equality { Equal, NotEqual, EqualUpToDepth };

struct PathComparison {
  Equality verdict = Equality::NotEqual;
  /// For EqualUpToDepth: the depth to which segments were compared.
  std::optional<Degree> depth;

  /// Equal or EqualUpToDepth.
  bool same() const noexcept { return verdict != Equality::NotEqual; }
};

/// Result of is_aperiodic. For periodic verdicts σ^m(x) = σ^n(x) with m ≠ n;
/// `exact` is false when that was only observed on finite segments.
struct Periodicity {
  bool periodic = false;
  bool exact = true;
  Degree m;
  Degree n;
  /// For lazy paths, the depth the search covered.
  std::optional<Degree> depth;

  /// m - n when n ≤ m, the period reported for exact paths.
  std::optional<Degree> period() const;
};

/// σ^m(x) = σ^ℓ(y), i.e. the groupoid element (x, m - ℓ, y).
struct GroupoidWitness {
  InfinitePath x;
  Degree m;
  InfinitePath y;
  Degree l;
  /// False when the identity was only checked on finite segments.
  bool exact = true;

  std::vector<std::int64_t> lag() const;
};

/// γ = a·σ^j(ω) for the base ω of an orbit.
struct OrbitMember {
  InfinitePath path;
  Morphism a;
  Degree j;
};

/// Operations on Λ^∞ for one k-graph.
class PathSpace {
 public:
  explicit PathSpace(KGraph graph) : graph_(std::move(graph)) {}

  const KGraph& graph() const noexcept { return graph_; }

  /// prefix · cycle^∞; throws InvalidPath when cycle is not a positive-degree
  /// loop at s(prefix).
  InfinitePath periodic(const Morphism& prefix, const Morphism& cycle) const;
  /// cycle^∞.
  InfinitePath periodic(const Morphism& cycle) const;
  InfinitePath lazy(std::shared_ptr<const LazySource> source) const;
  /// Same path with its lazy source materialized to `source_depth`.
  InfinitePath rematerialize(const InfinitePath& x, const Degree& source_depth) const;

  /// Thue–Morse word over two same-colored loops e1, e2 at one vertex; after
  /// each letter the first declared loop of `cycle_color` and then of every
  /// remaining color is inserted. Colors are zero-based.
  std::shared_ptr<const LazySource> thue_morse(EdgeId e1, EdgeId e2, std::size_t cycle_color,
                                               const Degree& depth) const;

  /// x(0, n).
  Morphism segment(const InfinitePath& x, const Degree& n) const;
  /// σ^m(x).
  InfinitePath shift(const InfinitePath& x, const Degree& m) const;
  /// λx.
  InfinitePath prefix(const Morphism& lambda, const InfinitePath& x) const;
  PathComparison equal(const InfinitePath& x, const InfinitePath& y) const;
  Periodicity is_aperiodic(const InfinitePath& x, const Degree& depth) const;
  /// Witness or nullopt (not in the same orbit). Throws Undecided when a lazy
  /// path is involved and no shift match is found within the depth.
  std::optional<GroupoidWitness> in_same_orbit(const InfinitePath& x,
                                               const InfinitePath& y) const;
  /// Checks a witness on segments (exactly for periodic paths).
  bool check_witness(const GroupoidWitness& w) const;

  /// Distinct paths a·σ^j(ω) with d(a) ≤ bound and j ≤ bound, ordered by
  /// d(a) then j in graded order.
  std::vector<InfinitePath> orbit_enumerate(const InfinitePath& omega, const Degree& bound) const;
  /// orbit_enumerate with the first decomposition found for each path. With
  /// `distinct` false every pair (a, j) is returned, duplicates included.
  std::vector<OrbitMember> orbit_members(const InfinitePath& omega, const Degree& bound,
                                         bool distinct = true) const;
  /// Distinct eventually periodic paths with prefix degree ≤ prefix_bound and
  /// cycle degree ≤ cycle_bound.
  std::vector<InfinitePath> ep_paths(const Degree& prefix_bound, const Degree& cycle_bound) const;

  /// Tail representatives {σ^n(z)} of a periodic path z with empty prefix, each
  /// paired with its shift n. Finite since σ^{d(cycle)} fixes every element.
  std::vector<std::pair<InfinitePath, Degree>> tail_closure(const InfinitePath& x) const;

  std::string format(const InfinitePath& x) const;

 private:
  PeriodicPath normalize(PeriodicPath p) const;
  Morphism unroll(const PeriodicPath& p, const Degree& n) const;

  KGraph graph_;
};

/// Deduplicating store of paths, bucketed by x(0, key_depth) with path
/// equality inside a bucket. Lazy paths count as equal when they agree to
/// their common depth.
class PathCatalog {
 public:
  PathCatalog(const PathSpace& space, Degree key_depth)
      : space_(&space), key_depth_(std::move(key_depth)) {}

  std::optional<std::size_t> find(const InfinitePath& x) const;
  /// Index of the stored equal path, and whether x was new.
  std::pair<std::size_t, bool> insert(const InfinitePath& x);

  std::size_t size() const noexcept { return paths_.size(); }
  const InfinitePath& at(std::size_t i) const { return paths_.at(i); }
  const std::vector<InfinitePath>& paths() const noexcept { return paths_; }
  const Degree& key_depth() const noexcept { return key_depth_; }

 private:
  std::optional<std::size_t> find_in(const std::vector<std::size_t>& bucket,
                                     const InfinitePath& x) const;

  const PathSpace* space_;
  Degree key_depth_;
  std::vector<InfinitePath> paths_;
  std::map<Morphism, std::vector<std::size_t>> buckets_;
};

}  // namespace kgraph
