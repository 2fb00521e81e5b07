#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// n ↦ the n-th edge (0-based) of a one-dimensional edge sequence that
/// describes an infinite path when read left to right.
using EdgeStream = std::function<EdgeId(std::size_t)>;

/// A materialized window x(0, depth) of a lazily generated infinite path.
class LazySource {
 public:
  /// `label` must identify the stream: equal labels mean equal paths.
  static std::shared_ptr<const LazySource> create(const KGraph& graph, std::string label,
                                                  EdgeStream stream, Degree depth);

  const std::string& label() const noexcept { return label_; }
  VertexId range() const noexcept { return window_.range(); }
  const Degree& depth() const noexcept { return depth_; }
  /// x(0, depth).
  const Morphism& window() const noexcept { return window_; }
  /// Same stream materialized to a different depth.
  std::shared_ptr<const LazySource> with_depth(const KGraph& graph, Degree depth) const;

 private:
  LazySource(std::string label, EdgeStream stream, Degree depth, Morphism window)
      : label_(std::move(label)), stream_(std::move(stream)), depth_(std::move(depth)),
        window_(std::move(window)) {}

  std::string label_;
  EdgeStream stream_;
  Degree depth_;
  Morphism window_;
};

/// prefix · cycle^∞ with s(prefix) = r(cycle) = s(cycle) and d(cycle) ≥ (1,…,1).
struct PeriodicPath {
  Morphism prefix;
  Morphism cycle;

  friend bool operator==(const PeriodicPath&, const PeriodicPath&) = default;
};

/// prefix · σ^offset(ω) where ω is the path materialized by `source`.
struct LazyPath {
  Morphism prefix;
  Degree offset;
  std::shared_ptr<const LazySource> source;

  friend bool operator==(const LazyPath& a, const LazyPath& b) {
    return a.prefix == b.prefix && a.offset == b.offset &&
           a.source->label() == b.source->label();
  }
};

/// An element of Λ^∞. Build through PathSpace so that invariants hold.
class InfinitePath {
 public:
  InfinitePath(PeriodicPath p) : repr_(std::move(p)) {}
  InfinitePath(LazyPath p) : repr_(std::move(p)) {}

  bool is_lazy() const noexcept { return std::holds_alternative<LazyPath>(repr_); }
  const PeriodicPath* periodic() const noexcept { return std::get_if<PeriodicPath>(&repr_); }
  const LazyPath* lazy() const noexcept { return std::get_if<LazyPath>(&repr_); }

  VertexId range() const;
  /// Largest n for which segments are available; nullopt for exact paths.
  std::optional<Degree> depth() const;

  /// Structural equality of representations (not path equality).
  friend bool operator==(const InfinitePath&, const InfinitePath&) = default;

 private:
  std::variant<PeriodicPath, LazyPath> repr_;
};

}  // namespace kgraph
