#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kgraph/path_space.hpp"

namespace kgraph {

/// Finite Boolean expression over cylinder sets Z(λ) and singletons {x},
/// plus images and preimages under prefixing and shifting.
class SetExpr {
 public:
  static SetExpr cylinder(Morphism lambda);
  static SetExpr atom(InfinitePath x);
  static SetExpr full();
  static SetExpr empty();
  static SetExpr complement(SetExpr s);
  static SetExpr unite(std::vector<SetExpr> parts);
  static SetExpr intersect(std::vector<SetExpr> parts);
  static SetExpr prefix_image(Morphism lambda, SetExpr s);
  static SetExpr prefix_preimage(Morphism lambda, SetExpr s);
  static SetExpr shift_preimage(Degree n, SetExpr s);

  /// x ∈ S. Atoms compare with PathSpace::equal (lazy agreement counts).
  bool contains(const PathSpace& space, const InfinitePath& x) const;
  std::string describe(const PathSpace& space) const;

 private:
  struct Node;
  template <class T>
  static SetExpr make(T value);
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace kgraph
