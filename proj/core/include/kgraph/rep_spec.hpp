#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgraph/path_space.hpp"

namespace kgraph {

struct OrbitSpec {
  InfinitePath base;
  std::uint32_t multiplicity = 1;
};

/// A purely atomic permutative representation: the disjoint union of the
/// listed orbits, each carried with the given multiplicity.
struct AtomicRepSpec {
  KGraph graph;
  std::vector<OrbitSpec> orbits;
  /// Enumeration depth for prefixes a and shifts j in a·σ^j(ω).
  Degree window;
  /// Test hook: for each edge e, the images of the first two window points
  /// of J_e under t_e are exchanged. t*_e is left alone.
  std::vector<EdgeId> swap_mutations;
};

struct SpecIssue {
  enum class Kind { ZeroMultiplicity, OrbitCollision, Undecided };
  Kind kind;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;
};

/// Multiplicities ≥ 1 and pairwise distinct orbits. Undecided lazy pairs are
/// reported with Kind::Undecided and treated as distinct.
std::vector<SpecIssue> check_spec(const AtomicRepSpec& spec);

}  // namespace kgraph
