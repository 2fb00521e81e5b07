#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/representation.hpp"

namespace kgraph {

/// Exactly one orbit, carried with multiplicity 1.
bool is_irreducible(const AtomicRepSpec& spec);
/// Every orbit has multiplicity 1.
bool is_monic(const AtomicRepSpec& spec);

/// No orbit of `a` meets an orbit of `b`. Both specs must be over the same
/// graph (equal skeletons); throws Undecided when a lazy pair cannot be
/// settled at the available depth.
bool are_disjoint(const AtomicRepSpec& a, const AtomicRepSpec& b);

struct EquivalenceVerdict {
  bool equivalent = false;
  /// Empty when equivalent, else "support" or "multiplicity".
  std::string reason;
  /// (orbit of a, orbit of b) pairs lying in the same orbit class.
  std::vector<std::pair<std::size_t, std::size_t>> matched;
};

/// Equivalent iff the orbits correspond bijectively with equal
/// multiplicities. Same preconditions and errors as are_disjoint.
EquivalenceVerdict unitarily_equivalent(const AtomicRepSpec& a, const AtomicRepSpec& b);

/// Index of the orbit of `spec` containing x. Throws Undecided when some
/// lazy comparison cannot be settled and nothing else matched.
std::optional<std::size_t> orbit_containing(const AtomicRepSpec& spec, const InfinitePath& x);

struct CyclicVector {
  /// ξ = Σ_n 2^-(n+1) e_(i_n) over the window basis in window order.
  Vec xi;
  /// Rank of {P(Z(λ))ξ : d(λ) ≤ window}.
  std::size_t rank = 0;
  /// Window basis size.
  std::size_t dimension = 0;

  bool spans() const noexcept { return rank == dimension; }
};

CyclicVector cyclic_vector(const Representation& rep);

/// ‖P({x})ξ‖².
mpq_class atom_mass(const Representation& rep, const Vec& xi, const InfinitePath& x);

}  // namespace kgraph
