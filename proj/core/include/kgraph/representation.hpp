#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/rep_spec.hpp"
#include "kgraph/set_expr.hpp"
#include "kgraph/vec.hpp"

namespace kgraph {

/// The permutative representation defined by an AtomicRepSpec on the basis
/// {e_(γ,ℓ)}: t_λ e_(γ,ℓ) = e_(λγ,ℓ) when s(λ) = r(γ), else 0.
///
/// Paths are interned on first use, so operators may reach points outside
/// the enumerated window. Lazy bases are materialized deep enough for the
/// window; running past that raises WindowExceeded. Copies share state and
/// every member is safe to call concurrently.
class Representation {
 public:
  /// Throws InvalidSpec for zero multiplicities or colliding orbits.
  explicit Representation(AtomicRepSpec spec);

  const AtomicRepSpec& spec() const;
  const KGraph& graph() const;
  const PathSpace& space() const;
  /// Window basis: orbit by orbit, prefixes a and shifts j in graded order,
  /// then fiber.
  const std::vector<IndexPoint>& window() const;
  /// Distinct window paths, as point ids, in window order.
  const std::vector<std::size_t>& window_paths() const;
  /// Key depth used to bucket interned paths.
  const Degree& resolution() const;

  InfinitePath path(std::size_t point) const;
  std::size_t orbit_of(std::size_t point) const;
  std::size_t point_count() const;
  /// Id of an interned path equal to x.
  std::optional<std::size_t> find_point(const InfinitePath& x) const;
  /// find_point, else interns x when it lies in one of the declared orbits.
  std::optional<std::size_t> locate(const InfinitePath& x) const;
  /// (a, j) with path(point) = a·σ^j(base) for window paths.
  std::optional<std::pair<Morphism, Degree>> decomposition(std::size_t point) const;

  bool in_J(const Morphism& lambda, IndexPoint i) const;
  bool in_K(const Morphism& lambda, IndexPoint i) const;
  /// σ̃_λ(i), nullopt off J_λ. Includes swap mutations.
  std::optional<IndexPoint> sigma(const Morphism& lambda, IndexPoint i) const;
  /// σ̃^n(i).
  IndexPoint coding(const Degree& n, IndexPoint i) const;

  Vec t(const Morphism& lambda, const Vec& v) const;
  Vec t_star(const Morphism& lambda, const Vec& v) const;
  /// P(S) v, diagonal in the basis.
  Vec pvm(const SetExpr& s, const Vec& v) const;
  bool contains(const SetExpr& s, IndexPoint i) const;

  /// dim P({x}): the multiplicity of the orbit containing x, else 0.
  std::uint32_t atom_dimension(const InfinitePath& x) const;
  /// E(i)(0, n): the unique λ ∈ Λ^n with i ∈ K_λ.
  Morphism encoding(IndexPoint i, const Degree& n) const;
  IndexPoint shift_index(IndexPoint i, const Degree& n) const { return coding(n, i); }

  std::string format(IndexPoint i) const;
  std::string format(const Vec& v) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Every window basis point when there are at most `limit`, otherwise a
/// deterministic pseudo-random subsample of that size.
std::vector<IndexPoint> sample_points(const Representation& rep, std::size_t limit = 200);

}  // namespace kgraph
