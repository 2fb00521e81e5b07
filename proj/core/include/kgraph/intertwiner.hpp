#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kgraph/linear.hpp"
#include "kgraph/verify.hpp"

namespace kgraph {

/// A decomposition γ = a·σ^j(ω) of a path over an orbit base.
struct Decomposition {
  Morphism a;
  Degree j;
};

/// Unitary U: H_A → H_B assembled orbit by orbit from base unitaries U_ω
/// (mult_B × mult_A, acting on the fibers over A's base ω). On the fiber of
/// γ = a·σ^j(ω) it acts as t̃_a t̃*_ω(0,j) U_ω t_ω(0,j) t*_a.
class Intertwiner {
 public:
  /// `units[o]` is U_ω for orbit o of A; empty means identity everywhere.
  /// Throws NotInOrbit when the orbit classes differ, MultiplicityMismatch,
  /// InvalidSpec for a non-unitary or wrongly sized U_ω, and NotWellDefined
  /// when two window decompositions of a point give different images.
  static Intertwiner build(const Representation& a, const Representation& b,
                           std::vector<Matrix> units = {});

  const Representation& source() const noexcept { return a_; }
  const Representation& target() const noexcept { return b_; }
  /// B's orbit matched with orbit o of A.
  std::size_t target_orbit(std::size_t o) const { return target_orbit_.at(o); }
  const Matrix& unit(std::size_t o) const { return units_.at(o); }

  Vec apply(const Vec& v) const;
  Vec apply_adjoint(const Vec& w) const;

  /// All (a, j) with a·σ^j(ω) = path(point), d(a) and j ≤ A's window.
  std::vector<Decomposition> decompositions(std::size_t point) const;
  /// The image of e_i computed through one particular decomposition.
  Vec apply_via(IndexPoint i, const Decomposition& d) const;

 private:
  Intertwiner(Representation a, Representation b) : a_(std::move(a)), b_(std::move(b)) {}

  Decomposition decompose_source(std::size_t point) const;
  Decomposition decompose_target(std::size_t point, std::size_t orbit) const;

  Representation a_;
  Representation b_;
  std::vector<std::size_t> target_orbit_;
  std::vector<Matrix> units_;
  // Point ids of A's bases inside B.
  std::vector<std::size_t> base_in_b_;
};

/// Pointwise checks: U t_λ = t̃_λ U and U t*_λ = t̃*_λ U on sample_a,
/// U* t̃_λ = t_λ U* on sample_b, U*U = 1 and UU* = 1, well-definedness
/// across every window decomposition, and P̃({γ})U = UP({γ}).
CheckReport verify_intertwiner(const Intertwiner& u, const std::vector<IndexPoint>& sample_a,
                               const std::vector<IndexPoint>& sample_b, const Degree& bound);

}  // namespace kgraph
