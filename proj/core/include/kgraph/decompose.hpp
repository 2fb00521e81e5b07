#pragma once

#include <vector>

#include "kgraph/verify.hpp"

namespace kgraph {

/// H_ℓ restricted to one orbit: span{e_(γ,ℓ)} over the window.
struct Slice {
  std::size_t orbit = 0;
  std::uint32_t fiber = 1;
  std::vector<IndexPoint> points;
  bool invariant = false;
  /// Distinct points of the slice have distinct encodings E(i).
  bool encoding_injective = false;
};

struct SliceDecomposition {
  std::vector<Slice> slices;
  /// Per orbit, the periodicity verdict for the base at window depth.
  std::vector<Periodicity> base_periodicity;
  CheckReport report;
};

/// Splits the window into fiber slices, checks each is invariant under t_λ
/// and t*_λ (d(λ) ≤ bound) on up to `sample_limit` points per slice, and
/// checks the encoding map separates the slice's points.
SliceDecomposition decompose_slices(const Representation& rep, const Degree& bound,
                                    std::size_t sample_limit = 200);

}  // namespace kgraph
