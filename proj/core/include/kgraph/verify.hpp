#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kgraph/representation.hpp"

namespace kgraph {

struct CheckFailure {
  std::string relation;
  std::string instance;
  std::string witness;
};

/// Pass/fail tallies per relation plus a reproducible record of each failure.
class CheckReport {
 public:
  struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
  };

  /// Records one instance; `describe` runs only on failure and returns
  /// {instance, witness}.
  void check(const std::string& relation, bool ok,
             const std::function<std::pair<std::string, std::string>()>& describe);
  void merge(const CheckReport& other);

  bool ok() const noexcept { return failures_.empty(); }
  std::size_t instances() const;
  const std::map<std::string, Tally>& tallies() const noexcept { return tallies_; }
  const std::vector<CheckFailure>& failures() const noexcept { return failures_; }

 private:
  std::map<std::string, Tally> tallies_;
  std::vector<CheckFailure> failures_;
};

/// CK1–CK4 and the Λ^min form of CK4, pointwise on each sample vector for all
/// morphisms of degree ≤ bound.
CheckReport verify_ck(const Representation& rep, const std::vector<IndexPoint>& sample,
                      const Degree& bound);

/// Projection-valued-measure identities for cylinders (parts a–d, with r(η)
/// as the range in the sum identity) and for atom singletons, pointwise.
CheckReport verify_pvm_identities(const Representation& rep, const std::vector<IndexPoint>& sample,
                                  const Degree& bound);

/// Window form of the purely-atomic conditions: window paths lie in their
/// orbits, atoms are nonzero, and the atom projections sum to the identity.
CheckReport verify_purely_atomic(const Representation& rep);

/// σ̃ is a bijection J_λ → K_λ, composes, the K_λ partition each degree, and
/// the encoding map intertwines σ̃ with prefixing and shifting.
CheckReport verify_permutative(const Representation& rep, const std::vector<IndexPoint>& sample,
                               const Degree& bound);

/// The semibranching conditions with D_λ = J_λ, R_λ = K_λ, coding maps σ̃^n,
/// counting measure and Radon–Nikodym derivative 1.
CheckReport as_semibranching(const Representation& rep, const std::vector<IndexPoint>& sample,
                             const Degree& bound);

}  // namespace kgraph
