#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "kgraph/scalar.hpp"

namespace kgraph {

/// Basis index (γ, ℓ): `point` identifies the path γ inside one
/// Representation, `fiber` is ℓ ∈ {1..multiplicity}.
struct IndexPoint {
  std::size_t point = 0;
  std::uint32_t fiber = 1;

  friend bool operator==(const IndexPoint&, const IndexPoint&) = default;
  friend auto operator<=>(const IndexPoint&, const IndexPoint&) = default;
};

/// Finitely supported vector with exact coefficients; zeros are never stored.
class Vec {
 public:
  using Map = std::map<IndexPoint, Scalar>;

  Vec() = default;
  static Vec basis(IndexPoint i) {
    Vec v;
    v.add(i, 1);
    return v;
  }

  void add(IndexPoint i, const Scalar& c);
  Scalar get(IndexPoint i) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  /// Σ |c|².
  mpq_class norm_squared() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, const Vec& v);
  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  Map terms_;
};

}  // namespace kgraph
