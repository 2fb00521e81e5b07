#include "kgraph/vec.hpp"

namespace kgraph {

void Vec::add(IndexPoint i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Vec::get(IndexPoint i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Scalar() : it->second;
}

mpq_class Vec::norm_squared() const {
  mpq_class total = 0;
  for (const auto& [i, c] : terms_) total += c.norm();
  return total;
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out;
  if (s.is_zero()) return out;
  for (const auto& [i, c] : v.terms_) out.terms_.emplace(i, s * c);
  return out;
}

}  // namespace kgraph
